#include "kstab/chow.hpp"

#include <algorithm>

#include "kstab/error.hpp"
#include "kstab/kernels.hpp"

namespace kstab {

namespace {

void check_support(const PointSupport& q, const ToricTestConfig& tc) {
  if (q.support.empty()) throw Error(ErrorCode::kEmptySupport, "point has empty support");
  if (q.level < 1) throw Error(ErrorCode::kValidationError, "level must be positive");
  const LatticePolytope kp = tc.polytope().dilate(q.level);
  for (const auto& u : q.support)
    if (u.dim() != tc.dim() || !kp.contains(u))
      throw Error(ErrorCode::kValidationError, u.str() + " is not a lattice point of " + std::to_string(q.level) + "P");
}

ChowWeightReport report_from(const PointSupport& q, const std::map<LatticeVector, Rational>& normalized,
                             const ToricTestConfig& tc) {
  ChowWeightReport r;
  r.level = q.level;
  std::int64_t best = 0;
  bool first = true;
  for (const auto& u : q.support) {
    const std::int64_t w = tc.function().at_level(u, q.level);
    if (first || w > best) {
      best = w;
      r.specialization_support.clear();
    }
    if (first || w == best) r.specialization_support.push_back(u);
    first = false;
  }
  r.hm_weight_raw = best;
  r.chow_weight = normalized.at(r.specialization_support.front());
  return r;
}

}  // namespace

std::int64_t hm_weight(std::span<const std::int64_t> weights) {
  if (weights.empty()) throw Error(ErrorCode::kEmptySupport, "point has empty support");
  return -*std::min_element(weights.begin(), weights.end());
}

std::int64_t hm_weight(const PointSupport& q, const ToricTestConfig& tc) {
  check_support(q, tc);
  std::vector<std::int64_t> coordinate_weights;
  for (const auto& u : q.support) coordinate_weights.push_back(-tc.function().at_level(u, q.level));
  return hm_weight(coordinate_weights);
}

ChowWeightReport chow_weight(const PointSupport& q, const ToricTestConfig& tc) {
  check_support(q, tc);
  return report_from(q, sl_normalized_weights(tc, q.level), tc);
}

PointSupport vertex_point(const LatticeVector& v, std::int64_t level) { return {level, {level * v}}; }

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kVertex: return "vertex";
    case CandidateKind::kStratum: return "stratum";
    case CandidateKind::kFullSupport: return "full-support";
  }
  return "unknown";
}

std::vector<ChowCandidate> chow_candidates(const ToricTestConfig& tc, std::int64_t level) {
  const auto normalized = sl_normalized_weights(tc, level);
  std::vector<ChowCandidate> out;
  auto add = [&](CandidateKind kind, LatticeVector vertex, PointSupport q) {
    ChowWeightReport r = report_from(q, normalized, tc);
    out.push_back({kind, std::move(vertex), std::move(q), std::move(r)});
  };
  for (const auto& v : tc.polytope().vertices()) add(CandidateKind::kVertex, v, vertex_point(v, level));
  for (const auto& piece : tc.function().pieces()) {
    PointSupport stratum{level, {}};
    for (const auto& [u, _] : normalized)
      if (piece.at_level(u, level) == tc.function().at_level(u, level)) stratum.support.push_back(u);
    if (!stratum.support.empty()) add(CandidateKind::kStratum, LatticeVector(), std::move(stratum));
  }
  PointSupport full{level, {}};
  for (const auto& [u, _] : normalized) full.support.push_back(u);
  add(CandidateKind::kFullSupport, LatticeVector(), std::move(full));
  return out;
}

std::vector<ChowCandidate> positive_chow_candidates(const ToricTestConfig& tc, const ChowSearchOptions& opts) {
  for (std::int64_t k = opts.level; k <= opts.max_level; ++k) {
    auto all = chow_candidates(tc, k);
    std::erase_if(all, [](const ChowCandidate& c) { return c.report.chow_weight.sign() <= 0; });
    if (!all.empty()) return all;
  }
  return {};
}

ChowCandidate find_positive_chow_point(const ToricTestConfig& tc, const Rational& futaki,
                                       const ChowSearchOptions& opts) {
  if (tc.is_product()) throw Error(ErrorCode::kPreconditionViolated, "test configuration is a product");
  if (futaki.sign() > 0) throw Error(ErrorCode::kPreconditionViolated, "Donaldson-Futaki invariant is positive");
  auto found = positive_chow_candidates(tc, opts);
  if (found.empty()) {
    throw Error(ErrorCode::kNotFound, "no searched candidate has positive Chow weight at levels " +
                                          std::to_string(opts.level) + ".." + std::to_string(opts.max_level));
  }
  return std::move(found.front());
}

ChowCandidate find_positive_chow_point(const ToricTestConfig& tc, const ChowSearchOptions& opts) {
  if (tc.is_product()) throw Error(ErrorCode::kPreconditionViolated, "test configuration is a product");
  return find_positive_chow_point(tc, donaldson_futaki(tc).futaki, opts);
}

}  // namespace kstab
