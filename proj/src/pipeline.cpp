#include "kstab/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "kstab/error.hpp"
#include "kstab/model_io.hpp"

namespace kstab {

namespace {

std::vector<std::pair<std::int64_t, Rational>> sweep(const ToricTestConfig& tc, const LatticeVector& v,
                                                     std::int64_t first, std::int64_t last) {
  const auto gammas = gamma_range(first, last);
  std::vector<std::pair<std::int64_t, Rational>> out(gammas.size());
  std::vector<std::exception_ptr> errors(gammas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    try {
      const auto chop = chop_polytope(tc.polytope(), v, gammas[i]);
      out[i] = {gammas[i], donaldson_futaki(induced_config(tc, chop)).futaki};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// First index from which every sample is negative, or nullopt.
std::optional<std::size_t> negative_tail(const std::vector<std::pair<std::int64_t, Rational>>& samples) {
  std::optional<std::size_t> start;
  for (std::size_t i = samples.size(); i-- > 0;) {
    if (samples[i].second.sign() >= 0) break;
    start = i;
  }
  return start;
}

bool matches(Predicate p, const DFReport& df) {
  const int s = df.futaki.sign();
  switch (p) {
    case Predicate::kAny: return true;
    case Predicate::kProduct: return df.is_product;
    case Predicate::kNonProduct: return !df.is_product;
    case Predicate::kPositive: return s > 0;
    case Predicate::kNonPositive: return s <= 0;
    case Predicate::kNegative: return s < 0;
    case Predicate::kNonPositiveNonProduct: return s <= 0 && !df.is_product;
    case Predicate::kVanishingNonProduct: return s == 0 && !df.is_product;
  }
  return false;
}

std::vector<AffinePiece> piece_box(int n, std::int64_t bound) {
  std::vector<AffinePiece> out;
  std::array<std::int64_t, kMaxDim + 1> c{};
  c.fill(-bound);
  while (true) {
    out.push_back({LatticeVector(std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(n))), c[static_cast<std::size_t>(n)]});
    int i = n;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == bound) c[static_cast<std::size_t>(i--)] = -bound;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return out;
}

// C(n, k), saturating at limit + 1.
std::int64_t binomial_capped(std::int64_t n, std::int64_t k, std::int64_t limit) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r > limit ? limit + 1 : r.get_si();
}

}  // namespace

std::string input_hash(const ToricTestConfig& tc) {
  const std::string text = serialize(tc);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::kInvalidArgument, "SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

std::string_view to_string(DestabilizeStatus s) {
  switch (s) {
    case DestabilizeStatus::kCertificate: return "certificate";
    case DestabilizeStatus::kBudgetExhausted: return "budget_exhausted";
    case DestabilizeStatus::kNotFound: return "not_found";
  }
  return "unknown";
}

DestabilizeResult destabilize(const ToricTestConfig& tc, const DestabilizeOptions& opts) {
  if (opts.gamma_min < 2 || opts.gamma_max < opts.gamma_min)
    throw Error(ErrorCode::kValidationError, "gamma budget must be a range a:b with 2 <= a <= b");
  if (tc.is_product()) throw Error(ErrorCode::kPreconditionViolated, "test configuration is a product");
  DestabilizeResult result;
  result.df_input = donaldson_futaki(tc).futaki;
  if (result.df_input.sign() > 0)
    throw Error(ErrorCode::kPreconditionViolated, "Donaldson-Futaki invariant is positive: " + result.df_input.str());

  const auto candidates = positive_chow_candidates(tc, opts.chow);
  if (candidates.empty()) return result;
  result.status = DestabilizeStatus::kBudgetExhausted;

  for (const auto& c : candidates) {
    CandidateAttempt attempt{c.kind, c.point, c.report.chow_weight, "", {}};
    if (c.kind != CandidateKind::kVertex || !is_delzant_vertex(tc.polytope(), c.vertex)) {
      attempt.outcome = std::string(to_string(ErrorCode::kNonDelzantPoint));
      result.attempts.push_back(std::move(attempt));
      continue;
    }
    attempt.samples = sweep(tc, c.vertex, opts.gamma_min, opts.gamma_max);
    const auto tail = negative_tail(attempt.samples);
    if (!tail) {
      attempt.outcome = "BudgetExhausted";
      result.attempts.push_back(std::move(attempt));
      continue;
    }
    attempt.outcome = "certificate";
    DestabilizationCertificate cert;
    cert.input_hash = input_hash(tc);
    cert.df_input = result.df_input;
    cert.chosen_point = c.point;
    cert.vertex = c.vertex;
    cert.chow = c.report.chow_weight;
    cert.gamma_star = attempt.samples[*tail].first;
    cert.df_blowup_at_gamma_star = attempt.samples[*tail].second;
    cert.df_blowup_samples = attempt.samples;
    result.attempts.push_back(std::move(attempt));
    result.certificate = std::move(cert);
    result.status = DestabilizeStatus::kCertificate;
    break;
  }
  return result;
}

CertificateCheck verify_certificate(const ToricTestConfig& tc, const DestabilizationCertificate& cert) {
  CertificateCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };
  if (input_hash(tc) != cert.input_hash) fail("input hash differs");
  if (tc.is_product()) fail("input is a product configuration");
  const Rational f = donaldson_futaki(tc).futaki;
  if (f != cert.df_input) fail("F(input) = " + f.str() + ", certificate has " + cert.df_input.str());
  if (f.sign() > 0) fail("F(input) is positive");

  const auto& support = cert.chosen_point.support;
  if (support.size() != 1 || support.front() != cert.chosen_point.level * cert.vertex)
    fail("chosen point is not the singleton at the certified vertex");
  if (!tc.polytope().is_vertex(cert.vertex) || !is_delzant_vertex(tc.polytope(), cert.vertex))
    fail("certified vertex is not a Delzant vertex");
  else {
    const Rational ch = chow_weight(cert.chosen_point, tc).chow_weight;
    if (ch != cert.chow) fail("Chow weight = " + ch.str() + ", certificate has " + cert.chow.str());
    if (ch.sign() <= 0) fail("Chow weight is not positive");

    if (cert.df_blowup_samples.empty()) {
      fail("no blowup samples");
      return check;
    }
    const auto first = cert.df_blowup_samples.front().first, last = cert.df_blowup_samples.back().first;
    if (static_cast<std::int64_t>(cert.df_blowup_samples.size()) != last - first + 1) fail("blowup samples are not a contiguous range");
    const auto samples = sweep(tc, cert.vertex, first, last);
    if (samples != cert.df_blowup_samples) fail("recomputed F(gamma) samples differ");
    const auto tail = negative_tail(samples);
    if (!tail || samples[*tail].first != cert.gamma_star) fail("gamma_star is not the start of the negative tail");
    else if (samples[*tail].second != cert.df_blowup_at_gamma_star) fail("F(gamma_star) differs");
    if (cert.df_blowup_at_gamma_star.sign() >= 0) fail("F(gamma_star) is not negative");
  }
  return check;
}

Predicate parse_predicate(std::string_view name) {
  for (auto p : {Predicate::kAny, Predicate::kProduct, Predicate::kNonProduct, Predicate::kPositive,
                 Predicate::kNonPositive, Predicate::kNegative, Predicate::kNonPositiveNonProduct,
                 Predicate::kVanishingNonProduct})
    if (to_string(p) == name) return p;
  throw Error(ErrorCode::kValidationError, "unknown predicate '" + std::string(name) + "'");
}

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::kAny: return "any";
    case Predicate::kProduct: return "product";
    case Predicate::kNonProduct: return "nonproduct";
    case Predicate::kPositive: return "positive";
    case Predicate::kNonPositive: return "nonpositive";
    case Predicate::kNegative: return "negative";
    case Predicate::kNonPositiveNonProduct: return "nonpositive-nonproduct";
    case Predicate::kVanishingNonProduct: return "vanishing-nonproduct";
  }
  return "unknown";
}

SearchResult search_configs(const LatticePolytope& p, const SearchOptions& opts) {
  if (opts.bound < 0 || opts.pieces < 1 || opts.budget < 1)
    throw Error(ErrorCode::kValidationError, "search needs bound >= 0, pieces >= 1, budget >= 1");
  const auto box = piece_box(p.dim(), opts.bound);
  const auto n = static_cast<std::int64_t>(box.size());
  const auto m = static_cast<std::int64_t>(opts.pieces);
  if (m > n) throw Error(ErrorCode::kValidationError, "more pieces than the coefficient box holds");

  std::vector<std::vector<std::size_t>> draws;
  if (opts.seed) {
    std::mt19937_64 rng(*opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (std::int64_t d = 0; d < opts.budget; ++d) {
      std::set<std::size_t> chosen;
      while (static_cast<std::int64_t>(chosen.size()) < m) chosen.insert(pick(rng));
      draws.emplace_back(chosen.begin(), chosen.end());
    }
  } else {
    const auto total = binomial_capped(n, m, opts.budget);
    if (total > opts.budget)
      throw Error(ErrorCode::kBudgetExceeded, "exhaustive search over C(" + std::to_string(n) + "," + std::to_string(m) +
                                                  ") functions exceeds the budget of " + std::to_string(opts.budget));
    std::vector<std::size_t> idx(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
      draws.push_back(idx);
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(m) - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == box.size() - static_cast<std::size_t>(m) + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  // Prune and deduplicate serially, then evaluate the distinct functions in parallel.
  SearchResult result;
  result.examined = static_cast<std::int64_t>(draws.size());
  std::vector<ToricTestConfig> configs;
  std::set<std::vector<AffinePiece>> seen;
  for (const auto& d : draws) {
    std::vector<AffinePiece> pieces;
    for (auto i : d) pieces.push_back(box[i]);
    ToricTestConfig tc(p, PLConvexFunction(std::move(pieces)));
    if (seen.insert(tc.function().pieces()).second) configs.push_back(std::move(tc));
  }

  std::vector<std::optional<DFReport>> reports(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < configs.size(); ++i) {
    try {
      reports[i] = donaldson_futaki(configs[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kQuasiPeriodMismatch) errors[i] = std::current_exception();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (!reports[i]) {
      ++result.rejected;
      continue;
    }
    if (!matches(opts.predicate, *reports[i])) continue;
    result.hits.push_back({configs[i], *reports[i]});
    if (opts.limit != 0 && result.hits.size() >= opts.limit) break;
  }
  return result;
}

}  // namespace kstab
