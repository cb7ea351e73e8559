#pragma once

// Hilbert-Mumford and Chow weights of torus-invariant points of the central fibre.
//
// A point q of P(H^0(X_0, L_0^k)^*) is described by its support: the lattice points u of kP
// whose coordinates are nonzero. The C*-action scales coordinate u with weight -w_k(u)
// (dual to the point weights), so for a support S
//   hm_weight(S)   = -min_{u in S} (-w_k(u)) = max_{u in S} w_k(u),
//   chow_weight(S) = max_{u in S} (w_k(u) - w(k)/P(k)),
// and lim_{lambda -> 0} lambda . q is supported on the argmax stratum of w_k over S.
// This orientation is the one under which the blowup expansion
// F(gamma) = F - CH gamma^(1-n) / (2 (n-2)!) + ... has the stated sign.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kstab/test_config.hpp"

namespace kstab {

struct PointSupport {
  std::int64_t level = 1;
  std::vector<LatticeVector> support;  // sorted, unique
};

struct ChowWeightReport {
  std::int64_t level = 1;
  std::int64_t hm_weight_raw = 0;
  Rational chow_weight;
  std::vector<LatticeVector> specialization_support;
};

// -min over the given coordinate weights. Throws EmptySupport.
std::int64_t hm_weight(std::span<const std::int64_t> weights);

// Throws EmptySupport, ValidationError (point outside kP).
std::int64_t hm_weight(const PointSupport& q, const ToricTestConfig& tc);
ChowWeightReport chow_weight(const PointSupport& q, const ToricTestConfig& tc);

PointSupport vertex_point(const LatticeVector& v, std::int64_t level);

enum class CandidateKind { kVertex, kStratum, kFullSupport };
std::string_view to_string(CandidateKind kind);

struct ChowCandidate {
  CandidateKind kind = CandidateKind::kVertex;
  LatticeVector vertex;  // vertex of P for kVertex candidates
  PointSupport point;
  ChowWeightReport report;
};

// All searched candidates at one level, in search order: vertex singletons (lexicographic),
// dominance strata of each piece, then the full support.
std::vector<ChowCandidate> chow_candidates(const ToricTestConfig& tc, std::int64_t level);

struct ChowSearchOptions {
  std::int64_t level = 1;
  std::int64_t max_level = 3;
};

// Candidates with strictly positive Chow weight at the first level (level..max_level) that has
// any. Empty when none is found.
std::vector<ChowCandidate> positive_chow_candidates(const ToricTestConfig& tc, const ChowSearchOptions& opts = {});

// Preconditions: nonproduct and F <= 0 (PreconditionViolated). Throws NotFound.
ChowCandidate find_positive_chow_point(const ToricTestConfig& tc, const ChowSearchOptions& opts = {});
ChowCandidate find_positive_chow_point(const ToricTestConfig& tc, const Rational& futaki,
                                       const ChowSearchOptions& opts = {});

}  // namespace kstab
