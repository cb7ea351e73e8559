#pragma once

// Destabilization pipeline, configuration search and the invariant self-test.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/blowup.hpp"
#include "kstab/chow.hpp"
#include "kstab/test_config.hpp"

namespace kstab {

// SHA-256 (hex) of the canonical serialization.
std::string input_hash(const ToricTestConfig& tc);

struct DestabilizationCertificate {
  std::string input_hash;
  Rational df_input;  // <= 0
  PointSupport chosen_point;
  LatticeVector vertex;
  Rational chow;  // > 0
  std::int64_t gamma_star = 0;
  Rational df_blowup_at_gamma_star;  // < 0
  std::vector<std::pair<std::int64_t, Rational>> df_blowup_samples;
};

struct CandidateAttempt {
  CandidateKind kind = CandidateKind::kVertex;
  PointSupport point;
  Rational chow;
  std::string outcome;  // "certificate", "NonDelzantPoint", "BudgetExhausted"
  std::vector<std::pair<std::int64_t, Rational>> samples;
};

enum class DestabilizeStatus { kCertificate, kBudgetExhausted, kNotFound };
std::string_view to_string(DestabilizeStatus s);

struct DestabilizeOptions {
  std::int64_t gamma_min = 2;
  std::int64_t gamma_max = 32;
  ChowSearchOptions chow;
};

struct DestabilizeResult {
  DestabilizeStatus status = DestabilizeStatus::kNotFound;
  Rational df_input;
  std::optional<DestabilizationCertificate> certificate;
  std::vector<CandidateAttempt> attempts;
};

// Throws PreconditionViolated for products and F > 0.
DestabilizeResult destabilize(const ToricTestConfig& tc, const DestabilizeOptions& opts = {});

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Recomputes F(input), the Chow weight and every sampled F(gamma) from scratch.
CertificateCheck verify_certificate(const ToricTestConfig& tc, const DestabilizationCertificate& cert);

enum class Predicate {
  kAny,
  kProduct,
  kNonProduct,
  kPositive,
  kNonPositive,
  kNegative,
  kNonPositiveNonProduct,
  kVanishingNonProduct,
};
// Names: any, product, nonproduct, positive, nonpositive, negative, nonpositive-nonproduct,
// vanishing-nonproduct. Throws ValidationError.
Predicate parse_predicate(std::string_view name);
std::string_view to_string(Predicate p);

struct SearchOptions {
  std::int64_t bound = 1;  // |a_i|, |c_i| <= bound
  int pieces = 2;
  Predicate predicate = Predicate::kAny;
  std::int64_t budget = 20000;          // functions examined
  std::optional<std::uint64_t> seed;    // random sampling when set, exhaustive otherwise
  std::size_t limit = 0;                // stop after this many hits (0: no limit)
};

struct SearchHit {
  ToricTestConfig config;
  DFReport df;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::int64_t examined = 0;
  std::int64_t rejected = 0;  // outside the supported class (e.g. quasi-polynomial weights)
};

// Distinct pruned functions, in enumeration order. Throws BudgetExceeded when an exhaustive
// enumeration would exceed the budget.
SearchResult search_configs(const LatticePolytope& p, const SearchOptions& opts);

// Invariant checks on built-in fixtures; one line per check. Returns true if all pass.
bool run_selftest(std::ostream& out);

}  // namespace kstab
