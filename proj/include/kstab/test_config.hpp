#pragma once

// Toric test configurations: a lattice polytope P with a convex piecewise-linear function
// f = max_i (<a_i, x> + c_i), integer data. The point weight of u in kP is
// w_k(u) = max_i (<a_i, u> + k c_i) = k f(u/k), and w(k) is their sum. The C*-action on
// sections has trace tr(A_k) = -w(k); with that calibration F = (b0 a1 - a0 b1)/a0^2 is
// nonnegative on polytopes carrying a cscK metric (F = L(f) / (2 vol P), with L the
// boundary-minus-interior functional).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "kstab/affine.hpp"
#include "kstab/ehrhart.hpp"
#include "kstab/geometry.hpp"
#include "kstab/polyfit.hpp"
#include "kstab/polytope.hpp"

namespace kstab {

// Fixed once by matching the boundary integral against the sampled invariant on
// (unit square, max(0, x+y-1)); see the calibration test.
inline const Rational kOracleCalibration{1, 2};

class PLConvexFunction {
 public:
  // Pieces are sorted and deduplicated. Throws ValidationError on an empty list.
  explicit PLConvexFunction(std::vector<AffinePiece> pieces);

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  int dim() const { return pieces_.front().linear.dim(); }

  Rational operator()(const RationalVector& x) const;
  std::int64_t at_level(const LatticeVector& u, std::int64_t k) const;

  PLConvexFunction shifted(std::int64_t c) const;
  PLConvexFunction scaled(std::int64_t lambda) const;
  // Pieces (a_i, gamma c_i): the function x -> gamma f(x / gamma) on gamma P.
  PLConvexFunction rescaled(std::int64_t gamma) const;

  friend bool operator==(const PLConvexFunction&, const PLConvexFunction&) = default;

 private:
  std::vector<AffinePiece> pieces_;
};

// w_k(u) = max_i (<a_i, u> + k c_i).
std::int64_t weight_at(const PLConvexFunction& f, const LatticeVector& u, std::int64_t k);

// Region of P where one piece attains the max, with its simplicial decomposition.
struct DominanceRegion {
  std::size_t piece = 0;
  std::vector<HalfSpace> constraints;
  std::vector<RationalVector> vertices;
  std::vector<Simplex> simplices;
  Rational volume;
};

class ToricTestConfig {
 public:
  // Prunes pieces that are not active on a set of positive measure. Throws ValidationError
  // on a dimension mismatch.
  ToricTestConfig(LatticePolytope polytope, PLConvexFunction f);

  const LatticePolytope& polytope() const { return polytope_; }
  const PLConvexFunction& function() const { return f_; }
  int dim() const { return polytope_.dim(); }
  bool is_product() const { return f_.pieces().size() == 1; }
  bool is_trivial() const { return is_product() && f_.pieces().front().linear.is_zero(); }

  const std::vector<DominanceRegion>& regions() const { return regions_; }
  // lcm of the vertex denominators of all dominance regions; the quasi-period of w(k) divides it.
  const Integer& period_bound() const { return period_bound_; }

  friend bool operator==(const ToricTestConfig& a, const ToricTestConfig& b) {
    return a.polytope_ == b.polytope_ && a.f_ == b.f_;
  }

 private:
  LatticePolytope polytope_;
  PLConvexFunction f_;
  std::vector<DominanceRegion> regions_;
  Integer period_bound_;
};

// Image under x -> A x + t: (AP + t, f o A^{-1}(. - t)). A is unimodular, given by rows.
ToricTestConfig transform(const ToricTestConfig& tc, std::span<const LatticeVector> rows, const LatticeVector& shift);

struct HilbertWeightSample {
  std::int64_t k = 0;
  Integer count;                                   // P(k)
  Integer total_weight;                            // w(k)
  std::map<LatticeVector, std::int64_t> weights;   // u -> w_k(u)
};

// Full weight multiset at level k; w(k) is returned as total_weight.
HilbertWeightSample total_weight(const ToricTestConfig& tc, std::int64_t k);

struct WeightFit {
  Rational b0, b1;                          // leading coefficients of w(k)
  std::int64_t period = 1;                  // residue classes used
  std::vector<Polynomial> class_polynomials;  // degree n+1 in k, one per residue class
  std::vector<std::pair<std::int64_t, Integer>> samples;  // (k, w(k))
  const Polynomial& coefficients() const { return class_polynomials.front(); }
};

// w(k) sampled at k = 1..n+4 and fitted exactly; falls back to per-residue-class fits when
// the samples are not polynomial. Throws QuasiPeriodMismatch, FitInconsistent.
WeightFit fit_weight_polynomial(const ToricTestConfig& tc);

enum class Verdict { kDestabilizing, kVanishingProduct, kVanishingNonProduct, kPositive };
std::string_view to_string(Verdict v);

struct DFReport {
  Rational a0, a1;  // Hilbert polynomial P(k) = a0 k^n + a1 k^(n-1) + ...
  Rational b0, b1;  // tr(A_k) = -w(k) = b0 k^(n+1) + b1 k^n + ...
  Rational futaki;
  Rational futaki_laurent;
  Rational futaki_oracle;
  bool is_product = false;
  bool is_trivial = false;
  std::int64_t period = 1;
  Verdict verdict = Verdict::kPositive;
};

// All three routes are computed and must agree exactly (OracleMismatch otherwise).
DFReport donaldson_futaki(const ToricTestConfig& tc);
DFReport donaldson_futaki(const ToricTestConfig& tc, const EhrhartReport& ehrhart);

// k^{-1} coefficient of w(k) / (k P(k)), by power-series division in 1/k.
Rational df_laurent(const ToricTestConfig& tc);
Rational df_laurent(const EhrhartReport& ehrhart, const WeightFit& weights);

struct BoundaryIntegrals {
  Rational volume;          // vol P
  Rational sigma_boundary;  // sigma-measure of the boundary
  Rational interior;        // integral of f over P
  Rational boundary;        // integral of f over the boundary, sigma-measure
};

BoundaryIntegrals integrate(const ToricTestConfig& tc);

// kappa * (int_dP f dsigma - (2 a1/a0) int_P f) / a0 with exact integrals.
Rational df_boundary_oracle(const ToricTestConfig& tc);

// w_k(u) - w(k)/P(k) for every u in kP; sums to zero.
std::map<LatticeVector, Rational> sl_normalized_weights(const ToricTestConfig& tc, std::int64_t k);

bool is_product(const ToricTestConfig& tc);

}  // namespace kstab
