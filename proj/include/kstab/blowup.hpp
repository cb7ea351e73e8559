#pragma once

// Toric blowup of a torus-fixed point: the depth-1 corner chop of gamma*P at a Delzant
// vertex, polarised by pi^*L^gamma - E, together with the gamma-expansion of the
// Donaldson-Futaki invariant of the induced test configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kstab/chow.hpp"
#include "kstab/test_config.hpp"

namespace kstab {

struct CornerChop {
  LatticeVector vertex;  // vertex v of P
  std::int64_t gamma = 0;
  LatticeVector cut_normal;  // new facet {<cut_normal, x - gamma v> >= 1}
  LatticePolytope chopped;
};

// Throws NotDelzant, ChopTooDeep (the cut would reach another vertex of gamma P).
CornerChop chop_polytope(const LatticePolytope& p, const LatticeVector& v, std::int64_t gamma);

// (chopped, pieces (a_i, gamma c_i)) with inactive pieces pruned again.
ToricTestConfig induced_config(const ToricTestConfig& tc, const CornerChop& chop);

struct GammaSample {
  std::int64_t gamma = 0;
  Rational futaki;
  DFReport report;
};

struct BlowupExpansionReport {
  int dim = 0;
  LatticeVector vertex;
  std::int64_t chow_level = 1;
  std::vector<GammaSample> df_values;
  Rational futaki_base;  // F of the configuration before blowing up (c0)
  Rational chow;         // CH(q0) of the vertex singleton on the central fibre

  // gamma^(1-n) coefficient from exact fits in the top half of the range; nested windows
  // must agree in sign (FitUnstable otherwise).
  Rational fitted_c;
  std::vector<Rational> window_estimates;
  // Same coefficient from the exact Laurent expansion in 1/gamma, when a0..b1 are
  // polynomial in gamma over the top half of the range.
  std::optional<Rational> exact_c;
  std::vector<Rational> expansion;  // Laurent coefficients of 1/gamma^0 .. 1/gamma^n

  Rational predicted_c;                     // -CH / (2 (n-1)!)
  std::optional<Rational> predicted_c_alt;  // -CH / (2 (n-2)!), n >= 3
  // -(f(v) - mean of f) / (2 (n-2)! vol P): the first-order change of the boundary functional.
  Rational predicted_c_volume;

  Rational residual_bound;  // max over the bottom half of |r(gamma)| gamma^n
  bool residual_order_ok = false;
  std::string matched_variant;  // "(n-1)!", "(n-2)!", "both", or "none"
};

struct BlowupOptions {
  std::int64_t chow_level = 1;
};

// Precondition: Delzant vertex; at least 4 gammas, all >= 2.
BlowupExpansionReport blowup_df_series(const ToricTestConfig& tc, const LatticeVector& v,
                                       std::span<const std::int64_t> gammas, const BlowupOptions& opts = {});

struct BlowupVerification {
  bool holds = false;
  BlowupExpansionReport report;
};

// Holds iff the gamma^(1-n) coefficient equals one of the two factorial predictions
// (exactly when the Laurent route is available) and the residual is O(gamma^-n).
BlowupVerification verify_blowup_formula(const ToricTestConfig& tc, const LatticeVector& v,
                                         std::span<const std::int64_t> gammas, const BlowupOptions& opts = {});

// Inclusive range a..b.
std::vector<std::int64_t> gamma_range(std::int64_t first, std::int64_t last);

}  // namespace kstab
