#pragma once

#include <cstdint>
#include <vector>

#include "kstab/polyfit.hpp"
#include "kstab/polytope.hpp"

namespace kstab {

struct EhrhartReport {
  Polynomial coefficients;  // degree n, highest first
  std::vector<std::pair<std::int64_t, std::int64_t>> samples;  // (k, #kP ∩ Z^n)

  const Rational& a0() const { return coefficients.at(0); }
  const Rational& a1() const { return coefficients.at(1); }
  Rational at(std::int64_t k) const { return evaluate(coefficients, Rational(static_cast<long>(k))); }
};

// Counts at k = 1..n+3, exact fit on the first n+1, the rest must agree (FitInconsistent).
EhrhartReport ehrhart_fit(const LatticePolytope& p);

}  // namespace kstab
