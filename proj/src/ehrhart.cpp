#include "kstab/ehrhart.hpp"

#include "kstab/error.hpp"
#include "kstab/kernels.hpp"

namespace kstab {

EhrhartReport ehrhart_fit(const LatticePolytope& p) {
  const int n = p.dim();
  EhrhartReport report;
  std::vector<Sample> samples;
  for (std::int64_t k = 1; k <= n + 3; ++k) {
    const std::int64_t c = kernels::count(p, k);
    report.samples.emplace_back(k, c);
    samples.push_back({Rational(static_cast<long>(k)), Rational(static_cast<long>(c))});
  }
  report.coefficients = interpolate(samples, n);
  if (!fits_all(report.coefficients, samples)) {
    throw Error(ErrorCode::kFitInconsistent, "lattice-point counts are not a degree-" + std::to_string(n) + " polynomial");
  }
  return report;
}

}  // namespace kstab
