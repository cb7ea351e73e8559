#pragma once

// Lattice-point kernels over dilates kP. The default versions scan lines along the last
// coordinate and are OpenMP-parallel over the first coordinate; the *_reference versions
// are the plain bounding-box scan with a half-space test per point, kept for testing and
// benchmarking.

#include <cstdint>
#include <span>
#include <vector>

#include "kstab/affine.hpp"
#include "kstab/polytope.hpp"

namespace kstab::kernels {

struct WeightSums {
  std::int64_t count = 0;
  std::int64_t total = 0;
  friend bool operator==(const WeightSums&, const WeightSums&) = default;
};

// Integer points of kP in lexicographic order.
std::vector<LatticeVector> enumerate(const LatticePolytope& p, std::int64_t k);
std::vector<LatticeVector> enumerate_reference(const LatticePolytope& p, std::int64_t k);

std::int64_t count(const LatticePolytope& p, std::int64_t k);
std::int64_t count_reference(const LatticePolytope& p, std::int64_t k);

// Sum over u in kP of max_i (<a_i, u> + k c_i).
WeightSums weight_sums(const LatticePolytope& p, std::span<const AffinePiece> pieces, std::int64_t k);
WeightSums weight_sums_reference(const LatticePolytope& p, std::span<const AffinePiece> pieces, std::int64_t k);

}  // namespace kstab::kernels
