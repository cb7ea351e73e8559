#pragma once

// Standard polytopes used by the self-test, the test suites and the benchmarks.

#include "kstab/polytope.hpp"

namespace kstab::fixtures {

inline LatticePolytope simplex2() { return build_polytope({{0, 0}, {1, 0}, {0, 1}}); }
inline LatticePolytope unit_square() { return build_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
// Hirzebruch surface F_1 (P^2 blown up at a point).
inline LatticePolytope f1_trapezoid() { return build_polytope({{0, 0}, {2, 0}, {1, 1}, {0, 1}}); }
inline LatticePolytope simplex3() { return build_polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
inline LatticePolytope unit_cube() {
  return build_polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

}  // namespace kstab::fixtures
