#pragma once

#include <random>
#include <vector>

#include "kstab/error.hpp"
#include "kstab/fixtures.hpp"
#include "kstab/pipeline.hpp"

namespace kstab::testing {

inline ToricTestConfig config(LatticePolytope p, std::vector<AffinePiece> pieces) {
  return {std::move(p), PLConvexFunction(std::move(pieces))};
}

// Hull of a few random points in [0, box]^n, retried until full-dimensional.
inline LatticePolytope random_polytope(std::mt19937_64& rng, int n, std::int64_t box, int points) {
  std::uniform_int_distribution<std::int64_t> coord(0, box);
  while (true) {
    std::vector<LatticeVector> pts;
    for (int i = 0; i < points; ++i) {
      LatticeVector v(n);
      for (int j = 0; j < n; ++j) v[j] = coord(rng);
      pts.push_back(v);
    }
    try {
      return build_polytope(pts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotFullDimensional) throw;
    }
  }
}

// Random unimodular matrix as a product of elementary shears and a sign flip.
inline std::vector<LatticeVector> random_unimodular(std::mt19937_64& rng, int n) {
  std::vector<LatticeVector> rows;
  for (int i = 0; i < n; ++i) {
    LatticeVector r(n);
    r[i] = 1;
    rows.push_back(r);
  }
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<std::int64_t> mult(-2, 2);
  for (int step = 0; step < 4; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    rows[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] + mult(rng) * rows[static_cast<std::size_t>(j)];
  }
  if (mult(rng) < 0) rows[0] = -rows[0];
  return rows;
}

inline std::vector<std::pair<std::string, LatticePolytope>> corpus_polytopes() {
  return {{"simplex2", fixtures::simplex2()},
          {"square", fixtures::unit_square()},
          {"f1", fixtures::f1_trapezoid()},
          {"simplex3", fixtures::simplex3()}};
}

}  // namespace kstab::testing
