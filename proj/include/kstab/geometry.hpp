#pragma once

// Exact geometry of small rational polytopes given by integer half-spaces.
// Used for volumes, boundary measures and integrals of affine functions.

#include <cstdint>
#include <span>
#include <vector>

#include "kstab/lattice.hpp"

namespace kstab {

// {x : <normal, x> >= offset}
struct HalfSpace {
  LatticeVector normal;
  std::int64_t offset = 0;

  Rational slack(const RationalVector& x) const { return dot(normal, x) - Rational(static_cast<long>(offset)); }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

struct Simplex {
  std::vector<RationalVector> vertices;
};

// Vertices of {x : all inequalities hold} (optionally intersected with the hyperplane
// <eq.normal, x> = eq.offset), by brute force over n-subsets of constraints. Sorted, unique.
std::vector<RationalVector> enumerate_vertices(int dim, std::span<const HalfSpace> inequalities,
                                               const HalfSpace* equality = nullptr);

// Affine dimension of a point set (-1 when empty).
int affine_dimension(std::span<const RationalVector> points);

// Decomposes the convex hull of `vertices` into simplices of dimension `face_dim`.
// `supporting` must contain every facet-defining half-space when face_dim == 3.
// Returns nothing when the hull has lower dimension than face_dim.
std::vector<Simplex> triangulate(std::vector<RationalVector> vertices, int face_dim,
                                 std::span<const HalfSpace> supporting = {});

RationalVector barycenter(const Simplex& s);
// Lebesgue volume of a full-dimensional simplex.
Rational simplex_volume(const Simplex& s);
// Lattice-normalized (n-1)-volume of a simplex lying in a hyperplane with normal `normal`.
Rational simplex_sigma_volume(const Simplex& s, const LatticeVector& normal);

// lcm of all coordinate denominators.
Integer denominator_lcm(std::span<const RationalVector> points);

}  // namespace kstab
