#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kstab/geometry.hpp"
#include "kstab/lattice.hpp"

namespace kstab {

// Facet {x : <normal, x> >= offset} with a primitive inward normal.
using Facet = HalfSpace;

// Full-dimensional convex lattice polytope in dimension 2 or 3. Immutable; built through
// build_polytope, which derives the H-representation and prunes non-extreme points.
class LatticePolytope {
 public:
  int dim() const { return dim_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const LatticeVector& x) const;
  bool contains(const RationalVector& x) const;
  bool is_vertex(const LatticeVector& v) const;
  std::vector<LatticeVector> vertices_on(const Facet& f) const;

  // Lower and upper corners of the bounding box.
  LatticeVector box_min() const;
  LatticeVector box_max() const;

  // k * P
  LatticePolytope dilate(std::int64_t k) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  friend LatticePolytope build_polytope(std::vector<LatticeVector> points);
  int dim_ = 0;
  std::vector<LatticeVector> vertices_;  // lexicographic
  std::vector<Facet> facets_;            // sorted
};

// Throws NotFullDimensional, DimensionUnsupported.
LatticePolytope build_polytope(std::vector<LatticeVector> points);

struct Edge {
  LatticeVector to;         // neighbouring vertex
  LatticeVector direction;  // primitive direction from the vertex
  std::int64_t length;      // lattice length
};

// Edges of P incident to vertex v. Throws NotAVertex.
std::vector<Edge> edges_at(const LatticePolytope& p, const LatticeVector& v);

// Exactly n edges at v whose primitive directions form a unimodular basis. Throws NotAVertex.
bool is_delzant_vertex(const LatticePolytope& p, const LatticeVector& v);

// Exact Lebesgue volume by simplicial decomposition.
Rational volume(const LatticePolytope& p);

// Sum over facets of the lattice-normalized (n-1)-volume.
Rational sigma_boundary_volume(const LatticePolytope& p);

// Simplicial decomposition of P and of a facet of P.
std::vector<Simplex> triangulate(const LatticePolytope& p);
std::vector<Simplex> triangulate_facet(const LatticePolytope& p, const Facet& f);

// A*x + t applied to every vertex. A is given by rows; must be unimodular.
LatticePolytope transform(const LatticePolytope& p, std::span<const LatticeVector> rows, const LatticeVector& shift);

}  // namespace kstab
