#include "kstab/polytope.hpp"

#include <algorithm>
#include <limits>

#include "kstab/error.hpp"

namespace kstab {

namespace {

LatticeVector normal_through(std::span<const LatticeVector> pts) {
  if (pts.size() == 2) {
    const LatticeVector d = pts[1] - pts[0];
    return primitive(LatticeVector{-d[1], d[0]});
  }
  const LatticeVector a = pts[1] - pts[0], b = pts[2] - pts[0];
  return primitive(LatticeVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

std::vector<RationalVector> to_rational(std::span<const LatticeVector> pts) {
  std::vector<RationalVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p);
  return out;
}

}  // namespace

bool LatticePolytope::contains(const LatticeVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, x) >= f.offset; });
}

bool LatticePolytope::contains(const RationalVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.slack(x).sign() >= 0; });
}

bool LatticePolytope::is_vertex(const LatticeVector& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<LatticeVector> LatticePolytope::vertices_on(const Facet& f) const {
  std::vector<LatticeVector> out;
  for (const auto& v : vertices_)
    if (dot(f.normal, v) == f.offset) out.push_back(v);
  return out;
}

LatticeVector LatticePolytope::box_min() const {
  LatticeVector m = vertices_.front();
  for (const auto& v : vertices_)
    for (int i = 0; i < dim_; ++i) m[i] = std::min(m[i], v[i]);
  return m;
}

LatticeVector LatticePolytope::box_max() const {
  LatticeVector m = vertices_.front();
  for (const auto& v : vertices_)
    for (int i = 0; i < dim_; ++i) m[i] = std::max(m[i], v[i]);
  return m;
}

LatticePolytope LatticePolytope::dilate(std::int64_t k) const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "dilation factor must be positive");
  LatticePolytope out = *this;
  for (auto& v : out.vertices_) v = k * v;
  for (auto& f : out.facets_) f.offset *= k;
  return out;
}

LatticePolytope build_polytope(std::vector<LatticeVector> points) {
  if (points.empty()) throw Error(ErrorCode::kNotFullDimensional, "no vertices");
  const int n = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != n) throw Error(ErrorCode::kInvalidArgument, "vertices of mixed dimension");
  if (n != 2 && n != 3) throw Error(ErrorCode::kDimensionUnsupported, "dimension " + std::to_string(n));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  {
    std::vector<LatticeVector> diffs;
    for (const auto& p : points) diffs.push_back(p - points.front());
    if (rank(diffs) < n) throw Error(ErrorCode::kNotFullDimensional, "affine hull is not R^" + std::to_string(n));
  }

  std::vector<Facet> facets;
  const std::size_t m = points.size();
  std::vector<LatticeVector> subset(static_cast<std::size_t>(n));
  auto consider = [&] {
    const LatticeVector nrm = normal_through(subset);
    if (nrm.is_zero()) return;
    std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& p : points) {
      lo = std::min(lo, dot(nrm, p));
      hi = std::max(hi, dot(nrm, p));
    }
    const std::int64_t level = dot(nrm, subset[0]);
    if (level == lo) facets.push_back({nrm, lo});
    else if (level == hi) facets.push_back({-nrm, -hi});
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      subset[0] = points[i];
      subset[1] = points[j];
      if (n == 2) {
        consider();
        continue;
      }
      for (std::size_t l = j + 1; l < m; ++l) {
        subset[2] = points[l];
        consider();
      }
    }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  LatticePolytope out;
  out.dim_ = n;
  out.facets_ = std::move(facets);
  for (const auto& p : points) {
    std::vector<LatticeVector> tight;
    for (const auto& f : out.facets_)
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    if (rank(tight) == n) out.vertices_.push_back(p);
  }
  return out;
}

std::vector<Edge> edges_at(const LatticePolytope& p, const LatticeVector& v) {
  if (!p.is_vertex(v)) throw Error(ErrorCode::kNotAVertex, v.str() + " is not a vertex");
  std::vector<Edge> out;
  for (const auto& w : p.vertices()) {
    if (w == v) continue;
    std::vector<LatticeVector> common;
    for (const auto& f : p.facets())
      if (dot(f.normal, v) == f.offset && dot(f.normal, w) == f.offset) common.push_back(f.normal);
    if (rank(common) == p.dim() - 1) out.push_back({w, primitive(w - v), lattice_length(v, w)});
  }
  return out;
}

bool is_delzant_vertex(const LatticePolytope& p, const LatticeVector& v) {
  const auto edges = edges_at(p, v);
  if (static_cast<int>(edges.size()) != p.dim()) return false;
  std::vector<LatticeVector> dirs;
  for (const auto& e : edges) dirs.push_back(e.direction);
  const auto d = det(dirs);
  return d == 1 || d == -1;
}

std::vector<Simplex> triangulate(const LatticePolytope& p) {
  return triangulate(to_rational(p.vertices()), p.dim(), p.facets());
}

std::vector<Simplex> triangulate_facet(const LatticePolytope& p, const Facet& f) {
  return triangulate(to_rational(p.vertices_on(f)), p.dim() - 1);
}

Rational volume(const LatticePolytope& p) {
  Rational v;
  for (const auto& s : triangulate(p)) v += simplex_volume(s);
  return v;
}

Rational sigma_boundary_volume(const LatticePolytope& p) {
  Rational total;
  for (const auto& f : p.facets())
    for (const auto& s : triangulate_facet(p, f)) total += simplex_sigma_volume(s, f.normal);
  return total;
}

LatticePolytope transform(const LatticePolytope& p, std::span<const LatticeVector> rows, const LatticeVector& shift) {
  const auto d = det(rows);
  if (d != 1 && d != -1) throw Error(ErrorCode::kInvalidArgument, "transform is not unimodular");
  std::vector<LatticeVector> image;
  for (const auto& v : p.vertices()) {
    LatticeVector w(p.dim());
    for (int i = 0; i < p.dim(); ++i) w[i] = dot(rows[static_cast<std::size_t>(i)], v) + shift[i];
    image.push_back(w);
  }
  return build_polytope(std::move(image));
}

}  // namespace kstab
