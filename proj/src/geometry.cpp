#include "kstab/geometry.hpp"

#include <algorithm>

#include "kstab/error.hpp"

namespace kstab {

namespace {

// Solves rows * x = rhs for square integer systems; returns false when singular.
bool solve(std::span<const HalfSpace> rows, RationalVector& x) {
  const int n = static_cast<int>(rows.size());
  std::vector<LatticeVector> m;
  for (const auto& r : rows) m.push_back(r.normal);
  const std::int64_t d = det(m);
  if (d == 0) return false;
  x = RationalVector(n);
  for (int col = 0; col < n; ++col) {
    auto mc = m;
    for (int r = 0; r < n; ++r) mc[static_cast<std::size_t>(r)][col] = rows[static_cast<std::size_t>(r)].offset;
    x[col] = Rational(det(mc), d);
  }
  return true;
}

void sort_unique(std::vector<RationalVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

RationalVector centroid(std::span<const RationalVector> pts) {
  RationalVector c(pts.front().dim);
  for (const auto& p : pts) c = c + p;
  return Rational(1, static_cast<std::int64_t>(pts.size())) * c;
}

// Orders coplanar points of a convex polygon cyclically. Works in the two coordinates
// complementary to `drop` (the axis along which the plane is not vertical).
void order_polygon(std::vector<RationalVector>& pts, int drop) {
  int ax = -1, ay = -1;
  for (int i = 0; i < pts.front().dim; ++i) {
    if (i == drop) continue;
    (ax < 0 ? ax : ay) = i;
  }
  const RationalVector c = centroid(pts);
  auto half = [&](const RationalVector& p) {
    const Rational dx = p[ax] - c[ax], dy = p[ay] - c[ay];
    return dy.sign() < 0 || (dy.is_zero() && dx.sign() < 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const RationalVector& p, const RationalVector& q) {
    const bool hp = half(p), hq = half(q);
    if (hp != hq) return !hp;
    const Rational cross = (p[ax] - c[ax]) * (q[ay] - c[ay]) - (p[ay] - c[ay]) * (q[ax] - c[ax]);
    return cross.sign() > 0;
  });
}

// Axis along which the plane of the given points projects injectively.
int projection_axis(std::span<const RationalVector> pts) {
  if (pts.front().dim == 2) return -1;
  const RationalVector a = pts[1] - pts[0];
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const RationalVector b = pts[i] - pts[0];
    const RationalVector cr = [&] {
      RationalVector r(3);
      r[0] = a[1] * b[2] - a[2] * b[1];
      r[1] = a[2] * b[0] - a[0] * b[2];
      r[2] = a[0] * b[1] - a[1] * b[0];
      return r;
    }();
    for (int k = 0; k < 3; ++k)
      if (!cr[k].is_zero()) return k;
  }
  throw Error(ErrorCode::kDegenerateSubdivision, "collinear polygon");
}

std::vector<Simplex> fan(std::vector<RationalVector> polygon) {
  order_polygon(polygon, projection_axis(polygon));
  std::vector<Simplex> out;
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) out.push_back({{polygon[0], polygon[i], polygon[i + 1]}});
  return out;
}

}  // namespace

std::vector<RationalVector> enumerate_vertices(int dim, std::span<const HalfSpace> inequalities,
                                               const HalfSpace* equality) {
  std::vector<HalfSpace> pool(inequalities.begin(), inequalities.end());
  const int m = static_cast<int>(pool.size());
  const int choose = equality ? dim - 1 : dim;
  std::vector<RationalVector> out;
  std::vector<int> idx(static_cast<std::size_t>(choose));
  // Iterate over increasing index tuples.
  auto visit = [&](auto&& self, int start, int depth) -> void {
    if (depth == choose) {
      std::vector<HalfSpace> rows;
      if (equality) rows.push_back(*equality);
      for (int i : idx) rows.push_back(pool[static_cast<std::size_t>(i)]);
      RationalVector x;
      if (!solve(rows, x)) return;
      for (const auto& h : pool)
        if (h.slack(x).sign() < 0) return;
      out.push_back(std::move(x));
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      self(self, i + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);
  sort_unique(out);
  return out;
}

int affine_dimension(std::span<const RationalVector> points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(std::move(diffs));
}

std::vector<Simplex> triangulate(std::vector<RationalVector> vertices, int face_dim,
                                 std::span<const HalfSpace> supporting) {
  sort_unique(vertices);
  if (affine_dimension(vertices) < face_dim) return {};
  switch (face_dim) {
    case 1:
      // Collinear points: lexicographic extremes are the endpoints.
      return {Simplex{{vertices.front(), vertices.back()}}};
    case 2:
      return fan(std::move(vertices));
    case 3: {
      const RationalVector apex = centroid(vertices);
      std::vector<std::vector<RationalVector>> faces;
      for (const auto& h : supporting) {
        std::vector<RationalVector> face;
        for (const auto& v : vertices)
          if (h.slack(v).is_zero()) face.push_back(v);
        if (affine_dimension(face) == 2) faces.push_back(std::move(face));
      }
      std::sort(faces.begin(), faces.end());
      faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
      std::vector<Simplex> out;
      for (auto& face : faces) {
        for (auto& tri : fan(std::move(face))) {
          tri.vertices.insert(tri.vertices.begin(), apex);
          out.push_back(std::move(tri));
        }
      }
      return out;
    }
    default:
      throw Error(ErrorCode::kDimensionUnsupported, "triangulation of dimension " + std::to_string(face_dim));
  }
}

RationalVector barycenter(const Simplex& s) { return centroid(s.vertices); }

Rational simplex_volume(const Simplex& s) {
  const int n = static_cast<int>(s.vertices.size()) - 1;
  std::vector<RationalVector> rows;
  for (int i = 1; i <= n; ++i) rows.push_back(s.vertices[static_cast<std::size_t>(i)] - s.vertices[0]);
  return abs(det(rows)) / factorial(n);
}

Rational simplex_sigma_volume(const Simplex& s, const LatticeVector& normal) {
  const int k = static_cast<int>(s.vertices.size()) - 1;  // n - 1
  std::vector<RationalVector> rows;
  for (int i = 1; i <= k; ++i) rows.push_back(s.vertices[static_cast<std::size_t>(i)] - s.vertices[0]);
  rows.emplace_back(normal);
  return abs(det(rows)) / (Rational(static_cast<long>(dot(normal, normal))) * factorial(k));
}

Integer denominator_lcm(std::span<const RationalVector> points) {
  Integer l = 1;
  for (const auto& p : points)
    for (int i = 0; i < p.dim; ++i) {
      Integer d = p[i].denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
  return l;
}

}  // namespace kstab
