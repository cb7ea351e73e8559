#include "kstab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kstab/error.hpp"

namespace kstab {

LatticeVector::LatticeVector(std::initializer_list<std::int64_t> coords)
    : LatticeVector(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

LatticeVector::LatticeVector(std::span<const std::int64_t> coords) : dim_(static_cast<int>(coords.size())) {
  if (coords.empty() || coords.size() > kMaxDim) {
    throw Error(ErrorCode::kDimensionUnsupported, "lattice vector of dimension " + std::to_string(coords.size()));
  }
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool LatticeVector::is_zero() const {
  return std::all_of(begin(), end(), [](std::int64_t x) { return x == 0; });
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
  return *this;
}

LatticeVector operator*(std::int64_t s, LatticeVector v) {
  for (int i = 0; i < v.dim_; ++i) v[i] *= s;
  return v;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (int i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  std::int64_t s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t gcd_of(const LatticeVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  const auto g = gcd_of(v);
  if (g == 0) return v;
  LatticeVector out(v.dim());
  for (int i = 0; i < v.dim(); ++i) out[i] = v[i] / g;
  return out;
}

std::int64_t lattice_length(const LatticeVector& a, const LatticeVector& b) { return gcd_of(b - a); }

std::int64_t det(std::span<const LatticeVector> rows) {
  switch (rows.size()) {
    case 1: return rows[0][0];
    case 2: return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    case 3:
      return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
             rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
             rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    default: throw Error(ErrorCode::kDimensionUnsupported, "determinant of size " + std::to_string(rows.size()));
  }
}

int rank(std::span<const LatticeVector> vectors) {
  std::vector<RationalVector> rv;
  rv.reserve(vectors.size());
  for (const auto& v : vectors) rv.emplace_back(v);
  return rank(std::move(rv));
}

RationalVector::RationalVector(const LatticeVector& v) : dim(v.dim()) {
  for (int i = 0; i < dim; ++i) c[static_cast<std::size_t>(i)] = Rational(static_cast<long>(v[i]));
}

bool operator==(const RationalVector& a, const RationalVector& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
  if (auto c = a.dim <=> b.dim; c != 0) return c;
  for (int i = 0; i < a.dim; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s;
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  Rational s;
  for (int i = 0; i < a.dim(); ++i) s += Rational(static_cast<long>(a[i])) * b[i];
  return s;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.dim);
  for (int i = 0; i < a.dim; ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.dim);
  for (int i = 0; i < a.dim; ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v.dim);
  for (int i = 0; i < v.dim; ++i) out[i] = s * v[i];
  return out;
}

Rational det(std::span<const RationalVector> r) {
  switch (r.size()) {
    case 1: return r[0][0];
    case 2: return r[0][0] * r[1][1] - r[0][1] * r[1][0];
    case 3:
      return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
             r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    default: throw Error(ErrorCode::kDimensionUnsupported, "determinant of size " + std::to_string(r.size()));
  }
}

int rank(std::vector<RationalVector> m) {
  if (m.empty()) return 0;
  const int cols = m[0].dim;
  int r = 0;
  for (int col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
    auto pivot = std::find_if(m.begin() + r, m.end(), [&](const RationalVector& row) { return !row[col].is_zero(); });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + r, pivot);
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      const Rational f = m[i][col] / m[static_cast<std::size_t>(r)][col];
      m[i] = m[i] - f * m[static_cast<std::size_t>(r)];
    }
    ++r;
  }
  return r;
}

}  // namespace kstab
