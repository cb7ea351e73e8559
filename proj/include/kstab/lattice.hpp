#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

inline constexpr int kMaxDim = 3;

// Integer vector of dimension 1..3. Ordered lexicographically.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int dim) : dim_(dim) {}
  LatticeVector(std::initializer_list<std::int64_t> coords);
  explicit LatticeVector(std::span<const std::int64_t> coords);

  int dim() const { return dim_; }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::int64_t* begin() const { return c_.data(); }
  const std::int64_t* end() const { return c_.data() + dim_; }

  bool is_zero() const;
  std::string str() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t s, LatticeVector v);
  friend LatticeVector operator-(LatticeVector v) { return -1 * v; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

 private:
  int dim_ = 0;
  std::array<std::int64_t, kMaxDim> c_{};
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

std::int64_t dot(const LatticeVector& a, const LatticeVector& b);
std::int64_t gcd_of(const LatticeVector& v);
// v divided by the gcd of its entries; zero stays zero.
LatticeVector primitive(const LatticeVector& v);
// Lattice length of a segment: gcd of the difference.
std::int64_t lattice_length(const LatticeVector& a, const LatticeVector& b);

// Determinant of the square matrix whose rows are the given vectors (size == dim).
std::int64_t det(std::span<const LatticeVector> rows);
// Rank of the vectors, computed exactly.
int rank(std::span<const LatticeVector> vectors);

// Rational vector used for vertices of non-lattice polytopes.
struct RationalVector {
  int dim = 0;
  std::array<Rational, kMaxDim> c{};

  RationalVector() = default;
  explicit RationalVector(int d) : dim(d) {}
  explicit RationalVector(const LatticeVector& v);

  const Rational& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  friend bool operator==(const RationalVector& a, const RationalVector& b);
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);
};

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
// Determinant of rows; rows.size() must equal the dimension.
Rational det(std::span<const RationalVector> rows);
int rank(std::vector<RationalVector> vectors);

}  // namespace kstab
