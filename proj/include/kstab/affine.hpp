#pragma once

#include <cstdint>

#include "kstab/lattice.hpp"

namespace kstab {

// x -> <linear, x> + constant with integer data.
struct AffinePiece {
  LatticeVector linear;
  std::int64_t constant = 0;

  // Homogenized value at level k: <linear, u> + k * constant.
  std::int64_t at_level(const LatticeVector& u, std::int64_t k) const { return dot(linear, u) + k * constant; }
  Rational operator()(const RationalVector& x) const {
    return dot(linear, x) + Rational(static_cast<long>(constant));
  }

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
  friend auto operator<=>(const AffinePiece&, const AffinePiece&) = default;
};

}  // namespace kstab
