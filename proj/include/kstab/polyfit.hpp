#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// Coefficients highest degree first.
using Polynomial = std::vector<Rational>;

struct Sample {
  Rational x;
  Rational y;
};

// Exact interpolation of a degree-`degree` polynomial through the first degree+1 samples
// (Vandermonde system, Gaussian elimination over Q). Requires distinct abscissae.
Polynomial interpolate(std::span<const Sample> samples, int degree);

Rational evaluate(const Polynomial& p, const Rational& x);

// True iff p(x) == y for every sample.
bool fits_all(const Polynomial& p, std::span<const Sample> samples);

// First `terms` coefficients of the power series num(t)/den(t), with both given lowest
// order first. den[0] must be nonzero.
std::vector<Rational> series_divide(std::span<const Rational> num, std::span<const Rational> den, std::size_t terms);

}  // namespace kstab
