#include "kstab/polyfit.hpp"

#include <algorithm>

#include "kstab/error.hpp"

namespace kstab {

Polynomial interpolate(std::span<const Sample> samples, int degree) {
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  if (samples.size() < m) throw Error(ErrorCode::kInvalidArgument, "not enough samples to interpolate");
  // Augmented Vandermonde rows: x^degree ... x^0 | y
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    Rational power(1);
    for (std::size_t c = m; c-- > 0;) {
      a[r][c] = power;
      power *= samples[r].x;
    }
    a[r][m] = samples[r].y;
  }
  for (std::size_t col = 0; col < m; ++col) {
    auto pivot = std::find_if(a.begin() + static_cast<std::ptrdiff_t>(col), a.end(),
                              [&](const auto& row) { return !row[col].is_zero(); });
    if (pivot == a.end()) throw Error(ErrorCode::kInvalidArgument, "repeated abscissae in interpolation");
    std::iter_swap(a.begin() + static_cast<std::ptrdiff_t>(col), pivot);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Polynomial coeffs(m);
  for (std::size_t r = 0; r < m; ++r) coeffs[r] = a[r][m] / a[r][r];
  return coeffs;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  for (const auto& c : p) acc = acc * x + c;
  return acc;
}

bool fits_all(const Polynomial& p, std::span<const Sample> samples) {
  return std::all_of(samples.begin(), samples.end(), [&](const Sample& s) { return evaluate(p, s.x) == s.y; });
}

std::vector<Rational> series_divide(std::span<const Rational> num, std::span<const Rational> den, std::size_t terms) {
  if (den.empty() || den[0].is_zero()) throw Error(ErrorCode::kInvalidArgument, "series division by zero constant term");
  std::vector<Rational> q(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    Rational acc = i < num.size() ? num[i] : Rational();
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) acc -= den[j] * q[i - j];
    q[i] = acc / den[0];
  }
  return q;
}

}  // namespace kstab
