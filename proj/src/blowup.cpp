#include "kstab/blowup.hpp"

#include <algorithm>
#include <exception>

#include "kstab/error.hpp"

namespace kstab {

namespace {

Rational gamma_power(std::int64_t gamma, int exponent) { return pow(Rational(static_cast<long>(gamma)), exponent); }

// Solves c0 + c1 t^(n-1) + c2 t^n = F with t = 1/gamma on three samples; returns c1.
Rational window_fit(std::span<const GammaSample> window, int n) {
  std::vector<std::vector<Rational>> a;
  for (const auto& s : window) {
    const Rational t = Rational(1) / Rational(static_cast<long>(s.gamma));
    a.push_back({Rational(1), pow(t, n - 1), pow(t, n), s.futaki});
  }
  for (std::size_t col = 0; col < 3; ++col) {
    auto piv = std::find_if(a.begin() + static_cast<std::ptrdiff_t>(col), a.end(), [&](auto& r) { return !r[col].is_zero(); });
    std::iter_swap(a.begin() + static_cast<std::ptrdiff_t>(col), piv);
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return a[1][3] / a[1][1];
}

// Polynomial in gamma through the samples, or nullopt if they are not polynomial of that degree.
std::optional<Polynomial> fit_in_gamma(std::span<const GammaSample> samples, int degree,
                                       const Rational DFReport::*field) {
  std::vector<Sample> pts;
  for (auto it = samples.rbegin(); it != samples.rend(); ++it)
    pts.push_back({Rational(static_cast<long>(it->gamma)), it->report.*field});
  if (static_cast<int>(pts.size()) < degree + 2) return std::nullopt;
  Polynomial p = interpolate(pts, degree);
  if (!fits_all(p, pts)) return std::nullopt;
  return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Polynomial subtract(Polynomial a, Polynomial b) {
  const std::size_t m = std::max(a.size(), b.size());
  a.insert(a.begin(), m - a.size(), Rational());
  b.insert(b.begin(), m - b.size(), Rational());
  for (std::size_t i = 0; i < m; ++i) a[i] -= b[i];
  return a;
}

// Pads a highest-first polynomial to the given degree; the result read lowest-first is the
// polynomial in t = 1/gamma multiplied by t^degree.
std::vector<Rational> reversed_in_t(Polynomial p, std::size_t degree) {
  p.insert(p.begin(), degree + 1 - p.size(), Rational());
  return p;
}

}  // namespace

CornerChop chop_polytope(const LatticePolytope& p, const LatticeVector& v, std::int64_t gamma) {
  if (gamma < 1) throw Error(ErrorCode::kInvalidArgument, "gamma must be positive");
  if (!is_delzant_vertex(p, v)) throw Error(ErrorCode::kNotDelzant, v.str() + " is not a Delzant vertex");
  const auto edges = edges_at(p, v);
  for (const auto& e : edges)
    if (gamma * e.length <= 1)
      throw Error(ErrorCode::kChopTooDeep, "depth-1 cut at gamma=" + std::to_string(gamma) + " reaches " + (gamma * e.to).str());

  const int n = p.dim();
  // The cut normal is the sum of the dual basis of the edge directions: <nu, e_i> = 1.
  std::vector<LatticeVector> dirs;
  for (const auto& e : edges) dirs.push_back(e.direction);
  const std::int64_t d = det(dirs);
  LatticeVector nu(n);
  for (int i = 0; i < n; ++i) {
    // nu_i = sum_j (E^{-T})_{i j} where E has the directions as columns, i.e.
    // solve <nu, e_j> = 1 for all j by Cramer's rule on the rows `dirs`.
    auto m = dirs;
    for (auto& row : m) row[i] = 1;
    nu[i] = det(m) / d;
  }

  const LatticeVector apex = gamma * v;
  std::vector<LatticeVector> verts;
  for (const auto& w : p.vertices())
    if (w != v) verts.push_back(gamma * w);
  for (const auto& e : edges) verts.push_back(apex + e.direction);
  return {v, gamma, nu, build_polytope(std::move(verts))};
}

ToricTestConfig induced_config(const ToricTestConfig& tc, const CornerChop& chop) {
  return ToricTestConfig(chop.chopped, tc.function().rescaled(chop.gamma));
}

std::vector<std::int64_t> gamma_range(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> out;
  for (std::int64_t g = first; g <= last; ++g) out.push_back(g);
  return out;
}

BlowupExpansionReport blowup_df_series(const ToricTestConfig& tc, const LatticeVector& v,
                                       std::span<const std::int64_t> gammas_in, const BlowupOptions& opts) {
  std::vector<std::int64_t> gammas(gammas_in.begin(), gammas_in.end());
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  if (gammas.size() < 4) throw Error(ErrorCode::kInvalidArgument, "need at least 4 gamma values");
  if (gammas.front() < 2) throw Error(ErrorCode::kInvalidArgument, "gamma values must be >= 2");
  if (!is_delzant_vertex(tc.polytope(), v)) throw Error(ErrorCode::kNotDelzant, v.str() + " is not a Delzant vertex");

  const int n = tc.dim();
  BlowupExpansionReport rep;
  rep.dim = n;
  rep.vertex = v;
  rep.chow_level = opts.chow_level;
  rep.futaki_base = donaldson_futaki(tc).futaki;
  rep.chow = chow_weight(vertex_point(v, opts.chow_level), tc).chow_weight;

  rep.df_values.resize(gammas.size());
  std::vector<std::exception_ptr> failures(gammas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    try {
      const ToricTestConfig blown = induced_config(tc, chop_polytope(tc.polytope(), v, gammas[i]));
      DFReport r = donaldson_futaki(blown);
      rep.df_values[i] = {gammas[i], r.futaki, std::move(r)};
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  const std::size_t half = gammas.size() / 2;
  const std::span<const GammaSample> all(rep.df_values);
  const auto bottom = all.first(half);
  const auto top = all.subspan(half);

  // Nested windows of three consecutive samples, largest first.
  for (std::size_t end = top.size(); end >= 3; --end) rep.window_estimates.push_back(window_fit(top.subspan(end - 3, 3), n));
  if (rep.window_estimates.empty()) throw Error(ErrorCode::kInvalidArgument, "top half needs at least 3 gamma values");
  rep.fitted_c = rep.window_estimates.front();
  for (const auto& c : rep.window_estimates)
    if (c.sign() != rep.fitted_c.sign())
      throw Error(ErrorCode::kFitUnstable, "gamma^(1-n) coefficient changes sign across fitting windows");

  // Exact route: a0, a1, b0, b1 are polynomials in gamma once the cut sits inside one cone
  // of linearity of f.
  const auto A0 = fit_in_gamma(top, n, &DFReport::a0);
  const auto A1 = fit_in_gamma(top, n - 1, &DFReport::a1);
  const auto B0 = fit_in_gamma(top, n + 1, &DFReport::b0);
  const auto B1 = fit_in_gamma(top, n, &DFReport::b1);
  if (A0 && A1 && B0 && B1) {
    const std::size_t deg = static_cast<std::size_t>(2 * n);
    const Polynomial num = subtract(multiply(*B0, *A1), multiply(*A0, *B1));
    const Polynomial den = multiply(*A0, *A0);
    rep.expansion = series_divide(reversed_in_t(num, deg), reversed_in_t(den, deg), static_cast<std::size_t>(n) + 1);
    rep.exact_c = rep.expansion[static_cast<std::size_t>(n - 1)];
  }

  const Rational two(2);
  rep.predicted_c = -rep.chow / (two * factorial(n - 1));
  if (n >= 3) rep.predicted_c_alt = -rep.chow / (two * factorial(n - 2));
  {
    const BoundaryIntegrals in = integrate(tc);
    const Rational fv = tc.function()(RationalVector(v));
    rep.predicted_c_volume = -(fv - in.interior / in.volume) / (two * factorial(n - 2) * in.volume);
  }

  // Residual after the leading terms, scaled by gamma^n.
  const Rational c1 = rep.exact_c.value_or(rep.fitted_c);
  auto scaled_residual = [&](const GammaSample& s) {
    const Rational r = s.futaki - rep.futaki_base - c1 * gamma_power(s.gamma, 1 - n);
    return abs(r) * gamma_power(s.gamma, n);
  };
  for (const auto& s : bottom) rep.residual_bound = std::max(rep.residual_bound, scaled_residual(s));
  rep.residual_order_ok = std::all_of(top.begin(), top.end(), [&](const GammaSample& s) {
    return scaled_residual(s) <= two * rep.residual_bound;
  });

  auto matches = [&](const Rational& predicted) {
    if (rep.exact_c) return *rep.exact_c == predicted;
    // Without the exact route allow the spread of the nested windows.
    Rational spread;
    for (const auto& c : rep.window_estimates) spread = std::max(spread, abs(c - rep.fitted_c));
    return abs(rep.fitted_c - predicted) <= two * spread;
  };
  const bool m1 = matches(rep.predicted_c);
  const bool m2 = rep.predicted_c_alt ? matches(*rep.predicted_c_alt) : m1;
  if (n == 2) rep.matched_variant = m1 ? "both" : "none";
  else rep.matched_variant = m1 && m2 ? "both" : m1 ? "(n-1)!" : m2 ? "(n-2)!" : "none";
  return rep;
}

BlowupVerification verify_blowup_formula(const ToricTestConfig& tc, const LatticeVector& v,
                                         std::span<const std::int64_t> gammas, const BlowupOptions& opts) {
  BlowupVerification out;
  out.report = blowup_df_series(tc, v, gammas, opts);
  out.holds = out.report.matched_variant != "none" && out.report.residual_order_ok;
  return out;
}

}  // namespace kstab
