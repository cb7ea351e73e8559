#include <functional>
#include <ostream>

#include "kstab/error.hpp"
#include "kstab/fixtures.hpp"
#include "kstab/kernels.hpp"
#include "kstab/model_io.hpp"
#include "kstab/pipeline.hpp"

namespace kstab {

namespace {

ToricTestConfig config(LatticePolytope p, std::vector<AffinePiece> pieces) {
  return {std::move(p), PLConvexFunction(std::move(pieces))};
}

}  // namespace

bool run_selftest(std::ostream& out) {
  using namespace fixtures;
  bool all = true;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "PASS " : "FAIL ") << name << detail << '\n';
    all = all && ok;
  };

  const std::vector<std::pair<std::string, LatticePolytope>> polytopes = {
      {"simplex2", simplex2()}, {"square", unit_square()}, {"f1", f1_trapezoid()},
      {"simplex3", simplex3()}, {"cube", unit_cube()}};

  for (const auto& [name, p] : polytopes) {
    check("ehrhart " + name, [&] {
      const auto e = ehrhart_fit(p);
      return e.a0() == volume(p) && e.a1() == sigma_boundary_volume(p) / Rational(2);
    });
    check("kernels " + name, [&] {
      for (std::int64_t k = 1; k <= 4; ++k)
        if (kernels::count(p, k) != kernels::count_reference(p, k) ||
            kernels::enumerate(p, k) != kernels::enumerate_reference(p, k))
          return false;
      return true;
    });
  }

  check("linear f has F = 0", [&] {
    for (const auto& [name, p] : polytopes) {
      if (name == "f1") continue;
      const int n = p.dim();
      for (int i = 0; i < n; ++i) {
        LatticeVector a(n);
        a[i] = 1;
        if (!donaldson_futaki(config(p, {{a, 0}})).futaki.is_zero()) return false;
      }
    }
    return true;
  });

  const auto square_pl = config(unit_square(), {{{0, 0}, 0}, {{1, 1}, -1}});
  check("square max(0,x+y-1) has F = 1/6", [&] { return donaldson_futaki(square_pl).futaki == Rational(1, 6); });
  check("shift and scale", [&] {
    const Rational f = donaldson_futaki(square_pl).futaki;
    const ToricTestConfig shifted(square_pl.polytope(), square_pl.function().shifted(3));
    const ToricTestConfig scaled(square_pl.polytope(), square_pl.function().scaled(2));
    return donaldson_futaki(shifted).futaki == f && donaldson_futaki(scaled).futaki == Rational(2) * f;
  });
  check("unimodular invariance", [&] {
    const std::vector<LatticeVector> rows = {{1, 1}, {0, 1}};
    return donaldson_futaki(transform(square_pl, rows, {2, -1})).futaki == donaldson_futaki(square_pl).futaki;
  });
  check("normalized weights sum to zero", [&] {
    Rational sum;
    for (const auto& [u, w] : sl_normalized_weights(square_pl, 2)) sum += w;
    return sum.is_zero();
  });
  check("model round trip", [&] { return parse_model(serialize(square_pl)).config == square_pl; });

  const auto f1_neg = config(f1_trapezoid(), {{{-2, -2}, -1}, {{0, 2}, -2}});
  check("f1 destabilizing certificate", [&] {
    const auto r = destabilize(f1_neg, {2, 16, {}});
    return r.certificate && verify_certificate(f1_neg, *r.certificate).ok;
  });
  check("square blowup expansion", [&] {
    const auto square_lin = config(unit_square(), {{{1, 0}, 0}});
    const auto gammas = gamma_range(8, 24);
    return verify_blowup_formula(square_lin, {0, 0}, gammas).holds;
  });
  return all;
}

}  // namespace kstab
