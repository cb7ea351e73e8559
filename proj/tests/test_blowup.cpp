#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kstab/kernels.hpp"
#include "support.hpp"

using namespace kstab;
using namespace kstab::fixtures;
using kstab::testing::config;

TEST_CASE("chop_polytope") {
  const auto c = chop_polytope(simplex2(), {0, 0}, 3);
  CHECK(c.cut_normal == LatticeVector{1, 1});
  CHECK(c.chopped.vertices() == std::vector<LatticeVector>{{0, 1}, {0, 3}, {1, 0}, {3, 0}});
  CHECK(kernels::count(c.chopped, 1) == 9);

  const auto s = chop_polytope(unit_square(), {0, 0}, 2);
  CHECK(s.chopped.vertices().size() == 5);
  CHECK(kernels::count(s.chopped, 1) == 8);

  CHECK_THROWS_WITH_AS(chop_polytope(simplex2(), {0, 0}, 1), doctest::Contains("ChopTooDeep"), Error);
  const auto t = build_polytope({{0, 0}, {2, 0}, {0, 1}});
  CHECK_THROWS_WITH_AS(chop_polytope(t, {0, 1}, 4), doctest::Contains("NotDelzant"), Error);

  const auto cube = chop_polytope(unit_cube(), {1, 1, 1}, 2);
  CHECK(cube.cut_normal == LatticeVector{-1, -1, -1});
  CHECK(cube.chopped.vertices().size() == 10);
}

TEST_CASE("chopped volume loses one unimodular corner simplex") {
  for (const auto& p : {simplex2(), unit_square(), f1_trapezoid(), simplex3(), unit_cube()}) {
    const Rational corner = Rational(1) / factorial(p.dim());
    for (const auto& v : p.vertices()) {
      if (!is_delzant_vertex(p, v)) continue;
      for (std::int64_t g : {2, 3, 5}) {
        const auto c = chop_polytope(p, v, g);
        CHECK(ehrhart_fit(c.chopped).a0() == pow(Rational(static_cast<long>(g)), p.dim()) * volume(p) - corner);
      }
    }
  }
}

TEST_CASE("induced_config") {
  const auto zero = induced_config(config(simplex2(), {{{0, 0}, 0}}), chop_polytope(simplex2(), {0, 0}, 3));
  CHECK(zero.function().pieces() == std::vector<AffinePiece>{{{0, 0}, 0}});

  const auto lin = induced_config(config(simplex2(), {{{1, 0}, 0}}), chop_polytope(simplex2(), {0, 0}, 3));
  CHECK(lin.function().pieces() == std::vector<AffinePiece>{{{1, 0}, 0}});

  const auto tc = config(unit_square(), {{{0, 0}, 0}, {{1, 1}, -1}});
  const auto ind = induced_config(tc, chop_polytope(unit_square(), {0, 0}, 2));
  CHECK(ind.function().pieces() == std::vector<AffinePiece>{{{0, 0}, 0}, {{1, 1}, -2}});
}

TEST_CASE("constant functions give a flat series") {
  const auto tc = config(unit_square(), {{{0, 0}, 3}});
  const auto gammas = gamma_range(4, 12);
  const auto r = blowup_df_series(tc, {1, 0}, gammas);
  for (const auto& s : r.df_values) CHECK(s.futaki == Rational(0));
  CHECK(r.fitted_c == Rational(0));
  CHECK(r.chow == Rational(0));
  REQUIRE(r.exact_c);
  CHECK(*r.exact_c == Rational(0));
  CHECK(verify_blowup_formula(tc, {1, 0}, gammas).holds);
}

TEST_CASE("blowup expansion on the square with a linear function") {
  const auto tc = config(unit_square(), {{{1, 0}, 0}});
  const auto gammas = gamma_range(16, 32);
  for (const auto& v : tc.polytope().vertices()) {
    const auto ver = verify_blowup_formula(tc, v, gammas);
    CHECK(ver.holds);
    CHECK(ver.report.matched_variant == "both");
    CHECK(*ver.report.exact_c == ver.report.predicted_c);
    CHECK(ver.report.residual_order_ok);
  }
}

TEST_CASE("exact coefficient follows the volume-normalized boundary change") {
  // On Delta^2 (volume 1/2) the coefficient is twice the factorial prediction; on the square
  // with a nonlinear f the level-1 lattice mean differs from the continuous mean.
  const auto gammas = gamma_range(16, 32);
  const auto p2 = blowup_df_series(config(simplex2(), {{{1, 0}, 0}}), {0, 0}, gammas);
  CHECK(p2.chow == Rational(-1, 3));
  CHECK(p2.predicted_c == Rational(1, 6));
  CHECK(*p2.exact_c == Rational(1, 3));
  CHECK(*p2.exact_c == p2.predicted_c_volume);
  CHECK(p2.matched_variant == "none");

  const auto sq = blowup_df_series(config(unit_square(), {{{0, 0}, 0}, {{1, 1}, -1}}), {1, 1}, gammas);
  CHECK(sq.chow == Rational(3, 4));
  CHECK(*sq.exact_c == Rational(-5, 12));
  CHECK(*sq.exact_c == sq.predicted_c_volume);
  CHECK(sq.residual_order_ok);
}

TEST_CASE("series converges to the base invariant") {
  const auto tc = config(f1_trapezoid(), {{{-2, -2}, -1}, {{0, 2}, -2}});
  const auto gammas = gamma_range(8, 24);
  const auto r = blowup_df_series(tc, {0, 1}, gammas);
  CHECK(r.futaki_base == donaldson_futaki(tc).futaki);
  REQUIRE(r.exact_c);
  CHECK(r.expansion.at(0) == r.futaki_base);
  CHECK(r.expansion.at(1) == *r.exact_c);
  CHECK(r.residual_order_ok);
  // (F(gamma) - c0) gamma approaches c1
  Rational prev_gap;
  for (std::size_t i = 0; i < r.df_values.size(); ++i) {
    const auto& s = r.df_values[i];
    const Rational gap = abs((s.futaki - r.futaki_base) * Rational(static_cast<long>(s.gamma)) - *r.exact_c);
    if (i > 0) CHECK(gap <= prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("blowup_df_series preconditions") {
  const auto tc = config(unit_square(), {{{1, 0}, 0}});
  const std::vector<std::int64_t> few = {4, 5, 6};
  CHECK_THROWS_AS(blowup_df_series(tc, {0, 0}, few), Error);
  const std::vector<std::int64_t> low = {1, 2, 3, 4};
  CHECK_THROWS_AS(blowup_df_series(tc, {0, 0}, low), Error);
  const auto t = config(build_polytope({{0, 0}, {2, 0}, {0, 1}}), {{{1, 0}, 0}});
  const auto g = gamma_range(4, 10);
  CHECK_THROWS_AS(blowup_df_series(t, {0, 1}, g), Error);
}
