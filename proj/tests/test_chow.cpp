#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace kstab;
using namespace kstab::fixtures;
using kstab::testing::config;

TEST_CASE("hm_weight of raw coordinate weights") {
  const std::vector<std::int64_t> w = {-1, 0, 2};
  CHECK(hm_weight(w) == 1);
  const std::vector<std::int64_t> single = {2};
  CHECK(hm_weight(single) == -2);
  CHECK_THROWS_AS(hm_weight(std::vector<std::int64_t>{}), Error);
}

TEST_CASE("hm_weight of points on the central fibre") {
  const auto tc = config(simplex2(), {{{1, 0}, 0}});
  // coordinates scale with -w_k(u): the weight is the largest point weight on the support
  CHECK(hm_weight(PointSupport{1, {{0, 0}, {0, 1}, {1, 0}}}, tc) == 1);
  CHECK(hm_weight(PointSupport{2, {{2, 0}}}, tc) == 2);
  CHECK(hm_weight(PointSupport{1, {{0, 1}}}, tc) == 0);
  CHECK_THROWS_AS(hm_weight(PointSupport{1, {}}, tc), Error);
  CHECK_THROWS_AS(hm_weight(PointSupport{1, {{2, 0}}}, tc), Error);
}

TEST_CASE("chow_weight") {
  const auto tc = config(simplex2(), {{{1, 0}, 0}});
  const auto full = chow_weight(PointSupport{1, {{0, 0}, {0, 1}, {1, 0}}}, tc);
  CHECK(full.chow_weight == Rational(2, 3));
  CHECK(full.specialization_support == std::vector<LatticeVector>{{1, 0}});
  const auto low = chow_weight(PointSupport{1, {{0, 0}, {0, 1}}}, tc);
  CHECK(low.chow_weight == Rational(-1, 3));
  CHECK(low.specialization_support == std::vector<LatticeVector>{{0, 0}, {0, 1}});
}

TEST_CASE("chow weight is monotone under enlarging the support") {
  const auto tc = config(f1_trapezoid(), {{{-2, -2}, -1}, {{0, 2}, -2}});
  const auto pts = total_weight(tc, 2).weights;
  PointSupport q{2, {}};
  Rational prev;
  bool first = true;
  for (const auto& [u, w] : pts) {
    q.support.push_back(u);
    const auto c = chow_weight(q, tc).chow_weight;
    if (!first) CHECK(c >= prev);
    prev = c;
    first = false;
  }
}

TEST_CASE("find_positive_chow_point") {
  CHECK_THROWS_WITH_AS(find_positive_chow_point(config(unit_square(), {{{0, 0}, 2}})),
                       doctest::Contains("PreconditionViolated"), Error);
  CHECK_THROWS_WITH_AS(find_positive_chow_point(config(unit_square(), {{{0, 0}, 0}, {{1, 1}, -1}})),
                       doctest::Contains("PreconditionViolated"), Error);

  const auto tc = config(f1_trapezoid(), {{{-2, -2}, -1}, {{0, 2}, -2}});
  REQUIRE(donaldson_futaki(tc).futaki < Rational(0));
  const auto c = find_positive_chow_point(tc);
  CHECK(c.kind == CandidateKind::kVertex);
  CHECK(c.report.chow_weight > Rational(0));
  CHECK(chow_weight(c.point, tc).chow_weight == c.report.chow_weight);
  CHECK(tc.polytope().is_vertex(c.vertex));
}

TEST_CASE("candidate order is deterministic") {
  const auto tc = config(f1_trapezoid(), {{{-2, -2}, -1}, {{0, 2}, -2}});
  const auto a = chow_candidates(tc, 1), b = chow_candidates(tc, 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].point.support == b[i].point.support);
    CHECK(a[i].report.chow_weight == b[i].report.chow_weight);
  }
  CHECK(a.front().kind == CandidateKind::kVertex);
  CHECK(a.back().kind == CandidateKind::kFullSupport);
}
