#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "kstab/model_io.hpp"
#include "kstab/report.hpp"
#include "support.hpp"

using namespace kstab;
using namespace kstab::fixtures;
using kstab::testing::config;

namespace {

const char* kMinimal = R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]], "pl_pieces": [[1,0,0]]})";

const ToricTestConfig& f1_negative() {
  static const auto tc = config(f1_trapezoid(), {{{-2, -2}, -1}, {{0, 2}, -2}});
  return tc;
}

}  // namespace

TEST_CASE("parse_model") {
  const auto m = parse_model(kMinimal);
  CHECK(m.config == config(simplex2(), {{{1, 0}, 0}}));
  CHECK_FALSE(m.tasks.gammas);

  CHECK_THROWS_WITH_AS(parse_model(R"({"dimension": 2, "vertices": [[0,0],[1,1],[2,2]], "pl_pieces": [[1,0,0]]})"),
                       doctest::Contains("NotFullDimensional"), Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]], "pl_pieces": [[1,0,"1/2"]]})"),
                       doctest::Contains("integrality"), Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]], "pl_pieces": [[1,0,0.5]]})"),
                       doctest::Contains("$.pl_pieces[0][2]"), Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]], "pl_pieces": []})"),
                       doctest::Contains("ValidationError"), Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"dimension": 4, "vertices": [], "pl_pieces": []})"),
                       doctest::Contains("DimensionUnsupported"), Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"dimension": 2, "pl_pieces": []})"), doctest::Contains("'vertices'"), Error);
  CHECK_THROWS_WITH_AS(parse_model("{\"dimension\": 2,\n \"vertices\": [[0,0],,]}"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]], "pl_pieces": [[1,0,0]], "x": 1})"),
                       doctest::Contains("$.x"), Error);

  try {
    parse_model(R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]], "pl_pieces": [[1,0]]})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kValidationError);
  }
}

TEST_CASE("model tasks") {
  const auto m = parse_model(R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]], "pl_pieces": [[1,0,0]],
    "tasks": {"chow_level": 2, "vertex": 1, "gammas": "4:9",
              "search": {"bound": 2, "pieces": 3, "predicate": "negative", "budget": 10, "seed": 4}}})");
  CHECK(*m.tasks.chow_level == 2);
  CHECK(*m.tasks.vertex == 1);
  CHECK(*m.tasks.gammas == std::pair<std::int64_t, std::int64_t>{4, 9});
  CHECK(*m.tasks.search->predicate == "negative");
  CHECK(*m.tasks.search->seed == 4u);
  CHECK_THROWS_AS(parse_range("9:4"), Error);
  CHECK_THROWS_AS(parse_range("4-9"), Error);
}

TEST_CASE("serialize round trip") {
  for (const auto& [name, p] : testing::corpus_polytopes()) {
    SearchOptions opts;
    opts.bound = 1;
    opts.pieces = 2;
    opts.seed = 1;
    opts.budget = 20;
    for (const auto& h : search_configs(p, opts).hits) CHECK(parse_model(serialize(h.config)).config == h.config);
  }
}

TEST_CASE("destabilize guards") {
  CHECK_THROWS_WITH_AS(destabilize(config(unit_square(), {{{1, 0}, 0}})), doctest::Contains("PreconditionViolated"), Error);
  CHECK_THROWS_WITH_AS(destabilize(config(unit_square(), {{{0, 0}, 0}, {{1, 1}, -1}})),
                       doctest::Contains("PreconditionViolated"), Error);
  CHECK_THROWS_AS(destabilize(f1_negative(), {1, 8, {}}), Error);
}

TEST_CASE("destabilize produces a re-verifiable certificate") {
  const auto r = destabilize(f1_negative());
  REQUIRE(r.status == DestabilizeStatus::kCertificate);
  const auto& c = *r.certificate;
  CHECK(c.df_input == Rational(-5, 108));
  CHECK(c.chow > Rational(0));
  CHECK(c.df_blowup_at_gamma_star < Rational(0));
  CHECK(c.df_blowup_samples.size() == 31);
  for (const auto& [g, f] : c.df_blowup_samples)
    if (g >= c.gamma_star) CHECK(f < Rational(0));
  CHECK(c.input_hash.size() == 64);
  CHECK(verify_certificate(f1_negative(), c).ok);

  auto tampered = c;
  tampered.chow = tampered.chow + Rational(1);
  CHECK_FALSE(verify_certificate(f1_negative(), tampered).ok);
  tampered = c;
  tampered.df_blowup_samples.back().second = Rational(-1);
  CHECK_FALSE(verify_certificate(f1_negative(), tampered).ok);
  CHECK_FALSE(verify_certificate(config(f1_trapezoid(), {{{-2, -2}, -1}, {{0, 2}, -1}}), c).ok);
}

TEST_CASE("destabilize with a single-gamma budget") {
  const auto r = destabilize(f1_negative(), {2, 2, {}});
  CHECK(r.status == DestabilizeStatus::kCertificate);
  CHECK(r.certificate->gamma_star == 2);
  const auto j = to_json(r).dump();
  CHECK(j.find("\"status\":\"certificate\"") != std::string::npos);
}

TEST_CASE("search_configs") {
  SearchOptions opts;
  opts.bound = 1;
  opts.pieces = 2;
  opts.predicate = Predicate::kPositive;
  const auto pos = search_configs(unit_square(), opts);
  CHECK(pos.examined == 351);
  const auto corner = config(unit_square(), {{{0, 0}, 0}, {{1, 1}, -1}});
  CHECK(std::any_of(pos.hits.begin(), pos.hits.end(), [&](const SearchHit& h) { return h.config == corner; }));
  for (const auto& h : pos.hits) CHECK(h.df.futaki > Rational(0));

  opts.predicate = Predicate::kProduct;
  const auto prod = search_configs(unit_square(), opts);
  CHECK_FALSE(prod.hits.empty());
  for (const auto& h : prod.hits) {
    CHECK(h.config.function().pieces().size() == 1);
    CHECK(h.df.futaki == Rational(0));
  }
  opts.predicate = Predicate::kAny;
  const auto any = search_configs(unit_square(), opts);
  const auto singles = std::count_if(any.hits.begin(), any.hits.end(), [](const SearchHit& h) { return h.df.is_product; });
  CHECK(static_cast<std::size_t>(singles) == prod.hits.size());

  opts.budget = 100;
  CHECK_THROWS_WITH_AS(search_configs(unit_square(), opts), doctest::Contains("BudgetExceeded"), Error);
  CHECK_THROWS_AS(parse_predicate("sometimes"), Error);
}

TEST_CASE("seeded search is deterministic") {
  SearchOptions opts;
  opts.bound = 2;
  opts.pieces = 2;
  opts.seed = 99;
  opts.budget = 60;
  opts.predicate = Predicate::kNonProduct;
  const auto a = to_json(search_configs(f1_trapezoid(), opts)).dump();
  const auto b = to_json(search_configs(f1_trapezoid(), opts)).dump();
  CHECK(a == b);
  opts.seed = 100;
  CHECK(to_json(search_configs(f1_trapezoid(), opts)).dump() != a);
}

TEST_CASE("nonpositive nonproduct corpus destabilizes") {
  SearchOptions opts;
  opts.bound = 2;
  opts.pieces = 2;
  opts.seed = 3;
  opts.budget = 300;
  opts.predicate = Predicate::kNonPositiveNonProduct;
  const auto found = search_configs(f1_trapezoid(), opts);
  REQUIRE(found.hits.size() >= 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& tc = found.hits[i].config;
    const auto r = destabilize(tc, {2, 32, {}});
    REQUIRE(r.certificate);
    CHECK(verify_certificate(tc, *r.certificate).ok);
  }
}

TEST_CASE("vanishing nonproduct input on F_1") {
  // f = y - x - 2 + max(1 - x, 0): the nonlinear part cancels the classical Futaki term
  const auto tc = config(f1_trapezoid(), {{{-2, 1}, -1}, {{-1, 1}, -2}});
  const auto df = donaldson_futaki(tc);
  CHECK(df.futaki == Rational(0));
  CHECK(df.verdict == Verdict::kVanishingNonProduct);
  const auto r = destabilize(tc, {2, 12, {}});
  REQUIRE(r.certificate);
  CHECK(r.certificate->df_blowup_at_gamma_star == Rational(-7, 121));
  CHECK(verify_certificate(tc, *r.certificate).ok);
}

TEST_CASE("selftest passes") {
  std::ostringstream out;
  CHECK(run_selftest(out));
  CHECK(out.str().find("FAIL") == std::string::npos);
}
