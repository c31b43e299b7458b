#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "gsf/search.hpp"
#include "oracles.hpp"

using namespace gsf;

namespace {
  FuzzySubset grades(StructurePtr const& S, std::vector<std::pair<int, int>> const& g) {
    std::vector<FuzzyValue> v;
    for (auto [p, q] : g) {
      v.emplace_back(p, q);
    }
    return FuzzySubset(S, v);
  }

  PointRelation rel(char const* text) {
    return *parse_relation(text);
  }
}  // namespace

TEST_CASE("relations between points and grades") {
  FuzzyValue const g(3, 5);
  CHECK(relation_holds(g, FuzzyValue(3, 5), rel("in")));
  CHECK_FALSE(relation_holds(g, FuzzyValue(7, 10), rel("in")));
  CHECK(relation_holds(g, FuzzyValue(1, 2), rel("q")));
  CHECK_FALSE(relation_holds(g, FuzzyValue(2, 5), rel("q")));
  CHECK(relation_holds(g, FuzzyValue(7, 10), rel("invq")));
  CHECK(relation_holds(g, FuzzyValue(1, 2), rel("inandq")));
  CHECK_FALSE(relation_holds(g, FuzzyValue(7, 10), rel("inandq")));
  CHECK(relation_holds(g, FuzzyValue(7, 10), rel("not-in")));

  CHECK_FALSE(parse_relation("in-or-q").has_value());
  CHECK(to_string(rel("not-invq")) == "not-invq");

  // Grades at most 1/2 are never in-and-q.
  for (int num = 0; num <= 5; ++num) {
    for (int t = 1; t <= 10; ++t) {
      CHECK_FALSE(relation_holds(FuzzyValue(num, 10), FuzzyValue(t, 10), rel("inandq")));
    }
  }
}

TEST_CASE("fuzzy points") {
  auto const S  = fixture("ex3.4")->structure;
  auto const mu = fixture("ex3.4")->fuzzy_named("mu");
  CHECK_THROWS_AS(FuzzyPoint::make(0, FuzzyValue::zero()), Error);
  CHECK(point_satisfies(FuzzyPoint::make(1, FuzzyValue(3, 5)), mu, rel("in")));
  CHECK_FALSE(point_satisfies(FuzzyPoint::make(1, FuzzyValue(2, 5)), mu, rel("q")));
  CHECK_THROWS_AS(point_satisfies(FuzzyPoint::make(7, FuzzyValue::one()), mu, rel("in")),
                  Error);
}

TEST_CASE("level sets") {
  auto const f  = *fixture("ex4.6");
  auto const mu = f.fuzzy_named("mu");  // a .8, b .7, c .3, d .5, e .6
  auto const L  = level_sets(mu, FuzzyValue(3, 5));
  CHECK(L.upper == CrispSubset(5, {0, 1, 4}));
  CHECK(L.quasi == CrispSubset(5, {0, 1, 3, 4}));
  CHECK(L.bracket == (L.upper | L.quasi));
  CHECK_THROWS_AS(level_sets(mu, FuzzyValue::zero()), Error);
  CHECK(support(mu) == CrispSubset::full(5));
  CHECK(support(FuzzySubset::zero(f.structure)).empty());
}

TEST_CASE("constants and characteristic functions") {
  auto const S = fixture("ex3.4")->structure;
  auto const c = FuzzySubset::constant(S, FuzzyValue::half(), CrispSubset(3, {1}));
  CHECK(c(0) == FuzzyValue::zero());
  CHECK(c(1) == FuzzyValue::half());
  auto const chi = FuzzySubset::characteristic(S, CrispSubset(3, {0, 2}));
  CHECK(chi.grades()
        == std::vector<FuzzyValue>{FuzzyValue::one(), FuzzyValue::zero(), FuzzyValue::one()});
  CHECK(FuzzySubset::zero(S).is_zero());
  CHECK_THROWS_AS(FuzzySubset(S, {FuzzyValue::one()}), Error);
  CHECK_THROWS_AS(static_cast<void>(chi.at(3)), Error);

  auto const other = fixture("ex4.27")->structure;
  CHECK_THROWS_AS(o_product(chi, FuzzySubset::zero(other)), Error);
}

TEST_CASE("products agree with the pull-form oracle") {
  std::size_t checked = 0;
  for (auto const& s : corpus::mixed_samples(2, 11)) {
    auto const& mu = s.mu;
    GeneratorConfig config;
    config.grid  = 10;
    config.count = 1;
    config.seed  = checked;
    auto const nu = random_fuzzy(s.structure, config)[0];
    REQUIRE(o_product(mu, nu) == oracle::to_fuzzy(s.structure, oracle::product(mu, nu)));
    REQUIRE(o05_product(mu, nu)
            == oracle::to_fuzzy(s.structure, oracle::product(mu, nu, Rational(1, 2))));
    auto const cap = cap05(mu, nu);
    for (Element x = 0; x < mu.size(); ++x) {
      REQUIRE(cap(x) == std::min({mu(x), nu(x), FuzzyValue::half()}));
    }
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("0.5-product on the left projection example") {
  auto const f  = *fixture("ex4.27");
  auto const mu = f.fuzzy_named("mu");
  auto const sq = o05_product(mu, mu);
  CHECK(sq(0) == FuzzyValue::half());
  CHECK(mu(0) == FuzzyValue(4, 5));
  auto const one = FuzzySubset::constant(f.structure, FuzzyValue::one());
  CHECK(o05_product(o05_product(mu, one), mu)(0) == FuzzyValue::half());
  // Plain product is not capped.
  CHECK(o_product(mu, mu)(0) == FuzzyValue(4, 5));
}

TEST_CASE("characteristic identities for the half operations") {
  auto const S = fixture("ex3.4")->structure;
  auto const A = FuzzySubset::characteristic(S, CrispSubset(3, {0, 1}));
  auto const B = FuzzySubset::characteristic(S, CrispSubset(3, {1, 2}));
  CHECK(cap05(A, B) == grades(S, {{0, 1}, {1, 2}, {0, 1}}));
}

TEST_CASE("pointwise families") {
  auto const S = fixture("ex3.4")->structure;
  std::vector<FuzzySubset> family{grades(S, {{1, 2}, {1, 5}, {1, 1}}),
                                  grades(S, {{1, 3}, {4, 5}, {0, 1}})};
  CHECK(pointwise_family(Combine::min, family) == grades(S, {{1, 3}, {1, 5}, {0, 1}}));
  CHECK(pointwise_family(Combine::max, family) == grades(S, {{1, 2}, {4, 5}, {1, 1}}));
  CHECK_THROWS_AS(pointwise_family(Combine::min, std::span<FuzzySubset const>{}), Error);
  CHECK(is_contained(pointwise_family(Combine::min, family), family[0]));
  CHECK_FALSE(is_contained(family[0], family[1]));
}

TEST_CASE("critical thresholds") {
  auto const S  = fixture("ex3.4")->structure;
  auto const mu = grades(S, {{1, 5}, {3, 5}, {0, 1}});
  // breakpoints 1/5 2/5 1/2 3/5 4/5 1 with midpoints interleaved
  std::vector<FuzzyValue> const expected{
      {1, 10}, {1, 5},  {3, 10}, {2, 5},  {9, 20}, {1, 2},
      {11, 20}, {3, 5}, {7, 10}, {4, 5},  {9, 10}, {1, 1}};
  CHECK(critical_thresholds(mu) == expected);

  auto const reps = cell_representatives({FuzzyValue::half(), FuzzyValue::half(),
                                          FuzzyValue::zero()});
  CHECK(reps == std::vector<FuzzyValue>{{1, 4}, {1, 2}, {3, 4}, {1, 1}});
}
