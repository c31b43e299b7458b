#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "gsf/search.hpp"
#include "oracles.hpp"

using namespace gsf;

namespace {
  std::vector<std::string> masks(std::vector<CrispSubset> const& subsets) {
    std::vector<std::string> out;
    for (auto const& A : subsets) {
      out.push_back(std::to_string(A.mask()));
    }
    return out;
  }

  std::string cube_digits(GammaSemigroup const& S) {
    std::string out;
    for (auto v : S.cube()) {
      out += std::to_string(v);
    }
    return out;
  }
}  // namespace

TEST_CASE("enumerate_crisp") {
  auto const e427 = fixture("ex4.27")->structure;
  auto const bis  = enumerate_crisp(*e427, CrispKind::bi_ideal);
  CHECK(masks(bis) == std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7"});

  auto const e34 = fixture("ex3.4")->structure;
  auto const b34 = enumerate_crisp(*e34, CrispKind::bi_ideal);
  CHECK(std::find(b34.begin(), b34.end(), CrispSubset(3, {0})) != b34.end());
  auto const s34 = enumerate_crisp(*e34, CrispKind::subsemigroup);
  CHECK(s34.back() == CrispSubset::full(3));

  CHECK_THROWS_AS(enumerate_crisp(modular_example(12), CrispKind::left_ideal, 8), Error);

  for (auto const& S : corpus::exhaustive(3, 2)) {
    auto const sub = enumerate_crisp(*S, CrispKind::subsemigroup);
    for (auto const& B : enumerate_crisp(*S, CrispKind::bi_ideal)) {
      REQUIRE(std::find(sub.begin(), sub.end(), B) != sub.end());
    }
    for (auto kind : {CrispKind::left_ideal, CrispKind::right_ideal}) {
      for (auto const& I : enumerate_crisp(*S, kind)) {
        auto const flags = classify_subset(*S, I);
        REQUIRE(flags.bi_ideal);
      }
    }
  }

  CHECK(parse_crisp_kind("left") == CrispKind::left_ideal);
  CHECK(parse_crisp_kind("bi_ideal") == CrispKind::bi_ideal);
  CHECK_FALSE(parse_crisp_kind("ideal"));
}

TEST_CASE("exhaustive generation") {
  GeneratorConfig config;
  config.mode = GenerationMode::exhaustive;
  config.n    = 1;
  CHECK(generate_structures(config).size() == 1);
  config.n = 2;
  auto const two = generate_structures(config);
  CHECK(two.size() == 8);
  CHECK(cube_digits(two.front()) == "0000");
  config.k = 2;
  CHECK(generate_structures(config).size() == 14);
  config.n = 3;
  auto const all = generate_structures(config);
  CHECK(all.size() == 413);
  for (std::size_t i = 1; i < all.size(); ++i) {
    REQUIRE(std::lexicographical_compare(all[i - 1].cube().begin(), all[i - 1].cube().end(),
                                         all[i].cube().begin(), all[i].cube().end()));
  }
  config.n = 4;
  CHECK_THROWS_AS(generate_structures(config), Error);
}

TEST_CASE("seeded random generation is reproducible") {
  GeneratorConfig config;
  config.n     = 3;
  config.k     = 1;
  config.seed  = 42;
  config.count = 5;
  auto const first = generate_structures(config);
  std::vector<std::string> digits;
  for (auto const& S : first) {
    digits.push_back(cube_digits(S));
    REQUIRE_FALSE(GammaSemigroup::find_associativity_violation(3, 1, S.cube()));
  }
  CHECK(digits == std::vector<std::string>{"121212121", "022111222", "201012120",
                                           "121212121", "011011012"});
  CHECK(generate_structures(config) == first);

  config.n     = 4;
  config.k     = 2;
  config.count = 20;
  for (auto const& S : generate_structures(config)) {
    REQUIRE_FALSE(GammaSemigroup::find_associativity_violation(4, 2, S.cube()));
  }

  config.attempt_budget = 3;
  CHECK_THROWS_AS(generate_structures(config), Error);
  config.n = 0;
  CHECK_THROWS_AS(generate_structures(config), Error);
}

TEST_CASE("seeded fuzzy subsets") {
  auto const      S = fixture("ex3.4")->structure;
  GeneratorConfig config;
  config.seed  = 7;
  config.grid  = 10;
  config.count = 3;
  auto const v = random_fuzzy(S, config);
  REQUIRE(v.size() == 3);
  CHECK(v[0].grades() == std::vector<FuzzyValue>{{0, 1}, {7, 10}, {9, 10}});
  CHECK(v[1].grades() == std::vector<FuzzyValue>{{1, 5}, {1, 2}, {1, 1}});
  CHECK(v[2].grades() == std::vector<FuzzyValue>{{1, 10}, {4, 5}, {1, 5}});
  CHECK(random_fuzzy(S, config) == v);

  config.grid  = 1;
  config.count = 50;
  for (auto const& mu : random_fuzzy(S, config)) {
    for (auto const& g : mu.grades()) {
      REQUIRE((g.is_zero() || g == FuzzyValue::one()));
    }
  }

  auto const single = share(GammaSemigroup::validate({"a"}, {"g"}, {0}));
  config.grid       = 2;
  config.count      = 40;
  std::set<std::string> seen;
  for (auto const& mu : random_fuzzy(single, config)) {
    seen.insert(mu(0).to_string());
  }
  CHECK(seen == std::set<std::string>{"1/2", "1/1"});
}

TEST_CASE("chain samples are (in, in-or-q) substructures") {
  std::uint64_t seed = 0;
  for (auto const& S : corpus::exhaustive(3, 2)) {
    GeneratorConfig config;
    config.grid  = 10;
    config.count = 10;
    config.seed  = ++seed;
    for (auto const& mu : random_chain_fuzzy(S, CrispKind::subsemigroup, config)) {
      REQUIRE_FALSE(mu.is_zero());
      REQUIRE(is_eq_subsemigroup(mu).holds);
    }
    for (auto const& mu : random_chain_fuzzy(S, CrispKind::bi_ideal, config)) {
      REQUIRE(is_eq_bi_ideal(mu).holds);
    }
  }
}

TEST_CASE("fixtures re-verify") {
  auto const all = fixtures();
  REQUIRE(all.size() == 4);
  for (auto const& f : all) {
    CAPTURE(f.id);
    CHECK(verify_fixture(f).empty());
  }
  CHECK(fixture("ex2.1-mod-7")->structure->size() == 7);
  CHECK_FALSE(fixture("ex2.1-mod-0"));
  CHECK_FALSE(fixture("ex9.9"));

  auto broken = *fixture("ex3.4");
  broken.expected.push_back({"mu", "fuzzy-subsemigroup", true});
  CHECK(verify_fixture(broken).size() == 1);
}

TEST_CASE("witness search") {
  auto const e34 = fixture("ex3.4")->structure;
  SearchSpace space{{e34}, 10};
  auto const  hit = find_witness(space, "eq_subsemigroup AND NOT fuzzy_subsemigroup");
  REQUIRE(hit.found);
  CHECK(is_eq_subsemigroup(*hit.mu).holds);
  CHECK_FALSE(is_fuzzy_subsemigroup(*hit.mu).holds);
  CHECK(hit.atoms.size() == 2);

  SearchSpace small{corpus::exhaustive(3, 1), 4};
  auto const  none = find_witness(small, "fuzzy_subsemigroup AND NOT eq_subsemigroup");
  CHECK_FALSE(none.found);
  CHECK(none.structures_scanned == 122);
  CHECK(none.candidates_scanned == 4 + 8 * 24 + 113 * 124);

  CHECK(find_witness(space, "(eq-bi-ideal | !eq-ideal) & in-in-subsemigroup").found);

  CHECK_THROWS_AS(find_witness(space, "eq_subsemigroup AND"), Error);
  CHECK_THROWS_AS(find_witness(space, "(eq_subsemigroup"), Error);
  CHECK_THROWS_AS(find_witness(space, "frobnicate"), Error);
  CHECK_THROWS_AS(find_witness(space, "union_of_two_eq_subsemigroups AND "
                                      "intersection_of_two_eq_bi_ideals"),
                  Error);
}

TEST_CASE("union of two (in, in-or-q) subsemigroups") {
  SearchSpace space{corpus::exhaustive(3, 1), 4};
  auto const  hit = find_witness(space, "union_of_two_eq_subsemigroups AND NOT eq_subsemigroup");
  REQUIRE(hit.found);
  CHECK(hit.structure_index == 17);
  CHECK(cube_digits(*hit.structure) == "000010002");
  CHECK(hit.mu->grades() == std::vector<FuzzyValue>{{0, 1}, {0, 1}, {1, 4}});
  CHECK(hit.nu->grades() == std::vector<FuzzyValue>{{0, 1}, {1, 4}, {0, 1}});
  // Independent confirmation of the counterexample.
  CHECK(oracle::eq_subsemigroup(*hit.mu));
  CHECK(oracle::eq_subsemigroup(*hit.nu));
  CHECK_FALSE(oracle::eq_subsemigroup(*hit.subject));

  auto const meet = find_witness(space, "intersection_of_two_eq_subsemigroups AND NOT eq_subsemigroup");
  CHECK_FALSE(meet.found);
}
