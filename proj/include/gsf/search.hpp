#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsf/fuzzy.hpp"
#include "gsf/predicates.hpp"

namespace gsf {

  ////////////////////////////////////////////////////////////////////////
  // Crisp enumeration
  ////////////////////////////////////////////////////////////////////////

  enum class CrispKind { subsemigroup, left_ideal, right_ideal, bi_ideal };

  /// "subsemigroup", "left", "right", "bi-ideal" (or "bi_ideal").
  std::optional<CrispKind> parse_crisp_kind(std::string_view text);
  std::string              to_string(CrispKind kind);

  /// All nonempty subsets of the given kind, ascending by bitmask (element 0
  /// is the least significant bit). Throws Error(carrier_too_large) when
  /// S.size() > subset_scan_limit.
  std::vector<CrispSubset>
  enumerate_crisp(GammaSemigroup const& S,
                  CrispKind             kind,
                  std::size_t subset_scan_limit = default_subset_scan_limit);

  ////////////////////////////////////////////////////////////////////////
  // Seeded generation
  ////////////////////////////////////////////////////////////////////////

  // Portable pseudo-random source: std::mt19937_64 (whose output sequence is
  // fixed by the standard) with bounded integers drawn by rejection from the
  // raw 64-bit outputs. std::uniform_int_distribution is avoided because its
  // algorithm differs between standard libraries.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    template <typename T>
    void shuffle(std::vector<T>& items) {
      for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[below(i)]);
      }
    }

   private:
    std::mt19937_64 _engine;
  };

  enum class GenerationMode { random, exhaustive };

  struct GeneratorConfig {
    std::size_t    n     = 1;
    std::size_t    k     = 1;
    std::uint64_t  seed  = 0;
    std::uint32_t  grid  = 10;  // grades drawn from {0, 1/d, ..., d/d}
    std::size_t    count = 1;
    GenerationMode mode  = GenerationMode::random;
    // Search nodes allowed per random structure before BudgetExhausted.
    std::size_t attempt_budget = 1'000'000;

    /// Throws Error(invalid_config).
    void validate() const;
  };

  /// Random mode: `count` structures, each the first complete cube found by
  /// a depth-first fill of the n x k x n cube in cell order, trying values
  /// in a freshly shuffled order at every cell and backtracking on any
  /// determined associativity failure; a fill is restarted after 20000
  /// nodes. `attempt_budget` caps total nodes. Deterministic per seed; duplicates
  /// possible. Exhaustive mode (n <= 3, k <= 2): every associative cube, in
  /// lexicographic cube order; `seed` and `count` are ignored.
  /// Throws Error(budget_exhausted) or Error(invalid_config).
  std::vector<GammaSemigroup> generate_structures(GeneratorConfig const& config);

  /// Number of associative cubes of shape n x k x n (exhaustive count).
  std::size_t count_structures(std::size_t n, std::size_t k);

  /// `config.count` fuzzy subsets with grades uniform on the d-grid; zero
  /// subsets are redrawn.
  std::vector<FuzzySubset> random_fuzzy(StructurePtr const&    S,
                                        GeneratorConfig const& config);

  /// `config.count` fuzzy subsets built from random chains C1 < C2 < ... of
  /// crisp subsets of the given kind: grades >= 1/2 on C1, strictly
  /// decreasing grades in (0, 1/2) on each later layer, 0 outside. Every
  /// result is an (in, in-or-q) fuzzy subsemigroup (kind = subsemigroup) or
  /// bi-ideal (kind = bi_ideal).
  std::vector<FuzzySubset> random_chain_fuzzy(StructurePtr const&    S,
                                              CrispKind              kind,
                                              GeneratorConfig const& config);

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  struct GoldenVerdict {
    std::string fuzzy;
    std::string predicate;  // as accepted by parse_predicate
    bool        holds;
  };

  enum class ProductForm {
    half_square,    // mu o0.5 mu
    half_sandwich,  // mu o0.5 1 o0.5 mu
  };

  struct GoldenValue {
    std::string fuzzy;
    ProductForm form;
    Element     at;
    FuzzyValue  value;
  };

  struct Fixture {
    std::string                                      id;
    StructurePtr                                     structure;
    std::vector<std::pair<std::string, FuzzySubset>> fuzzy;
    std::vector<GoldenVerdict>                       expected;
    std::vector<GoldenValue>                         values;

    [[nodiscard]] FuzzySubset const& fuzzy_named(std::string_view name) const;
  };

  /// Z_n with Gamma = {5, 7} and x gamma y = x * gamma * y mod n.
  GammaSemigroup modular_example(std::size_t n);

  /// ex3.4, ex4.6, ex4.27 and ex2.1-mod-<modulus>.
  std::vector<Fixture> fixtures(std::size_t modulus = 12);

  /// Looks up a fixture by id; "ex2.1-mod-N" builds Z_N for any N >= 1.
  std::optional<Fixture> fixture(std::string_view id);

  /// Re-evaluates every golden pair; returns one message per mismatch.
  std::vector<std::string> verify_fixture(Fixture const& fixture);

  ////////////////////////////////////////////////////////////////////////
  // Witness search
  ////////////////////////////////////////////////////////////////////////

  struct SearchSpace {
    std::vector<StructurePtr> structures;
    std::uint32_t             grid = 10;
  };

  struct SearchOutcome {
    bool                       found = false;
    std::size_t                structures_scanned = 0;
    std::uint64_t              candidates_scanned = 0;
    std::size_t                structure_index    = 0;
    StructurePtr               structure;
    std::optional<FuzzySubset> mu;
    std::optional<FuzzySubset> nu;       // pair searches only
    std::optional<FuzzySubset> subject;  // the combination in pair searches
    // Each atom of the expression with its verdict on the witness.
    std::vector<std::pair<std::string, PredicateVerdict>> atoms;
  };

  /// Scans structures in the given order, fuzzy subsets in grid-lexicographic
  /// order (element 0 most significant, zero subset skipped), and reports the
  /// first input satisfying `want`.
  ///
  /// `want` is a boolean expression over predicate names (see
  /// parse_predicate) with AND, OR, NOT and parentheses. The atoms
  /// union_of_two_eq_subsemigroups, union_of_two_eq_bi_ideals,
  /// intersection_of_two_eq_subsemigroups and intersection_of_two_eq_bi_ideals
  /// switch to pairs (mu, nu) with mu <= nu in scan order: the atom holds when
  /// both members pass, and every other atom is evaluated on their pointwise
  /// max (union) or min (intersection). Pairs whose combination is zero
  /// are skipped.
  /// Throws Error(unknown_predicate_name) or Error(syntax_error).
  SearchOutcome find_witness(SearchSpace const& space, std::string_view want);

}  // namespace gsf
