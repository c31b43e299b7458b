#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsf/fuzzy.hpp"

namespace gsf {

  // The data refuting a predicate. `elements` is (x, y) or (x, y, z),
  // `gammas` is (gamma) or (gamma, delta); t and r are only set by the
  // threshold-quantified (alpha, beta) deciders.
  struct Witness {
    std::vector<Element>      elements;
    std::vector<GammaIndex>   gammas;
    std::optional<FuzzyValue> t;
    std::optional<FuzzyValue> r;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct PredicateVerdict {
    bool                   holds = true;
    std::optional<Witness> witness;

    static PredicateVerdict pass() {
      return {};
    }
    static PredicateVerdict fail(Witness w) {
      return {false, std::move(w)};
    }
  };

  // (alpha, beta) with alpha in {in, q, in-or-q}.
  struct AlphaBetaPair {
    PointRelation alpha;
    PointRelation beta;

    /// Throws Error(invalid_alpha) if alpha is in-and-q or negated.
    static AlphaBetaPair make(PointRelation alpha, PointRelation beta);

    friend bool operator==(AlphaBetaPair const&, AlphaBetaPair const&) = default;
  };

  // All deciders below throw Error(empty_fuzzy_subset) when mu is zero.

  /// mu(x gamma y) >= min{mu(x), mu(y)}
  PredicateVerdict is_fuzzy_subsemigroup(FuzzySubset const& mu);
  /// Fuzzy subsemigroup and mu(x alpha y beta z) >= min{mu(x), mu(z)}
  PredicateVerdict is_fuzzy_bi_ideal(FuzzySubset const& mu);

  /// (in, in-or-q) fuzzy subsemigroup, via mu(x gamma y) >= min{mu(x), mu(y), 1/2}.
  PredicateVerdict is_eq_subsemigroup(FuzzySubset const& mu);
  /// (in, in-or-q) fuzzy bi-ideal, via the 1/2-capped triple inequality.
  PredicateVerdict is_eq_bi_ideal(FuzzySubset const& mu);

  enum class Side { left, right };

  /// left: mu(x gamma y) >= min{mu(y), 1/2}; right: ... >= min{mu(x), 1/2}.
  PredicateVerdict is_eq_one_sided_ideal(FuzzySubset const& mu, Side side);
  /// Both sides; the left witness is reported first.
  PredicateVerdict is_eq_ideal(FuzzySubset const& mu);

  /// nu is contained in "in-or-q mu": every x_r with r <= nu(x) satisfies
  /// in-or-q against mu. Decided by mu(x) >= min{nu(x), 1 - mu(x)}.
  bool subset_or_q(FuzzySubset const& nu, FuzzySubset const& mu);

  /// Decides: for all x, y, gamma and t, r in (0,1],
  ///   x_t alpha mu and y_r alpha mu  =>  (x gamma y)_{min(t,r)} beta mu.
  PredicateVerdict is_alpha_beta_subsemigroup(FuzzySubset const& mu,
                                              AlphaBetaPair      pair);

  /// The subsemigroup condition plus, for all x, y, z, gamma, delta, t, r:
  ///   x_t alpha mu and z_r alpha mu  =>  (x gamma y delta z)_{min(t,r)} beta mu.
  PredicateVerdict is_alpha_beta_bi_ideal(FuzzySubset const& mu,
                                          AlphaBetaPair      pair);

  /// The classical inequalities agree with their (in, in) point forms.
  bool consistency_eq_definitions(FuzzySubset const& mu);

  // Named predicates, as spelled on the command line.
  enum class PredicateKind {
    fuzzy_subsemigroup,
    fuzzy_bi_ideal,
    eq_subsemigroup,
    eq_bi_ideal,
    eq_left_ideal,
    eq_right_ideal,
    eq_ideal,
    ab_subsemigroup,
    ab_bi_ideal,
  };

  struct PredicateSpec {
    PredicateKind                kind;
    std::optional<AlphaBetaPair> pair;

    [[nodiscard]] std::string name() const;
  };

  /// Accepts fuzzy-subsemigroup, fuzzy-bi-ideal, eq-subsemigroup,
  /// eq-bi-ideal, eq-left-ideal, eq-right-ideal, eq-ideal,
  /// ab-subsemigroup:ALPHA,BETA, ab-bi-ideal:ALPHA,BETA and the shorthand
  /// ALPHA-BETA-subsemigroup / ALPHA-BETA-bi-ideal (e.g. in-in-subsemigroup).
  /// Underscores are accepted in place of hyphens. Throws
  /// Error(unknown_predicate_name) or Error(invalid_alpha).
  PredicateSpec parse_predicate(std::string_view text);

  PredicateVerdict evaluate(PredicateSpec const& spec, FuzzySubset const& mu);

}  // namespace gsf
