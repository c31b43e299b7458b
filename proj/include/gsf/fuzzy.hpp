#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsf/structure.hpp"
#include "gsf/value.hpp"

namespace gsf {

  // A total map from the carrier of a Gamma-semigroup into [0,1].
  class FuzzySubset {
   public:
    /// Throws Error(index_out_of_range) if grades.size() != structure size.
    FuzzySubset(StructurePtr structure, std::vector<FuzzyValue> grades);

    static FuzzySubset zero(StructurePtr structure);
    /// 1 on A, 0 elsewhere.
    static FuzzySubset characteristic(StructurePtr structure, CrispSubset const& A);
    /// c on X (the whole carrier when X is omitted), 0 elsewhere.
    static FuzzySubset constant(StructurePtr                      structure,
                                FuzzyValue                        c,
                                std::optional<CrispSubset> const& X = {});

    [[nodiscard]] GammaSemigroup const& structure() const {
      return *_structure;
    }
    [[nodiscard]] StructurePtr const& structure_ptr() const noexcept {
      return _structure;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _grades.size();
    }
    [[nodiscard]] FuzzyValue const& operator()(Element x) const {
      return _grades[x];
    }
    [[nodiscard]] FuzzyValue const& at(Element x) const;
    [[nodiscard]] std::vector<FuzzyValue> const& grades() const noexcept {
      return _grades;
    }

    /// True when every grade is 0, i.e. the subset is empty.
    [[nodiscard]] bool is_zero() const;

    /// Same structure (by value) and identical grades.
    friend bool operator==(FuzzySubset const& a, FuzzySubset const& b);

   private:
    StructurePtr            _structure;
    std::vector<FuzzyValue> _grades;
  };

  /// Throws Error(structure_mismatch) unless both are over the same structure.
  void require_same_structure(FuzzySubset const& a, FuzzySubset const& b);

  // x_t: the fuzzy point with support x and value t in (0,1].
  struct FuzzyPoint {
    Element    support;
    FuzzyValue value;

    /// Throws Error(invalid_threshold) if value == 0.
    static FuzzyPoint make(Element support, FuzzyValue value);
  };

  enum class Relation { in, q, in_or_q, in_and_q };

  struct PointRelation {
    Relation kind    = Relation::in;
    bool     negated = false;

    friend bool operator==(PointRelation const&, PointRelation const&)
        = default;
  };

  /// "in", "q", "invq", "inandq", optionally prefixed by "not-".
  std::optional<PointRelation> parse_relation(std::string_view text);
  std::string                  to_string(PointRelation rel);

  /// The relation between a point of value t and an element of grade `grade`.
  bool relation_holds(FuzzyValue const& grade,
                      FuzzyValue const& t,
                      PointRelation     rel);

  /// Throws Error(unknown_element) if the support lies outside the carrier.
  bool point_satisfies(FuzzyPoint const&  p,
                       FuzzySubset const& mu,
                       PointRelation      rel);

  struct LevelSets {
    CrispSubset upper;    // U(mu; t) = {x : mu(x) >= t}
    CrispSubset quasi;    // Q(mu; t) = {x : mu(x) + t > 1}
    CrispSubset bracket;  // [mu]_t = U u Q
  };

  /// Throws Error(invalid_threshold) unless 0 < t <= 1.
  LevelSets level_sets(FuzzySubset const& mu, FuzzyValue const& t);

  CrispSubset support(FuzzySubset const& mu);

  /// Sup-min product; 0 where an element has no factorization.
  FuzzySubset o_product(FuzzySubset const& lambda, FuzzySubset const& mu);

  /// Sup-min product with every min additionally capped at 1/2.
  FuzzySubset o05_product(FuzzySubset const& mu1, FuzzySubset const& mu2);

  /// min{mu1(x), mu2(x), 1/2}
  FuzzySubset cap05(FuzzySubset const& mu1, FuzzySubset const& mu2);

  enum class Combine { min, max };

  /// Pointwise min (intersection) or max (union) of a nonempty family.
  FuzzySubset pointwise_family(Combine combine, std::span<FuzzySubset const> family);

  /// Pointwise a <= b.
  bool is_contained(FuzzySubset const& a, FuzzySubset const& b);

  /// Grades where every t-indexed predicate changes value: {mu(x)} u
  /// {1 - mu(x)} u {1/2, 1} restricted to (0,1], plus the midpoint of every
  /// consecutive pair and of (0, smallest). Sorted ascending.
  std::vector<FuzzyValue> critical_thresholds(FuzzySubset const& mu);

  /// Breakpoints plus in-between representatives for an explicit breakpoint
  /// list (need not be sorted or unique). Zeros are dropped; 1 is always
  /// included.
  std::vector<FuzzyValue> cell_representatives(std::vector<FuzzyValue> breakpoints);

}  // namespace gsf
