#include "gsf/fuzzy.hpp"

#include <algorithm>

namespace gsf {

  FuzzySubset::FuzzySubset(StructurePtr structure, std::vector<FuzzyValue> grades)
      : _structure(std::move(structure)), _grades(std::move(grades)) {
    if (_grades.size() != _structure->size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "fuzzy subset has " + std::to_string(_grades.size())
                      + " grades, carrier has "
                      + std::to_string(_structure->size()));
    }
  }

  FuzzySubset FuzzySubset::zero(StructurePtr structure) {
    auto const n = structure->size();
    return FuzzySubset(std::move(structure), std::vector<FuzzyValue>(n));
  }

  FuzzySubset FuzzySubset::characteristic(StructurePtr       structure,
                                          CrispSubset const& A) {
    return constant(std::move(structure), FuzzyValue::one(), A);
  }

  FuzzySubset FuzzySubset::constant(StructurePtr                      structure,
                                    FuzzyValue                        c,
                                    std::optional<CrispSubset> const& X) {
    auto const              n = structure->size();
    std::vector<FuzzyValue> grades(n);
    for (Element x = 0; x < n; ++x) {
      if (!X || X->contains(x)) {
        grades[x] = c;
      }
    }
    return FuzzySubset(std::move(structure), std::move(grades));
  }

  FuzzyValue const& FuzzySubset::at(Element x) const {
    if (x >= _grades.size()) {
      throw Error(ErrorCode::unknown_element,
                  "element index " + std::to_string(x) + " outside carrier");
    }
    return _grades[x];
  }

  bool FuzzySubset::is_zero() const {
    return std::all_of(_grades.begin(), _grades.end(), [](auto const& v) {
      return v.is_zero();
    });
  }

  bool operator==(FuzzySubset const& a, FuzzySubset const& b) {
    return (a._structure == b._structure || *a._structure == *b._structure)
           && a._grades == b._grades;
  }

  void require_same_structure(FuzzySubset const& a, FuzzySubset const& b) {
    if (a.structure_ptr() != b.structure_ptr()
        && a.structure() != b.structure()) {
      throw Error(ErrorCode::structure_mismatch,
                  "fuzzy subsets live on different structures");
    }
  }

  FuzzyPoint FuzzyPoint::make(Element support, FuzzyValue value) {
    if (value.is_zero()) {
      throw Error(ErrorCode::invalid_threshold, "fuzzy point value must be > 0");
    }
    return FuzzyPoint{support, value};
  }

  std::optional<PointRelation> parse_relation(std::string_view text) {
    PointRelation rel;
    if (text.starts_with("not-")) {
      rel.negated = true;
      text.remove_prefix(4);
    }
    if (text == "in") {
      rel.kind = Relation::in;
    } else if (text == "q") {
      rel.kind = Relation::q;
    } else if (text == "invq") {
      rel.kind = Relation::in_or_q;
    } else if (text == "inandq") {
      rel.kind = Relation::in_and_q;
    } else {
      return std::nullopt;
    }
    return rel;
  }

  std::string to_string(PointRelation rel) {
    std::string out = rel.negated ? "not-" : "";
    switch (rel.kind) {
      case Relation::in:
        return out + "in";
      case Relation::q:
        return out + "q";
      case Relation::in_or_q:
        return out + "invq";
      case Relation::in_and_q:
        return out + "inandq";
    }
    return out;
  }

  bool relation_holds(FuzzyValue const& grade,
                      FuzzyValue const& t,
                      PointRelation     rel) {
    bool const belongs = grade >= t;
    bool const quasi   = sum_exceeds_one(grade, t);
    bool       result  = false;
    switch (rel.kind) {
      case Relation::in:
        result = belongs;
        break;
      case Relation::q:
        result = quasi;
        break;
      case Relation::in_or_q:
        result = belongs || quasi;
        break;
      case Relation::in_and_q:
        result = belongs && quasi;
        break;
    }
    return result != rel.negated;
  }

  bool point_satisfies(FuzzyPoint const&  p,
                       FuzzySubset const& mu,
                       PointRelation      rel) {
    return relation_holds(mu.at(p.support), p.value, rel);
  }

  LevelSets level_sets(FuzzySubset const& mu, FuzzyValue const& t) {
    if (t.is_zero()) {
      throw Error(ErrorCode::invalid_threshold, "threshold must lie in (0,1]");
    }
    auto const n = mu.size();
    LevelSets  out{CrispSubset(n), CrispSubset(n), CrispSubset(n)};
    for (Element x = 0; x < n; ++x) {
      if (mu(x) >= t) {
        out.upper.insert(x);
        out.bracket.insert(x);
      }
      if (sum_exceeds_one(mu(x), t)) {
        out.quasi.insert(x);
        out.bracket.insert(x);
      }
    }
    return out;
  }

  CrispSubset support(FuzzySubset const& mu) {
    CrispSubset out(mu.size());
    for (Element x = 0; x < mu.size(); ++x) {
      if (!mu(x).is_zero()) {
        out.insert(x);
      }
    }
    return out;
  }

  FuzzySubset o_product(FuzzySubset const& lambda, FuzzySubset const& mu) {
    require_same_structure(lambda, mu);
    auto const&             S = lambda.structure();
    std::vector<FuzzyValue> out(S.size());
    for (Element y = 0; y < S.size(); ++y) {
      for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
        for (Element z = 0; z < S.size(); ++z) {
          auto& slot = out[S(y, g, z)];
          slot       = std::max(slot, std::min(lambda(y), mu(z)));
        }
      }
    }
    return FuzzySubset(lambda.structure_ptr(), std::move(out));
  }

  FuzzySubset o05_product(FuzzySubset const& mu1, FuzzySubset const& mu2) {
    require_same_structure(mu1, mu2);
    auto const&             S    = mu1.structure();
    auto const              half = FuzzyValue::half();
    std::vector<FuzzyValue> out(S.size());
    for (Element y = 0; y < S.size(); ++y) {
      for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
        for (Element z = 0; z < S.size(); ++z) {
          auto& slot = out[S(y, g, z)];
          slot       = std::max(slot, std::min({mu1(y), mu2(z), half}));
        }
      }
    }
    return FuzzySubset(mu1.structure_ptr(), std::move(out));
  }

  FuzzySubset cap05(FuzzySubset const& mu1, FuzzySubset const& mu2) {
    require_same_structure(mu1, mu2);
    auto const              half = FuzzyValue::half();
    std::vector<FuzzyValue> out(mu1.size());
    for (Element x = 0; x < mu1.size(); ++x) {
      out[x] = std::min({mu1(x), mu2(x), half});
    }
    return FuzzySubset(mu1.structure_ptr(), std::move(out));
  }

  FuzzySubset pointwise_family(Combine                      combine,
                               std::span<FuzzySubset const> family) {
    if (family.empty()) {
      throw Error(ErrorCode::empty_family, "pointwise combination of no subsets");
    }
    auto grades = family.front().grades();
    for (auto const& mu : family.subspan(1)) {
      require_same_structure(family.front(), mu);
      for (Element x = 0; x < grades.size(); ++x) {
        grades[x] = combine == Combine::min ? std::min(grades[x], mu(x))
                                            : std::max(grades[x], mu(x));
      }
    }
    return FuzzySubset(family.front().structure_ptr(), std::move(grades));
  }

  bool is_contained(FuzzySubset const& a, FuzzySubset const& b) {
    require_same_structure(a, b);
    for (Element x = 0; x < a.size(); ++x) {
      if (a(x) > b(x)) {
        return false;
      }
    }
    return true;
  }

  std::vector<FuzzyValue> cell_representatives(std::vector<FuzzyValue> breakpoints) {
    breakpoints.push_back(FuzzyValue::one());
    std::erase_if(breakpoints, [](auto const& v) { return v.is_zero(); });
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                      breakpoints.end());
    std::vector<FuzzyValue> out;
    out.reserve(2 * breakpoints.size());
    FuzzyValue previous = FuzzyValue::zero();
    for (auto const& b : breakpoints) {
      out.push_back(FuzzyValue::midpoint(previous, b));
      out.push_back(b);
      previous = b;
    }
    return out;
  }

  std::vector<FuzzyValue> critical_thresholds(FuzzySubset const& mu) {
    std::vector<FuzzyValue> breakpoints{FuzzyValue::half()};
    for (auto const& v : mu.grades()) {
      breakpoints.push_back(v);
      breakpoints.push_back(v.complement());
    }
    return cell_representatives(std::move(breakpoints));
  }

}  // namespace gsf
