#include "gsf/predicates.hpp"

#include <algorithm>

namespace gsf {

  namespace {
    void require_nonzero(FuzzySubset const& mu) {
      if (mu.is_zero()) {
        throw Error(ErrorCode::empty_fuzzy_subset,
                    "predicates are defined for non-empty fuzzy subsets only");
      }
    }

    Witness pair_witness(Element x, Element y, GammaIndex g) {
      return Witness{{x, y}, {g}, std::nullopt, std::nullopt};
    }

    Witness triple_witness(Element    x,
                           Element    y,
                           Element    z,
                           GammaIndex g,
                           GammaIndex d) {
      return Witness{{x, y, z}, {g, d}, std::nullopt, std::nullopt};
    }

    // Scans all (x, y, gamma) in order and reports the first pair for which
    // `ok(mu(x), mu(y), mu(x gamma y))` fails.
    template <typename Check>
    PredicateVerdict scan_pairs(FuzzySubset const& mu, Check&& ok) {
      auto const& S = mu.structure();
      for (Element x = 0; x < S.size(); ++x) {
        for (Element y = 0; y < S.size(); ++y) {
          for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
            if (!ok(mu(x), mu(y), mu(S(x, g, y)))) {
              return PredicateVerdict::fail(pair_witness(x, y, g));
            }
          }
        }
      }
      return PredicateVerdict::pass();
    }

    // As above over (x, y, z, gamma, delta) with ok(mu(x), mu(z), mu(w)).
    template <typename Check>
    PredicateVerdict scan_triples(FuzzySubset const& mu, Check&& ok) {
      auto const& S = mu.structure();
      auto const  k = S.gamma_count();
      for (Element x = 0; x < S.size(); ++x) {
        for (Element y = 0; y < S.size(); ++y) {
          for (Element z = 0; z < S.size(); ++z) {
            for (GammaIndex g = 0; g < k; ++g) {
              Element const xy = S(x, g, y);
              for (GammaIndex d = 0; d < k; ++d) {
                if (!ok(mu(x), mu(z), mu(S(xy, d, z)))) {
                  return PredicateVerdict::fail(triple_witness(x, y, z, g, d));
                }
              }
            }
          }
        }
      }
      return PredicateVerdict::pass();
    }

    // The universally quantified thresholds are reduced to finitely many
    // representatives. For fixed elements, every atomic condition in the
    // premise and conclusion has the form `t <= c` or `t > c` (and the same
    // for r and min(t, r)) with c in B = {mu(u), 1 - mu(u)} for the elements
    // u involved, plus 1. Each such condition is constant on the cells
    // {c_i}, (c_i, c_{i+1}) of the partition of (0,1] induced by B, so it is
    // enough to test one representative per cell for t and for r. Since t and
    // r range over the same representatives, min(t, r) is itself a
    // representative of the cell containing the true minimum.
    struct Cells {
      std::vector<FuzzyValue> values;
    };

    Cells cells_for(std::initializer_list<FuzzyValue> grades) {
      std::vector<FuzzyValue> breakpoints;
      for (auto const& g : grades) {
        breakpoints.push_back(g);
        breakpoints.push_back(g.complement());
      }
      return Cells{cell_representatives(std::move(breakpoints))};
    }

    // First failing (t, r) in candidate order, if any.
    std::optional<std::pair<FuzzyValue, FuzzyValue>>
    first_threshold_failure(Cells const&       cells,
                            FuzzyValue const&  left,
                            FuzzyValue const&  right,
                            FuzzyValue const&  product,
                            AlphaBetaPair const& pair) {
      for (auto const& t : cells.values) {
        if (!relation_holds(left, t, pair.alpha)) {
          continue;
        }
        for (auto const& r : cells.values) {
          if (!relation_holds(right, r, pair.alpha)) {
            continue;
          }
          if (!relation_holds(product, std::min(t, r), pair.beta)) {
            return std::make_pair(t, r);
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  AlphaBetaPair AlphaBetaPair::make(PointRelation alpha, PointRelation beta) {
    if (alpha.kind == Relation::in_and_q || alpha.negated) {
      throw Error(ErrorCode::invalid_alpha,
                  "alpha must be one of in, q, invq (got " + to_string(alpha)
                      + ")");
    }
    return AlphaBetaPair{alpha, beta};
  }

  PredicateVerdict is_fuzzy_subsemigroup(FuzzySubset const& mu) {
    require_nonzero(mu);
    return scan_pairs(mu, [](auto const& mx, auto const& my, auto const& mxy) {
      return mxy >= std::min(mx, my);
    });
  }

  PredicateVerdict is_fuzzy_bi_ideal(FuzzySubset const& mu) {
    auto verdict = is_fuzzy_subsemigroup(mu);
    if (!verdict.holds) {
      return verdict;
    }
    return scan_triples(mu, [](auto const& mx, auto const& mz, auto const& mw) {
      return mw >= std::min(mx, mz);
    });
  }

  PredicateVerdict is_eq_subsemigroup(FuzzySubset const& mu) {
    require_nonzero(mu);
    auto const half = FuzzyValue::half();
    return scan_pairs(mu, [&](auto const& mx, auto const& my, auto const& mxy) {
      return mxy >= std::min({mx, my, half});
    });
  }

  PredicateVerdict is_eq_bi_ideal(FuzzySubset const& mu) {
    auto verdict = is_eq_subsemigroup(mu);
    if (!verdict.holds) {
      return verdict;
    }
    auto const half = FuzzyValue::half();
    return scan_triples(mu, [&](auto const& mx, auto const& mz, auto const& mw) {
      return mw >= std::min({mx, mz, half});
    });
  }

  PredicateVerdict is_eq_one_sided_ideal(FuzzySubset const& mu, Side side) {
    require_nonzero(mu);
    auto const half = FuzzyValue::half();
    return scan_pairs(mu, [&](auto const& mx, auto const& my, auto const& mxy) {
      return mxy >= std::min(side == Side::left ? my : mx, half);
    });
  }

  PredicateVerdict is_eq_ideal(FuzzySubset const& mu) {
    auto verdict = is_eq_one_sided_ideal(mu, Side::left);
    if (!verdict.holds) {
      return verdict;
    }
    return is_eq_one_sided_ideal(mu, Side::right);
  }

  bool subset_or_q(FuzzySubset const& nu, FuzzySubset const& mu) {
    require_same_structure(nu, mu);
    for (Element x = 0; x < mu.size(); ++x) {
      if (mu(x) < std::min(nu(x), mu(x).complement())) {
        return false;
      }
    }
    return true;
  }

  PredicateVerdict is_alpha_beta_subsemigroup(FuzzySubset const& mu,
                                              AlphaBetaPair      pair) {
    pair = AlphaBetaPair::make(pair.alpha, pair.beta);
    require_nonzero(mu);
    auto const& S = mu.structure();
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
          auto const& product = mu(S(x, g, y));
          auto const  cells   = cells_for({mu(x), mu(y), product});
          if (auto bad = first_threshold_failure(cells, mu(x), mu(y), product,
                                                 pair)) {
            auto w = pair_witness(x, y, g);
            w.t    = bad->first;
            w.r    = bad->second;
            return PredicateVerdict::fail(std::move(w));
          }
        }
      }
    }
    return PredicateVerdict::pass();
  }

  PredicateVerdict is_alpha_beta_bi_ideal(FuzzySubset const& mu,
                                          AlphaBetaPair      pair) {
    auto verdict = is_alpha_beta_subsemigroup(mu, pair);
    if (!verdict.holds) {
      return verdict;
    }
    auto const& S = mu.structure();
    auto const  k = S.gamma_count();
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        for (Element z = 0; z < S.size(); ++z) {
          for (GammaIndex g = 0; g < k; ++g) {
            Element const xy = S(x, g, y);
            for (GammaIndex d = 0; d < k; ++d) {
              auto const& product = mu(S(xy, d, z));
              auto const  cells   = cells_for({mu(x), mu(z), product});
              if (auto bad = first_threshold_failure(cells, mu(x), mu(z),
                                                     product, pair)) {
                auto w = triple_witness(x, y, z, g, d);
                w.t    = bad->first;
                w.r    = bad->second;
                return PredicateVerdict::fail(std::move(w));
              }
            }
          }
        }
      }
    }
    return PredicateVerdict::pass();
  }

  bool consistency_eq_definitions(FuzzySubset const& mu) {
    auto const in_in = AlphaBetaPair::make({Relation::in}, {Relation::in});
    return is_fuzzy_subsemigroup(mu).holds
               == is_alpha_beta_subsemigroup(mu, in_in).holds
           && is_fuzzy_bi_ideal(mu).holds
                  == is_alpha_beta_bi_ideal(mu, in_in).holds;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named predicates
  ////////////////////////////////////////////////////////////////////////

  std::string PredicateSpec::name() const {
    switch (kind) {
      case PredicateKind::fuzzy_subsemigroup:
        return "fuzzy-subsemigroup";
      case PredicateKind::fuzzy_bi_ideal:
        return "fuzzy-bi-ideal";
      case PredicateKind::eq_subsemigroup:
        return "eq-subsemigroup";
      case PredicateKind::eq_bi_ideal:
        return "eq-bi-ideal";
      case PredicateKind::eq_left_ideal:
        return "eq-left-ideal";
      case PredicateKind::eq_right_ideal:
        return "eq-right-ideal";
      case PredicateKind::eq_ideal:
        return "eq-ideal";
      case PredicateKind::ab_subsemigroup:
        return "ab-subsemigroup:" + to_string(pair->alpha) + ","
               + to_string(pair->beta);
      case PredicateKind::ab_bi_ideal:
        return "ab-bi-ideal:" + to_string(pair->alpha) + ","
               + to_string(pair->beta);
    }
    return "?";
  }

  PredicateSpec parse_predicate(std::string_view text) {
    std::string name(text);
    std::replace(name.begin(), name.end(), '_', '-');
    auto unknown = [&] {
      return Error(ErrorCode::unknown_predicate_name,
                   "unknown predicate '" + std::string(text) + "'");
    };
    static constexpr std::pair<std::string_view, PredicateKind> plain[] = {
        {"fuzzy-subsemigroup", PredicateKind::fuzzy_subsemigroup},
        {"fuzzy-bi-ideal", PredicateKind::fuzzy_bi_ideal},
        {"eq-subsemigroup", PredicateKind::eq_subsemigroup},
        {"eq-bi-ideal", PredicateKind::eq_bi_ideal},
        {"eq-left-ideal", PredicateKind::eq_left_ideal},
        {"eq-right-ideal", PredicateKind::eq_right_ideal},
        {"eq-ideal", PredicateKind::eq_ideal},
    };
    for (auto const& [spelling, kind] : plain) {
      if (name == spelling) {
        return PredicateSpec{kind, std::nullopt};
      }
    }

    auto make_pair = [&](std::string_view a, std::string_view b) {
      auto alpha = parse_relation(a);
      auto beta  = parse_relation(b);
      if (!alpha || !beta) {
        throw unknown();
      }
      return AlphaBetaPair::make(*alpha, *beta);
    };

    // ab-subsemigroup:ALPHA,BETA and ab-bi-ideal:ALPHA,BETA
    if (auto colon = name.find(':'); colon != std::string::npos) {
      auto head  = std::string_view(name).substr(0, colon);
      auto tail  = std::string_view(name).substr(colon + 1);
      auto comma = tail.find(',');
      if (comma == std::string_view::npos) {
        throw unknown();
      }
      auto pair = make_pair(tail.substr(0, comma), tail.substr(comma + 1));
      if (head == "ab-subsemigroup") {
        return PredicateSpec{PredicateKind::ab_subsemigroup, pair};
      }
      if (head == "ab-bi-ideal") {
        return PredicateSpec{PredicateKind::ab_bi_ideal, pair};
      }
      throw unknown();
    }

    // ALPHA-BETA-subsemigroup and ALPHA-BETA-bi-ideal
    for (auto [suffix, kind] :
         {std::pair<std::string_view, PredicateKind>{
              "-subsemigroup", PredicateKind::ab_subsemigroup},
          {"-bi-ideal", PredicateKind::ab_bi_ideal}}) {
      if (!std::string_view(name).ends_with(suffix)) {
        continue;
      }
      auto stem = std::string_view(name).substr(0, name.size() - suffix.size());
      // Relations may carry a "not-" prefix, so split at the last hyphen not
      // belonging to a prefix.
      for (std::size_t cut = stem.find('-'); cut != std::string_view::npos;
           cut             = stem.find('-', cut + 1)) {
        auto alpha = parse_relation(stem.substr(0, cut));
        auto beta  = parse_relation(stem.substr(cut + 1));
        if (alpha && beta) {
          return PredicateSpec{kind, AlphaBetaPair::make(*alpha, *beta)};
        }
      }
    }
    throw unknown();
  }

  PredicateVerdict evaluate(PredicateSpec const& spec, FuzzySubset const& mu) {
    switch (spec.kind) {
      case PredicateKind::fuzzy_subsemigroup:
        return is_fuzzy_subsemigroup(mu);
      case PredicateKind::fuzzy_bi_ideal:
        return is_fuzzy_bi_ideal(mu);
      case PredicateKind::eq_subsemigroup:
        return is_eq_subsemigroup(mu);
      case PredicateKind::eq_bi_ideal:
        return is_eq_bi_ideal(mu);
      case PredicateKind::eq_left_ideal:
        return is_eq_one_sided_ideal(mu, Side::left);
      case PredicateKind::eq_right_ideal:
        return is_eq_one_sided_ideal(mu, Side::right);
      case PredicateKind::eq_ideal:
        return is_eq_ideal(mu);
      case PredicateKind::ab_subsemigroup:
        return is_alpha_beta_subsemigroup(mu, *spec.pair);
      case PredicateKind::ab_bi_ideal:
        return is_alpha_beta_bi_ideal(mu, *spec.pair);
    }
    return PredicateVerdict::pass();
  }

}  // namespace gsf
