#include "gsf/theorems.hpp"

#include <algorithm>

#include "gsf/search.hpp"

namespace gsf {

  namespace {
    void require_nonempty(FuzzySubset const& mu) {
      if (mu.is_zero()) {
        throw Error(ErrorCode::empty_fuzzy_subset,
                    "theorem reports need a non-empty fuzzy subset");
      }
    }

    AlphaBetaPair in_in_or_q() {
      return AlphaBetaPair::make({Relation::in, false},
                                 {Relation::in_or_q, false});
    }

    FuzzySubset one(StructurePtr const& S) {
      return FuzzySubset::constant(S, FuzzyValue::one());
    }

    // min{lambda(x), 1/2}
    FuzzySubset capped(FuzzySubset const& lambda) {
      return cap05(lambda, one(lambda.structure_ptr()));
    }

    // Upper level sets U(mu; r) over the critical r in (0, 1/2].
    std::vector<CrispSubset> lower_half_levels(FuzzySubset const& mu) {
      std::vector<CrispSubset> out;
      for (auto const& r : critical_thresholds(mu)) {
        if (r > FuzzyValue::half()) {
          break;
        }
        auto level = level_sets(mu, r).upper;
        if (!level.empty()) {
          out.push_back(std::move(level));
        }
      }
      return out;
    }

    std::string flag_list(std::vector<std::size_t> const& indices) {
      std::string out;
      for (auto i : indices) {
        if (!out.empty()) {
          out += ",";
        }
        out += std::to_string(i + 1);
      }
      return out;
    }

    void require_source(Homomorphism const& f, FuzzySubset const& mu) {
      if (!(mu.structure() == f.source())) {
        throw Error(ErrorCode::structure_mismatch,
                    "fuzzy subset does not live on the map's source");
      }
    }
  }  // namespace

  TheoremReport make_report(std::string              theorem_id,
                            std::vector<std::string> labels,
                            std::vector<bool>        flags) {
    TheoremReport report;
    report.theorem_id       = std::move(theorem_id);
    report.condition_labels = std::move(labels);
    report.condition_flags  = std::move(flags);
    auto const& f           = report.condition_flags;
    report.agree = std::adjacent_find(f.begin(), f.end(), std::not_equal_to<>())
                   == f.end();
    if (!report.agree) {
      std::vector<std::size_t> yes, no;
      for (std::size_t i = 0; i < f.size(); ++i) {
        (f[i] ? yes : no).push_back(i);
      }
      report.discrepancy_witness
          = "conditions " + flag_list(yes) + " hold; " + flag_list(no) + " fail";
    }
    return report;
  }

  TheoremReport report_subsemigroup_equivalences(FuzzySubset const& mu) {
    require_nonempty(mu);
    auto const square = o_product(mu, mu);

    bool const c1 = is_alpha_beta_subsemigroup(mu, in_in_or_q()).holds;
    bool const c2 = is_eq_subsemigroup(mu).holds;
    bool const c3 = subset_or_q(square, mu);
    bool const c4 = is_contained(capped(square), mu);
    auto const levels = lower_half_levels(mu);
    bool const c5     = std::all_of(levels.begin(), levels.end(), [&](auto const& A) {
      return classify_subset(mu.structure(), A).subsemigroup;
    });

    auto report = make_report("thm3.2",
                              {"point definition", "capped inequality",
                               "product in in-or-q", "capped product",
                               "level sets"},
                              {c1, c2, c3, c4, c5});
    report.details.emplace_back("levels_checked", std::to_string(levels.size()));
    return report;
  }

  TheoremReport report_bi_ideal_equivalences(FuzzySubset const& mu) {
    require_nonempty(mu);
    auto const square   = o_product(mu, mu);
    auto const sandwich = o_product(o_product(mu, one(mu.structure_ptr())), mu);

    bool const c1     = is_alpha_beta_bi_ideal(mu, in_in_or_q()).holds;
    bool const c2     = is_eq_bi_ideal(mu).holds;
    bool const c3     = subset_or_q(square, mu) && subset_or_q(sandwich, mu);
    bool const c4     = is_contained(capped(square), mu)
                    && is_contained(capped(sandwich), mu);
    auto const levels = lower_half_levels(mu);
    bool const c5     = std::all_of(levels.begin(), levels.end(), [&](auto const& A) {
      return classify_subset(mu.structure(), A).bi_ideal;
    });

    auto report = make_report("thm3.5",
                              {"point definition", "capped inequality",
                               "product in in-or-q", "capped product",
                               "level sets"},
                              {c1, c2, c3, c4, c5});
    report.details.emplace_back("levels_checked", std::to_string(levels.size()));
    return report;
  }

  std::array<TheoremReport, 2> report_level_characterization(FuzzySubset const& mu) {
    require_nonempty(mu);
    auto const& S            = mu.structure();
    bool        all_sub      = true;
    bool        all_bi       = true;
    std::size_t nonempty     = 0;
    for (auto const& t : critical_thresholds(mu)) {
      auto const bracket = level_sets(mu, t).bracket;
      if (bracket.empty()) {
        continue;
      }
      ++nonempty;
      auto const flags = classify_subset(S, bracket);
      all_sub          = all_sub && flags.subsemigroup;
      all_bi           = all_bi && flags.bi_ideal;
    }
    std::array<TheoremReport, 2> out{
        make_report("thm4.23", {"eq-subsemigroup", "level subsemigroups"},
                    {is_eq_subsemigroup(mu).holds, all_sub}),
        make_report("thm4.24", {"eq-bi-ideal", "level bi-ideals"},
                    {is_eq_bi_ideal(mu).holds, all_bi}),
    };
    for (auto& report : out) {
      report.details.emplace_back("levels_checked", std::to_string(nonempty));
    }
    return out;
  }

  std::array<TheoremReport, 2> report_product_characterization(FuzzySubset const& mu) {
    require_nonempty(mu);
    auto const square   = o05_product(mu, mu);
    auto const sandwich = o05_product(o05_product(mu, one(mu.structure_ptr())), mu);
    bool const square_below   = is_contained(square, mu);
    bool const sandwich_below = is_contained(sandwich, mu);

    std::array<TheoremReport, 2> out{
        make_report("thm4.25", {"eq-subsemigroup", "half product below"},
                    {is_eq_subsemigroup(mu).holds, square_below}),
        make_report("thm4.26", {"eq-bi-ideal", "half products below"},
                    {is_eq_bi_ideal(mu).holds, square_below && sandwich_below}),
    };
    // Points where the containment is strict.
    auto const& S = mu.structure();
    std::string strict;
    for (Element x = 0; x < S.size(); ++x) {
      if (square(x) < mu(x)) {
        strict += (strict.empty() ? "" : " ") + S.element_name(x);
      }
    }
    if (!strict.empty()) {
      out[0].details.emplace_back("strict_at", strict);
      out[1].details.emplace_back("strict_at", strict);
    }
    return out;
  }

  FuzzySubset image(Homomorphism const& f, FuzzySubset const& mu) {
    require_source(f, mu);
    std::vector<FuzzyValue> grades(f.target().size());
    for (Element x = 0; x < mu.size(); ++x) {
      auto& g = grades[f(x)];
      g       = std::max(g, mu(x));
    }
    return FuzzySubset(f.target_ptr(), std::move(grades));
  }

  FuzzySubset preimage(Homomorphism const& f, FuzzySubset const& mu_prime) {
    if (!(mu_prime.structure() == f.target())) {
      throw Error(ErrorCode::structure_mismatch,
                  "fuzzy subset does not live on the map's target");
    }
    std::vector<FuzzyValue> grades(f.source().size());
    for (Element x = 0; x < grades.size(); ++x) {
      grades[x] = mu_prime(f(x));
    }
    return FuzzySubset(f.source_ptr(), std::move(grades));
  }

  bool is_f_invariant(FuzzySubset const& mu, Homomorphism const& f) {
    for (Element x = 0; x < mu.size(); ++x) {
      for (Element y = x + 1; y < mu.size(); ++y) {
        if (f(x) == f(y) && mu(x) != mu(y)) {
          return false;
        }
      }
    }
    return true;
  }

  HomomorphismCheck check_image_preservation(Homomorphism const& f,
                                             FuzzySubset const&  mu) {
    require_source(f, mu);
    HomomorphismCheck check;
    check.surjective = f.is_surjective();
    if (mu.is_zero()) {
      return check;
    }
    auto const img      = image(f, mu);
    check.source_eq_sub = is_eq_subsemigroup(mu).holds;
    check.image_eq_sub  = is_eq_subsemigroup(img).holds;
    check.source_eq_bi  = is_eq_bi_ideal(mu).holds;
    check.image_eq_bi   = is_eq_bi_ideal(img).holds;
    return check;
  }

  namespace {
    // Caller samples (which must be eq-bi-ideals) followed by the
    // characteristic function of every crisp bi-ideal.
    std::vector<FuzzySubset> augmented_samples(StructurePtr const&          S,
                                               std::span<FuzzySubset const> samples,
                                               std::size_t                  limit,
                                               TheoremReport&               report) {
      std::vector<FuzzySubset> out;
      for (auto const& mu : samples) {
        if (!(mu.structure() == *S)) {
          throw Error(ErrorCode::structure_mismatch,
                      "sample lives on a different structure");
        }
        if (mu.is_zero() || !is_eq_bi_ideal(mu).holds) {
          throw Error(ErrorCode::sample_not_bi_ideal,
                      "sample is not an (in, in-or-q) fuzzy bi-ideal");
        }
        out.push_back(mu);
      }
      auto const bi_ideals = enumerate_crisp(*S, CrispKind::bi_ideal, limit);
      for (auto const& B : bi_ideals) {
        out.push_back(FuzzySubset::characteristic(S, B));
      }
      report.details.emplace_back("samples", std::to_string(samples.size()));
      report.details.emplace_back("characteristic_bi_ideals",
                                  std::to_string(bi_ideals.size()));
      return out;
    }

    std::string describe(FuzzySubset const& mu) {
      std::string out;
      auto const& S = mu.structure();
      for (Element x = 0; x < S.size(); ++x) {
        out += (x == 0 ? "" : " ") + S.element_name(x) + "=" + mu(x).to_string();
      }
      return out;
    }
  }  // namespace

  TheoremReport report_regularity_characterization(
      StructurePtr const&          S,
      std::span<FuzzySubset const> fuzzy_samples,
      std::size_t                  subset_scan_limit) {
    TheoremReport provenance;
    auto const    samples
        = augmented_samples(S, fuzzy_samples, subset_scan_limit, provenance);
    auto const              all = one(S);
    std::optional<std::string> failing;
    for (auto const& mu : samples) {
      if (!(o05_product(o05_product(mu, all), mu) == capped(mu))) {
        failing = describe(mu);
        break;
      }
    }
    auto report = make_report("thm4.28", {"regular", "sandwich identity"},
                              {is_regular(*S), !failing.has_value()});
    report.details = std::move(provenance.details);
    if (failing) {
      report.details.emplace_back("identity_fails_at", *failing);
    }
    return report;
  }

  TheoremReport report_regular_intra_characterization(
      StructurePtr const&          S,
      std::span<FuzzySubset const> fuzzy_samples,
      std::size_t                  subset_scan_limit) {
    TheoremReport provenance;
    auto const    samples
        = augmented_samples(S, fuzzy_samples, subset_scan_limit, provenance);

    std::optional<std::string> square_fails;
    for (auto const& mu : samples) {
      if (!(o05_product(mu, mu) == capped(mu))) {
        square_fails = describe(mu);
        break;
      }
    }
    std::optional<std::string> pair_fails;
    for (auto const& mu : samples) {
      for (auto const& nu : samples) {
        if (!(cap05(mu, nu) == cap05(o05_product(mu, nu), o05_product(nu, mu)))) {
          pair_fails = describe(mu) + " / " + describe(nu);
          break;
        }
      }
      if (pair_fails) {
        break;
      }
    }

    auto report = make_report(
        "thm4.29", {"regular and intra-regular", "square identity", "pair identity"},
        {is_regular(*S) && is_intra_regular(*S), !square_fails.has_value(),
         !pair_fails.has_value()});
    report.details = std::move(provenance.details);
    if (square_fails) {
      report.details.emplace_back("square_identity_fails_at", *square_fails);
    }
    if (pair_fails) {
      report.details.emplace_back("pair_identity_fails_at", *pair_fails);
    }
    return report;
  }

}  // namespace gsf
