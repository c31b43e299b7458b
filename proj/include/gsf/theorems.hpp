#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsf/fuzzy.hpp"
#include "gsf/predicates.hpp"

namespace gsf {

  // The outcome of checking that several conditions, each decided by an
  // independent route, agree on one input.
  struct TheoremReport {
    std::string              theorem_id;
    std::vector<std::string> condition_labels;
    std::vector<bool>        condition_flags;
    bool                     agree = true;
    // Present iff agree is false: which conditions split, and why.
    std::optional<std::string> discrepancy_witness;
    // Extra key/value facts (sample provenance, strict points, ...).
    std::vector<std::pair<std::string, std::string>> details;
  };

  /// Builds a report, setting `agree` and the discrepancy text from flags.
  TheoremReport make_report(std::string              theorem_id,
                            std::vector<std::string> labels,
                            std::vector<bool>        flags);

  /// thm3.2. Five conditions on a non-empty mu:
  ///  (1) (in, in-or-q) point definition, via the generic threshold decider;
  ///  (2) mu(x gamma y) >= min{mu(x), mu(y), 1/2};
  ///  (3) mu o mu is contained in in-or-q mu;
  ///  (4) (mu o mu) capped at 1/2 lies below mu;
  ///  (5) every nonempty level set mu_r, r in (0, 1/2], is a subsemigroup.
  TheoremReport report_subsemigroup_equivalences(FuzzySubset const& mu);

  /// thm3.5. The bi-ideal analogue; the middle factor of the triple product
  /// is the characteristic function of S. Every condition is taken together
  /// with the subsemigroup condition of the same route.
  TheoremReport report_bi_ideal_equivalences(FuzzySubset const& mu);

  /// thm4.23 and thm4.24: mu is an (in, in-or-q) fuzzy subsemigroup
  /// (bi-ideal) iff every nonempty [mu]_t is a subsemigroup (bi-ideal).
  std::array<TheoremReport, 2> report_level_characterization(FuzzySubset const& mu);

  /// thm4.25: eq-subsemigroup iff mu o0.5 mu <= mu.
  /// thm4.26: eq-bi-ideal iff additionally mu o0.5 1 o0.5 mu <= mu.
  std::array<TheoremReport, 2> report_product_characterization(FuzzySubset const& mu);

  /// f(mu)(x') = max{mu(x) : f(x) = x'}, 0 off the image.
  FuzzySubset image(Homomorphism const& f, FuzzySubset const& mu);
  /// f^-1(mu')(x) = mu'(f(x)).
  FuzzySubset preimage(Homomorphism const& f, FuzzySubset const& mu_prime);
  /// f(x) = f(y) => mu(x) = mu(y)
  bool is_f_invariant(FuzzySubset const& mu, Homomorphism const& f);

  struct HomomorphismCheck {
    bool surjective      = false;
    bool source_eq_sub   = false;
    bool image_eq_sub    = false;
    bool source_eq_bi    = false;
    bool image_eq_bi     = false;

    /// The preservation claims only bind for surjective maps.
    [[nodiscard]] bool holds() const {
      return !surjective
             || ((!source_eq_sub || image_eq_sub)
                 && (!source_eq_bi || image_eq_bi));
    }
  };

  /// Throws Error(structure_mismatch) if mu does not live on f's source.
  HomomorphismCheck check_image_preservation(Homomorphism const& f,
                                             FuzzySubset const&  mu);

  /// thm4.28. Flag A: S is regular. Flag B: mu o0.5 1 o0.5 mu = mu cap 1/2
  /// for every sample and for the characteristic function of every crisp
  /// bi-ideal of S. Throws Error(sample_not_bi_ideal) if a sample is not an
  /// (in, in-or-q) fuzzy bi-ideal.
  TheoremReport report_regularity_characterization(
      StructurePtr const&          S,
      std::span<FuzzySubset const> fuzzy_samples,
      std::size_t                  subset_scan_limit = default_subset_scan_limit);

  /// thm4.29. Flag A: regular and intra-regular. Flag B: mu o0.5 mu =
  /// mu cap 1/2 for every sample. Flag C: mu cap0.5 nu = (mu o0.5 nu) cap0.5
  /// (nu o0.5 mu) for every sample pair. Samples are augmented exactly as in
  /// report_regularity_characterization.
  TheoremReport report_regular_intra_characterization(
      StructurePtr const&          S,
      std::span<FuzzySubset const> fuzzy_samples,
      std::size_t                  subset_scan_limit = default_subset_scan_limit);

}  // namespace gsf
