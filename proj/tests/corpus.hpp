#pragma once

// Shared sample corpora for the tests.

#include <vector>

#include "gsf/search.hpp"

namespace corpus {

  // Every associative cube with 1 <= n <= max_n and k gammas.
  inline std::vector<gsf::StructurePtr> exhaustive(std::size_t max_n, std::size_t k) {
    std::vector<gsf::StructurePtr> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      gsf::GeneratorConfig config;
      config.n    = n;
      config.k    = k;
      config.mode = gsf::GenerationMode::exhaustive;
      for (auto& S : gsf::generate_structures(config)) {
        out.push_back(gsf::share(std::move(S)));
      }
    }
    return out;
  }

  inline std::vector<gsf::StructurePtr> random(std::size_t   n,
                                               std::size_t   k,
                                               std::size_t   count,
                                               std::uint64_t seed) {
    gsf::GeneratorConfig config;
    config.n     = n;
    config.k     = k;
    config.count = count;
    config.seed  = seed;
    std::vector<gsf::StructurePtr> out;
    for (auto& S : gsf::generate_structures(config)) {
      out.push_back(gsf::share(std::move(S)));
    }
    return out;
  }

  struct Sample {
    gsf::StructurePtr structure;
    gsf::FuzzySubset  mu;
  };

  // Seeded (structure, fuzzy subset) pairs with n <= 4, k <= 2 and grid 10:
  // for each structure, uniform grades plus chain-built (in, in-or-q)
  // subsemigroups and bi-ideals, so both verdicts are well represented.
  inline std::vector<Sample> mixed_samples(std::size_t   per_kind,
                                           std::uint64_t seed) {
    std::vector<gsf::StructurePtr> structures;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for (auto& S : random(n, k, 8, seed + 31 * n + k)) {
          structures.push_back(std::move(S));
        }
      }
    }
    std::vector<Sample> out;
    std::uint64_t       salt = 0;
    for (auto const& S : structures) {
      gsf::GeneratorConfig config;
      config.n     = S->size();
      config.k     = S->gamma_count();
      config.grid  = 10;
      config.count = per_kind;
      config.seed  = seed ^ (++salt * 0x9E3779B97F4A7C15ULL);
      for (auto& mu : gsf::random_fuzzy(S, config)) {
        out.push_back({S, std::move(mu)});
      }
      for (auto kind : {gsf::CrispKind::subsemigroup, gsf::CrispKind::bi_ideal}) {
        config.seed += 1;
        for (auto& mu : gsf::random_chain_fuzzy(S, kind, config)) {
          out.push_back({S, std::move(mu)});
        }
      }
    }
    return out;
  }

}  // namespace corpus
