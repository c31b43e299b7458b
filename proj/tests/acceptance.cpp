// Acceptance checks: one PASS/FAIL line per criterion, with wall time
// against the criterion's limit. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "corpus.hpp"
#include "gsf/cli.hpp"
#include "gsf/search.hpp"
#include "gsf/theorems.hpp"
#include "oracles.hpp"

using namespace gsf;

namespace {
  struct Outcome {
    bool        ok = true;
    std::string note;

    void require(bool condition, std::string const& what) {
      if (!condition && ok) {
        ok   = false;
        note = what;
      }
    }
  };

  int failures = 0;

  void criterion(int number, char const* title, double limit_seconds,
                 std::function<Outcome()> const& body) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    result;
    try {
      result = body();
    } catch (std::exception const& e) {
      result.ok   = false;
      result.note = std::string("exception: ") + e.what();
    }
    double const seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && seconds > limit_seconds) {
      result.ok   = false;
      result.note = "too slow";
    }
    failures += result.ok ? 0 : 1;
    std::printf("%s %2d  %-58s %8.3f s (limit %g s)  %s\n", result.ok ? "PASS" : "FAIL",
                number, title, seconds, limit_seconds, result.note.c_str());
    std::fflush(stdout);
  }

  struct Cli {
    int         code;
    std::string out;

    [[nodiscard]] std::string value(std::string const& key) const {
      std::istringstream lines(out);
      for (std::string line; std::getline(lines, line);) {
        if (line.rfind(key + ": ", 0) == 0) {
          return line.substr(key.size() + 2);
        }
      }
      return {};
    }
  };

  Cli cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str() + err.str()};
  }

  std::string fixture_file(std::string const& id) {
    auto const dir = std::filesystem::temp_directory_path()
                     / ("gsf-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto const path = (dir / (id + ".gsf")).string();
    if (cli({"fixtures", "write", id, path}).code != 0) {
      throw std::runtime_error("cannot write fixture " + id);
    }
    return path;
  }

  std::string count_note(std::initializer_list<std::pair<char const*, std::size_t>> counts) {
    std::string out;
    for (auto const& [name, value] : counts) {
      out += (out.empty() ? "" : ", ") + std::string(name) + "=" + std::to_string(value);
    }
    return out;
  }

  std::vector<corpus::Sample> const& sample_corpus() {
    static auto const samples = corpus::mixed_samples(6, 20240611);
    return samples;
  }

  std::vector<StructurePtr> const& small_corpus() {
    static auto const structures = [] {
      auto all = corpus::exhaustive(3, 1);
      for (auto& S : corpus::exhaustive(3, 2)) {
        all.push_back(std::move(S));
      }
      return all;
    }();
    return structures;
  }

  std::vector<FuzzySubset> bi_ideal_samples(StructurePtr const& S, std::uint64_t seed) {
    GeneratorConfig config;
    config.grid  = 10;
    config.count = 100;
    config.seed  = seed;
    return random_chain_fuzzy(S, CrispKind::bi_ideal, config);
  }
}  // namespace

int main() {
  criterion(1, "ex3.4: eq-subsemigroup holds, fuzzy subsemigroup fails", 1, [] {
    Outcome    o;
    auto const file = fixture_file("ex3.4");
    auto const eq   = cli({"check", file, "--fuzzy", "mu", "--pred", "eq-subsemigroup"});
    o.require(eq.code == 0 && eq.value("holds") == "true", "eq-subsemigroup not true");
    auto const s1 = cli({"check", file, "--fuzzy", "mu", "--pred", "fuzzy-subsemigroup"});
    o.require(s1.code == 0 && s1.value("holds") == "false", "fuzzy-subsemigroup not false");
    o.require(!s1.value("witness").empty(), "no witness line");
    o.require(s1.value("product-grade") == "1/2", "witness product grade is not 1/2");
    o.note = o.ok ? "witness " + s1.value("witness") : o.note;
    return o;
  });

  criterion(2, "ex4.6: eq verdicts true, eleven (alpha,beta) pairs false", 5, [] {
    Outcome    o;
    auto const file  = fixture_file("ex4.6");
    auto       check = [&](std::string const& pred, char const* expected) {
      auto const r = cli({"check", file, "--fuzzy", "mu", "--pred", pred});
      o.require(r.code == 0 && r.value("holds") == expected, pred + " is not " + expected);
    };
    check("eq-subsemigroup", "true");
    check("eq-bi-ideal", "true");
    check("ab-subsemigroup:in,in", "false");
    for (auto const* pair : {"q,in", "in,q", "q,invq", "q,inandq", "invq,inandq", "invq,in",
                             "in,inandq", "q,q", "invq,q", "invq,invq"}) {
      check(std::string("ab-subsemigroup:") + pair, "false");
    }
    return o;
  });

  criterion(3, "ex4.27: half products at a equal 1/2, mu(a) = 4/5", 1, [] {
    Outcome    o;
    auto const f   = *fixture("ex4.27");
    auto const mu  = f.fuzzy_named("mu");
    auto const one = FuzzySubset::constant(f.structure, FuzzyValue::one());
    auto const sq  = o05_product(mu, mu);
    auto const sw  = o05_product(o05_product(mu, one), mu);
    o.require(sq(0) == FuzzyValue::half(), "(mu o0.5 mu)(a) != 1/2");
    o.require(mu(0) == FuzzyValue(4, 5), "mu(a) != 4/5");
    o.require(sw(0) == FuzzyValue::half(), "(mu o0.5 1 o0.5 mu)(a) != 1/2");
    auto const half = Rational(1, 2);
    o.require(oracle::product(mu, mu, half)[0] == half, "oracle square disagrees");
    o.require(is_contained(sq, mu) && !(sq == mu), "containment is not strict");
    return o;
  });

  criterion(4, "equivalence reports agree on >= 1000 seeded samples", 120, [] {
    Outcome     o;
    auto const& samples = sample_corpus();
    o.require(samples.size() >= 1000, "corpus too small");
    std::size_t holding = 0;
    for (auto const& s : samples) {
      auto const sub = report_subsemigroup_equivalences(s.mu);
      auto const bi  = report_bi_ideal_equivalences(s.mu);
      o.require(sub.agree, "subsemigroup flags split: " + sub.discrepancy_witness.value_or(""));
      o.require(bi.agree, "bi-ideal flags split: " + bi.discrepancy_witness.value_or(""));
      holding += sub.condition_flags[0] ? 1 : 0;
    }
    if (o.ok) {
      o.note = count_note({{"samples", samples.size()}, {"eq-subsemigroups", holding}});
    }
    return o;
  });

  criterion(5, "level and product characterizations agree on the same corpus", 120, [] {
    Outcome     o;
    auto const& samples = sample_corpus();
    for (auto const& s : samples) {
      for (auto const& r : report_level_characterization(s.mu)) {
        o.require(r.agree, r.theorem_id + " flags split");
      }
      for (auto const& r : report_product_characterization(s.mu)) {
        o.require(r.agree, r.theorem_id + " flags split");
      }
    }
    if (o.ok) {
      o.note = count_note({{"samples", samples.size()}});
    }
    return o;
  });

  criterion(6, "crisp classification matches characteristic functions", 120, [] {
    Outcome     o;
    std::size_t subsets = 0;
    auto const  structures = corpus::exhaustive(3, 1);
    for (auto const& S : structures) {
      for (std::uint64_t mask = 1; mask < (1U << S->size()); ++mask) {
        auto const A     = CrispSubset::from_mask(S->size(), mask);
        auto const chi   = FuzzySubset::characteristic(S, A);
        auto const flags = classify_subset(*S, A);
        o.require(flags.subsemigroup == is_eq_subsemigroup(chi).holds, "subsemigroup mismatch");
        o.require(flags.bi_ideal == is_eq_bi_ideal(chi).holds, "bi-ideal mismatch");
        ++subsets;
      }
    }
    if (o.ok) {
      o.note = count_note({{"structures", structures.size()}, {"subsets", subsets}});
    }
    return o;
  });

  criterion(7, "characteristic 0.5-identities for all A, B", 60, [] {
    Outcome     o;
    std::size_t pairs = 0;
    auto const  half  = FuzzyValue::half();
    for (auto const& S : small_corpus()) {
      auto const n = S->size();
      for (std::uint64_t a = 0; a < (1U << n); ++a) {
        for (std::uint64_t b = 0; b < (1U << n); ++b) {
          auto const A  = CrispSubset::from_mask(n, a);
          auto const B  = CrispSubset::from_mask(n, b);
          auto const cA = FuzzySubset::characteristic(S, A);
          auto const cB = FuzzySubset::characteristic(S, B);
          o.require(cap05(cA, cB) == FuzzySubset::constant(S, half, A & B),
                    "meet identity fails");
          o.require(o05_product(cA, cB)
                        == FuzzySubset::constant(S, half, gamma_product(*S, A, B)),
                    "product identity fails");
          ++pairs;
        }
      }
    }
    if (o.ok) {
      o.note = count_note({{"structures", small_corpus().size()}, {"pairs", pairs}});
    }
    return o;
  });

  criterion(8, "regularity iff the sandwich identity", 300, [] {
    Outcome       o;
    std::size_t   regular = 0;
    std::uint64_t seed    = 8000;
    for (auto const& S : small_corpus()) {
      auto const samples = bi_ideal_samples(S, ++seed);
      auto const r       = report_regularity_characterization(S, samples);
      o.require(r.agree, "flags split: " + r.discrepancy_witness.value_or(""));
      o.require(r.condition_flags[0] == oracle::regular(*S), "regularity disagrees with oracle");
      regular += r.condition_flags[0] ? 1 : 0;
    }
    if (o.ok) {
      o.note = count_note({{"structures", small_corpus().size()}, {"regular", regular}});
    }
    return o;
  });

  criterion(9, "regular and intra-regular iff square and pair identities", 300, [] {
    Outcome       o;
    std::size_t   both = 0;
    std::uint64_t seed = 9000;
    for (auto const& S : small_corpus()) {
      auto const samples = bi_ideal_samples(S, ++seed);
      auto const r       = report_regular_intra_characterization(S, samples);
      o.require(r.agree, "flags split: " + r.discrepancy_witness.value_or(""));
      bool const expected = oracle::regular(*S) && oracle::intra_regular(*S);
      o.require(r.condition_flags[0] == expected, "crisp flag disagrees with oracle");
      both += r.condition_flags[0] ? 1 : 0;
    }
    if (o.ok) {
      o.note = count_note({{"structures", small_corpus().size()}, {"regular+intra", both}});
    }
    return o;
  });

  criterion(10, "surjective homomorphisms preserve eq predicates", 300, [] {
    Outcome    o;
    auto const& structures = small_corpus();
    // 100 seeded samples per structure: half chain subsemigroups, half
    // chain bi-ideals.
    std::vector<std::vector<FuzzySubset>> samples;
    std::uint64_t                         seed = 10000;
    for (auto const& S : structures) {
      GeneratorConfig config;
      config.grid  = 10;
      config.count = 50;
      config.seed  = ++seed;
      auto v       = random_chain_fuzzy(S, CrispKind::subsemigroup, config);
      config.seed  = ++seed;
      for (auto& mu : random_chain_fuzzy(S, CrispKind::bi_ideal, config)) {
        v.push_back(std::move(mu));
      }
      samples.push_back(std::move(v));
    }
    std::size_t homs = 0, checks = 0;
    for (std::size_t i = 0; i < structures.size(); ++i) {
      for (std::size_t j = 0; j < structures.size(); ++j) {
        auto const& S = structures[i];
        auto const& T = structures[j];
        if (T->size() > S->size() || T->gamma_count() != S->gamma_count()) {
          continue;
        }
        std::size_t maps = 1;
        for (std::size_t e = 0; e < S->size(); ++e) {
          maps *= T->size();
        }
        for (std::size_t code = 0; code < maps; ++code) {
          std::vector<Element> image_of(S->size());
          auto                 c = code;
          for (auto& v : image_of) {
            v = c % T->size();
            c /= T->size();
          }
          std::optional<Homomorphism> f;
          try {
            f = Homomorphism::validate(S, T, image_of);
          } catch (HomomorphismViolation const&) {
            continue;
          }
          if (!f->is_surjective()) {
            continue;
          }
          ++homs;
          for (auto const& mu : samples[i]) {
            auto const img = image(*f, mu);
            if (is_eq_subsemigroup(mu).holds) {
              o.require(is_eq_subsemigroup(img).holds, "image loses eq-subsemigroup");
            }
            if (is_eq_bi_ideal(mu).holds) {
              o.require(is_eq_bi_ideal(img).holds, "image loses eq-bi-ideal");
            }
            ++checks;
          }
          for (auto const& nu : samples[j]) {
            auto const pre = preimage(*f, nu);
            if (is_eq_subsemigroup(nu).holds) {
              o.require(is_eq_subsemigroup(pre).holds, "preimage loses eq-subsemigroup");
            }
            if (is_eq_bi_ideal(nu).holds) {
              o.require(is_eq_bi_ideal(pre).holds, "preimage loses eq-bi-ideal");
            }
            ++checks;
          }
        }
      }
    }
    o.require(homs > 0, "no surjective homomorphisms found");
    if (o.ok) {
      o.note = count_note({{"surjective homs", homs}, {"sample checks", checks}});
    }
    return o;
  });

  criterion(11, "closed forms = generic decider = threshold sweep", 120, [] {
    Outcome     o;
    auto const  pair    = AlphaBetaPair::make({Relation::in, false}, {Relation::in_or_q, false});
    auto const& samples = sample_corpus();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      auto const& mu     = samples[i].mu;
      bool const  closed = is_eq_subsemigroup(mu).holds;
      o.require(closed == is_alpha_beta_subsemigroup(mu, pair).holds,
                "subsemigroup: closed form vs generic decider");
      o.require(closed == oracle::eq_subsemigroup(mu), "subsemigroup: closed form vs sweep");
      bool const bi = is_eq_bi_ideal(mu).holds;
      o.require(bi == is_alpha_beta_bi_ideal(mu, pair).holds,
                "bi-ideal: closed form vs generic decider");
      o.require(bi == oracle::eq_bi_ideal(mu), "bi-ideal: closed form vs sweep");
      auto const square = o_product(mu, mu);
      o.require(subset_or_q(square, mu) == oracle::subset_or_q(square, mu),
                "subset_or_q on the square vs sweep");
      if (i + 1 < samples.size() && samples[i + 1].structure == samples[i].structure) {
        auto const& nu = samples[i + 1].mu;
        o.require(subset_or_q(nu, mu) == oracle::subset_or_q(nu, mu),
                  "subset_or_q on neighbours vs sweep");
      }
    }
    if (o.ok) {
      o.note = count_note({{"samples", samples.size()}});
    }
    return o;
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
