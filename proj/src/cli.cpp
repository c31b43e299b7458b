#include "gsf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsf/document.hpp"
#include "gsf/predicates.hpp"
#include "gsf/search.hpp"
#include "gsf/theorems.hpp"

namespace gsf {

  namespace {
    // Failures that mean "the structure (or map) in the file is not valid",
    // as opposed to a malformed file or command line.
    class InvalidStructure : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    std::size_t subset_scan_limit() {
      if (char const* env = std::getenv("GSF_MAX_SUBSET_SCAN")) {
        try {
          return std::stoul(env);
        } catch (std::exception const&) {
          // fall through to the default
        }
      }
      return default_subset_scan_limit;
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorCode::syntax_error, "cannot read '" + path + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    StructurePtr build_or_invalid(StructureDocument const& doc) {
      try {
        return share(build_structure(doc));
      } catch (Error const& e) {
        throw InvalidStructure(e.what());
      }
    }

    struct Loaded {
      std::string       path;
      StructureDocument doc;
      StructurePtr      S;
    };

    Loaded load(std::string const& path) {
      auto doc = parse_document(read_file(path));
      auto S   = build_or_invalid(doc);
      return Loaded{path, std::move(doc), std::move(S)};
    }

    Homomorphism load_map(Loaded const& source, NamedMap const& map) {
      auto const target_path
          = std::filesystem::path(source.path).parent_path() / map.target;
      auto const        target = load(target_path.string());
      std::vector<Element> images;
      for (auto const& name : map.images) {
        auto y = target.S->element_index(name);
        if (!y) {
          throw InvalidStructure("map " + map.name + ": '" + name
                                 + "' is not an element of " + map.target);
        }
        images.push_back(*y);
      }
      try {
        return Homomorphism::validate(source.S, target.S, std::move(images));
      } catch (Error const& e) {
        throw InvalidStructure("map " + map.name + ": " + e.what());
      }
    }

    char const* yes_no(bool b) {
      return b ? "true" : "false";
    }

    std::string grades_line(FuzzySubset const& mu) {
      std::string out;
      auto const& S = mu.structure();
      for (Element x = 0; x < S.size(); ++x) {
        out += (x == 0 ? "" : " ") + S.element_name(x) + "=" + mu(x).to_string();
      }
      return out;
    }

    std::string subset_line(GammaSemigroup const& S, CrispSubset const& A) {
      std::string out;
      for (auto x : A.members()) {
        out += (out.empty() ? "" : " ") + S.element_name(x);
      }
      return "{" + out + "}";
    }

    void print_witness(std::ostream& out, GammaSemigroup const& S,
                       FuzzySubset const& mu, Witness const& w) {
      static constexpr char const* element_keys[] = {"x", "y", "z"};
      static constexpr char const* gamma_keys[]   = {"gamma", "delta"};
      out << "witness:";
      for (std::size_t i = 0; i < w.elements.size(); ++i) {
        out << ' ' << element_keys[i] << '=' << S.element_name(w.elements[i]);
      }
      for (std::size_t i = 0; i < w.gammas.size(); ++i) {
        out << ' ' << gamma_keys[i] << '=' << S.gamma_name(w.gammas[i]);
      }
      if (w.t) {
        out << " t=" << *w.t;
      }
      if (w.r) {
        out << " r=" << *w.r;
      }
      out << '\n';
      Element product = S(w.elements[0], w.gammas[0], w.elements[1]);
      if (w.elements.size() == 3) {
        product = S(product, w.gammas[1], w.elements[2]);
      }
      out << "product: " << S.element_name(product) << '\n';
      out << "product-grade: " << mu(product) << '\n';
    }

    void print_report(std::ostream& out, TheoremReport const& report) {
      out << report.theorem_id << ": " << (report.agree ? "agree" : "disagree")
          << '\n';
      out << report.theorem_id << ".flags:";
      for (bool f : report.condition_flags) {
        out << ' ' << yes_no(f);
      }
      out << '\n';
      if (report.discrepancy_witness) {
        out << report.theorem_id << ".discrepancy: " << *report.discrepancy_witness
            << '\n';
      }
      for (auto const& [key, value] : report.details) {
        out << report.theorem_id << '.' << key << ": " << value << '\n';
      }
    }

    void print_fixture(std::ostream& out, Fixture const& f) {
      out << "# fixture " << f.id << '\n';
      out << print_document(to_document(f));
      for (auto const& g : f.expected) {
        out << "# expect " << g.predicate << '(' << g.fuzzy
            << ") = " << yes_no(g.holds) << '\n';
      }
      for (auto const& v : f.values) {
        out << "# expect "
            << (v.form == ProductForm::half_square ? "half-square" : "half-sandwich")
            << '(' << v.fuzzy << ")(" << f.structure->element_name(v.at)
            << ") = " << v.value << '\n';
      }
    }

    struct Options {
      std::string file;
      std::string fuzzy;
      std::string pred;
      std::string expect;
      std::string kind;
      std::string want;
      std::size_t samples    = 100;
      std::uint64_t seed     = 0;
      std::uint32_t grid     = 10;
      std::size_t n          = 2;
      std::size_t k          = 1;
      std::size_t count      = 20;
      bool        exhaustive = false;
      std::vector<std::string> fixture_args;
    };

    int cmd_validate(Options const& o, std::ostream& out) {
      auto const doc = parse_document(read_file(o.file));
      try {
        auto const S = build_structure(doc);
        out << "valid: true\n";
        out << "elements: " << S.size() << '\n';
        out << "gammas: " << S.gamma_count() << '\n';
        return exit_ok;
      } catch (Error const& e) {
        out << "valid: false\n";
        out << "error: " << e.what() << '\n';
        return exit_invalid_structure;
      }
    }

    int cmd_classify(Options const& o, std::ostream& out) {
      auto const in    = load(o.file);
      auto const limit = subset_scan_limit();
      out << "regular: " << yes_no(is_regular(*in.S)) << '\n';
      out << "intra-regular: " << yes_no(is_intra_regular(*in.S)) << '\n';
      if (in.S->size() <= limit) {
        auto const flags = classify_structure(*in.S, limit);
        out << "left-duo: " << yes_no(flags.left_duo) << '\n';
        out << "right-duo: " << yes_no(flags.right_duo) << '\n';
        out << "duo: " << yes_no(flags.duo) << '\n';
      } else {
        out << "duo: skipped (carrier larger than GSF_MAX_SUBSET_SCAN)\n";
      }
      for (auto const& s : in.doc.subsets) {
        auto const flags = classify_subset(*in.S, document_subset(in.doc, s.name));
        out << "subset " << s.name << ": subsemigroup=" << yes_no(flags.subsemigroup)
            << " left-ideal=" << yes_no(flags.left_ideal)
            << " right-ideal=" << yes_no(flags.right_ideal)
            << " bi-ideal=" << yes_no(flags.bi_ideal) << '\n';
      }
      return exit_ok;
    }

    int cmd_check(Options const& o, std::ostream& out, std::ostream& err) {
      auto const in      = load(o.file);
      auto const spec    = parse_predicate(o.pred);
      auto const mu      = document_fuzzy(in.doc, in.S, o.fuzzy);
      auto const verdict = evaluate(spec, mu);
      out << "fuzzy: " << o.fuzzy << '\n';
      out << "predicate: " << spec.name() << '\n';
      out << "holds: " << yes_no(verdict.holds) << '\n';
      if (verdict.witness) {
        print_witness(out, *in.S, mu, *verdict.witness);
      }
      if (!o.expect.empty()) {
        if (o.expect != "true" && o.expect != "false") {
          err << "--expect takes true or false\n";
          return exit_usage;
        }
        bool const match = (o.expect == "true") == verdict.holds;
        out << "expected: " << o.expect << '\n';
        out << "match: " << yes_no(match) << '\n';
        if (!match) {
          return exit_expect_mismatch;
        }
      }
      return exit_ok;
    }

    int cmd_theorems(Options const& o, std::ostream& out) {
      auto const in    = load(o.file);
      auto const mu    = document_fuzzy(in.doc, in.S, o.fuzzy);
      auto const limit = subset_scan_limit();

      print_report(out, report_subsemigroup_equivalences(mu));
      print_report(out, report_bi_ideal_equivalences(mu));
      for (auto const& r : report_level_characterization(mu)) {
        print_report(out, r);
      }
      for (auto const& r : report_product_characterization(mu)) {
        print_report(out, r);
      }

      if (in.S->size() <= limit) {
        GeneratorConfig config;
        config.n     = in.S->size();
        config.k     = in.S->gamma_count();
        config.seed  = o.seed;
        config.grid  = o.grid;
        config.count = o.samples;
        auto samples = random_chain_fuzzy(in.S, CrispKind::bi_ideal, config);
        if (is_eq_bi_ideal(mu).holds) {
          samples.insert(samples.begin(), mu);
        }
        print_report(out, report_regularity_characterization(in.S, samples, limit));
        print_report(out,
                     report_regular_intra_characterization(in.S, samples, limit));
      } else {
        out << "thm4.28: skipped (carrier larger than GSF_MAX_SUBSET_SCAN)\n";
        out << "thm4.29: skipped (carrier larger than GSF_MAX_SUBSET_SCAN)\n";
      }

      for (auto const& m : in.doc.maps) {
        auto const f     = load_map(in, m);
        auto const check = check_image_preservation(f, mu);
        std::string const id = "thm3.8[" + m.name + "]";
        out << id << ".surjective: " << yes_no(check.surjective) << '\n';
        if (!check.surjective) {
          out << id << ": skipped (map is not onto)\n";
          continue;
        }
        out << id << ": " << (check.holds() ? "agree" : "disagree") << '\n';
        out << id << ".image: " << grades_line(image(f, mu)) << '\n';
        out << id << ".flags: " << yes_no(check.source_eq_sub) << ' '
            << yes_no(check.image_eq_sub) << ' ' << yes_no(check.source_eq_bi) << ' '
            << yes_no(check.image_eq_bi) << '\n';
      }
      return exit_ok;
    }

    int cmd_enumerate(Options const& o, std::ostream& out, std::ostream& err) {
      auto const kind = parse_crisp_kind(o.kind);
      if (!kind) {
        err << "unknown kind '" << o.kind
            << "' (expected subsemigroup, left, right or bi-ideal)\n";
        return exit_usage;
      }
      auto const in     = load(o.file);
      auto const subsets = enumerate_crisp(*in.S, *kind, subset_scan_limit());
      out << "kind: " << to_string(*kind) << '\n';
      out << "count: " << subsets.size() << '\n';
      for (auto const& A : subsets) {
        out << "subset: " << subset_line(*in.S, A) << '\n';
      }
      return exit_ok;
    }

    int cmd_search(Options const& o, std::ostream& out) {
      SearchSpace space;
      space.grid = o.grid;
      if (!o.file.empty()) {
        space.structures.push_back(load(o.file).S);
      } else if (o.exhaustive) {
        for (std::size_t size = 1; size <= o.n; ++size) {
          GeneratorConfig config;
          config.n    = size;
          config.k    = o.k;
          config.mode = GenerationMode::exhaustive;
          for (auto& S : generate_structures(config)) {
            space.structures.push_back(share(std::move(S)));
          }
        }
      } else {
        GeneratorConfig config;
        config.n     = o.n;
        config.k     = o.k;
        config.seed  = o.seed;
        config.count = o.count;
        for (auto& S : generate_structures(config)) {
          space.structures.push_back(share(std::move(S)));
        }
      }

      auto const outcome = find_witness(space, o.want);
      out << "want: " << o.want << '\n';
      out << "found: " << yes_no(outcome.found) << '\n';
      out << "structures-scanned: " << outcome.structures_scanned << '\n';
      out << "candidates-scanned: " << outcome.candidates_scanned << '\n';
      if (!outcome.found) {
        return exit_ok;
      }
      out << "structure-index: " << outcome.structure_index << '\n';
      out << "mu: " << grades_line(*outcome.mu) << '\n';
      if (outcome.nu) {
        out << "nu: " << grades_line(*outcome.nu) << '\n';
        out << "subject: " << grades_line(*outcome.subject) << '\n';
      }
      for (auto const& [atom, verdict] : outcome.atoms) {
        out << "atom " << atom << ": " << yes_no(verdict.holds) << '\n';
      }
      out << "structure:\n";
      std::istringstream lines(print_document(to_document(*outcome.structure)));
      for (std::string line; std::getline(lines, line);) {
        out << "  " << line << '\n';
      }
      return exit_ok;
    }

    int cmd_fixtures(Options const& o, std::ostream& out, std::ostream& err) {
      auto const& a = o.fixture_args;
      if (a.empty()) {
        err << "fixtures: expected list, verify, show ID or write ID PATH\n";
        return exit_usage;
      }
      if (a[0] == "list" && a.size() == 1) {
        for (auto const& f : fixtures()) {
          out << "fixture: " << f.id << '\n';
        }
        return exit_ok;
      }
      if (a[0] == "verify" && a.size() == 1) {
        bool all_ok = true;
        for (auto const& f : fixtures()) {
          auto const failures = verify_fixture(f);
          out << f.id << ": " << (failures.empty() ? "ok" : "FAILED") << '\n';
          for (auto const& msg : failures) {
            out << "  " << msg << '\n';
          }
          all_ok = all_ok && failures.empty();
        }
        return all_ok ? exit_ok : exit_expect_mismatch;
      }
      if ((a[0] == "show" && a.size() == 2) || (a[0] == "write" && a.size() == 3)) {
        auto const f = fixture(a[1]);
        if (!f) {
          err << "unknown fixture '" << a[1] << "'\n";
          return exit_usage;
        }
        if (a[0] == "show") {
          print_fixture(out, *f);
          return exit_ok;
        }
        std::ofstream file(a[2], std::ios::binary);
        print_fixture(file, *f);
        if (!file) {
          err << "cannot write '" << a[2] << "'\n";
          return exit_usage;
        }
        out << "wrote: " << a[2] << '\n';
        return exit_ok;
      }
      err << "fixtures: expected list, verify, show ID or write ID PATH\n";
      return exit_usage;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Gamma-semigroup fuzzy predicate checker", "gsf"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Check a structure file");
    validate->add_option("file", o.file)->required();

    auto* classify = app.add_subcommand("classify", "Crisp structure and subset flags");
    classify->add_option("file", o.file)->required();

    auto* check = app.add_subcommand("check", "Decide a predicate on a fuzzy subset");
    check->add_option("file", o.file)->required();
    check->add_option("--fuzzy", o.fuzzy)->required();
    check->add_option("--pred", o.pred)->required();
    check->add_option("--expect", o.expect, "true or false");

    auto* theorems = app.add_subcommand("theorems", "Run the theorem reports");
    theorems->add_option("file", o.file)->required();
    theorems->add_option("--fuzzy", o.fuzzy)->required();
    theorems->add_option("--samples", o.samples);
    theorems->add_option("--seed", o.seed);
    theorems->add_option("--grid", o.grid)->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "List crisp subsets of a kind");
    enumerate->add_option("file", o.file)->required();
    enumerate->add_option("--kind", o.kind)->required();

    auto* search = app.add_subcommand("search", "Find a separating witness");
    search->add_option("file", o.file, "search this structure only");
    search->add_option("--want", o.want)->required();
    search->add_option("--n", o.n)->check(CLI::PositiveNumber);
    search->add_option("--k", o.k)->check(CLI::PositiveNumber);
    search->add_option("--grid", o.grid)->check(CLI::PositiveNumber);
    search->add_option("--seed", o.seed);
    search->add_option("--count", o.count, "random structures to scan");
    search->add_flag("--exhaustive", o.exhaustive,
                     "scan every structure of size 1..n");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in examples");
    fixtures_cmd->add_option("args", o.fixture_args, "list | verify | show ID | write ID PATH");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }

    try {
      if (validate->parsed()) {
        return cmd_validate(o, out);
      }
      if (classify->parsed()) {
        return cmd_classify(o, out);
      }
      if (check->parsed()) {
        return cmd_check(o, out, err);
      }
      if (theorems->parsed()) {
        return cmd_theorems(o, out);
      }
      if (enumerate->parsed()) {
        return cmd_enumerate(o, out, err);
      }
      if (search->parsed()) {
        return cmd_search(o, out);
      }
      return cmd_fixtures(o, out, err);
    } catch (InvalidStructure const& e) {
      err << "invalid structure: " << e.what() << '\n';
      return exit_invalid_structure;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

}  // namespace gsf
