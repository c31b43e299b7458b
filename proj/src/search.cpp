#include "gsf/search.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <memory>

namespace gsf {

  ////////////////////////////////////////////////////////////////////////
  // Crisp enumeration
  ////////////////////////////////////////////////////////////////////////

  std::optional<CrispKind> parse_crisp_kind(std::string_view text) {
    if (text == "subsemigroup") {
      return CrispKind::subsemigroup;
    }
    if (text == "left" || text == "left-ideal" || text == "left_ideal") {
      return CrispKind::left_ideal;
    }
    if (text == "right" || text == "right-ideal" || text == "right_ideal") {
      return CrispKind::right_ideal;
    }
    if (text == "bi-ideal" || text == "bi_ideal") {
      return CrispKind::bi_ideal;
    }
    return std::nullopt;
  }

  std::string to_string(CrispKind kind) {
    switch (kind) {
      case CrispKind::subsemigroup:
        return "subsemigroup";
      case CrispKind::left_ideal:
        return "left";
      case CrispKind::right_ideal:
        return "right";
      case CrispKind::bi_ideal:
        return "bi-ideal";
    }
    return "?";
  }

  std::vector<CrispSubset> enumerate_crisp(GammaSemigroup const& S,
                                           CrispKind             kind,
                                           std::size_t subset_scan_limit) {
    std::size_t const n = S.size();
    if (n > subset_scan_limit || n >= 64) {
      throw Error(ErrorCode::carrier_too_large,
                  "enumeration scans 2^" + std::to_string(n)
                      + " subsets; limit is 2^"
                      + std::to_string(subset_scan_limit));
    }
    std::vector<CrispSubset> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      auto       A     = CrispSubset::from_mask(n, mask);
      auto const flags = classify_subset(S, A);
      bool       keep  = false;
      switch (kind) {
        case CrispKind::subsemigroup:
          keep = flags.subsemigroup;
          break;
        case CrispKind::left_ideal:
          keep = flags.left_ideal;
          break;
        case CrispKind::right_ideal:
          keep = flags.right_ideal;
          break;
        case CrispKind::bi_ideal:
          keep = flags.bi_ideal;
          break;
      }
      if (keep) {
        out.push_back(std::move(A));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rng
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) {
      return 0;
    }
    auto const max   = std::numeric_limits<std::uint64_t>::max();
    auto const limit = max - (max % bound);
    std::uint64_t value;
    do {
      value = _engine();
    } while (value >= limit);
    return value % bound;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure generation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr Element unset = std::numeric_limits<Element>::max();

    // Fills an n x k x n cube cell by cell, rejecting partial cubes that
    // already contain a fully determined associativity failure.
    class CubeFiller {
     public:
      CubeFiller(std::size_t n, std::size_t k)
          : _n(n), _k(k), _cube(n * k * n, unset) {}

      template <typename Emit>
      void exhaustive(Emit&& emit) {
        fill_all(0, emit);
      }

      // First complete cube found with shuffled value orders, or nullopt if
      // the node budget runs out. A fill that gets stuck is restarted from
      // scratch after `restart_nodes` nodes.
      std::optional<std::vector<Element>> random(Rng& rng, std::size_t budget) {
        constexpr std::size_t restart_nodes = 20'000;
        std::size_t           spent         = 0;
        while (spent < budget) {
          std::fill(_cube.begin(), _cube.end(), unset);
          std::size_t nodes = 0;
          auto const  cap   = std::min(restart_nodes, budget - spent);
          if (fill_random(0, rng, nodes, cap)) {
            return _cube;
          }
          spent += cap;
        }
        return std::nullopt;
      }

     private:
      Element cell(Element x, GammaIndex g, Element y) const {
        return _cube[(x * _k + g) * _n + y];
      }

      bool consistent() const {
        for (Element x = 0; x < _n; ++x) {
          for (GammaIndex b = 0; b < _k; ++b) {
            for (Element y = 0; y < _n; ++y) {
              Element const u = cell(x, b, y);
              if (u == unset) {
                continue;
              }
              for (GammaIndex g = 0; g < _k; ++g) {
                for (Element z = 0; z < _n; ++z) {
                  Element const v = cell(y, g, z);
                  if (v == unset) {
                    continue;
                  }
                  Element const left  = cell(u, g, z);
                  Element const right = cell(x, b, v);
                  if (left != unset && right != unset && left != right) {
                    return false;
                  }
                }
              }
            }
          }
        }
        return true;
      }

      template <typename Emit>
      void fill_all(std::size_t pos, Emit& emit) {
        if (pos == _cube.size()) {
          emit(_cube);
          return;
        }
        for (Element v = 0; v < _n; ++v) {
          _cube[pos] = v;
          if (consistent()) {
            fill_all(pos + 1, emit);
          }
        }
        _cube[pos] = unset;
      }

      bool fill_random(std::size_t  pos,
                       Rng&         rng,
                       std::size_t& nodes,
                       std::size_t  budget) {
        if (pos == _cube.size()) {
          return true;
        }
        std::vector<Element> order(_n);
        for (Element v = 0; v < _n; ++v) {
          order[v] = v;
        }
        rng.shuffle(order);
        for (Element v : order) {
          if (++nodes > budget) {
            return false;
          }
          _cube[pos] = v;
          if (consistent() && fill_random(pos + 1, rng, nodes, budget)) {
            return true;
          }
          if (nodes > budget) {
            return false;
          }
        }
        _cube[pos] = unset;
        return false;
      }

      std::size_t          _n;
      std::size_t          _k;
      std::vector<Element> _cube;
    };
  }  // namespace

  void GeneratorConfig::validate() const {
    if (n < 1 || k < 1 || grid < 1) {
      throw Error(ErrorCode::invalid_config, "need n >= 1, k >= 1, grid >= 1");
    }
    if (mode == GenerationMode::exhaustive && (n > 3 || k > 2)) {
      throw Error(ErrorCode::invalid_config,
                  "exhaustive generation supports n <= 3 and k <= 2");
    }
  }

  std::vector<GammaSemigroup> generate_structures(GeneratorConfig const& config) {
    config.validate();
    std::vector<GammaSemigroup> out;
    CubeFiller                  filler(config.n, config.k);
    if (config.mode == GenerationMode::exhaustive) {
      filler.exhaustive([&](std::vector<Element> const& cube) {
        out.push_back(GammaSemigroup::from_cube(config.n, config.k, cube));
      });
      return out;
    }
    Rng rng(config.seed);
    for (std::size_t i = 0; i < config.count; ++i) {
      auto cube = filler.random(rng, config.attempt_budget);
      if (!cube) {
        throw Error(ErrorCode::budget_exhausted,
                    "no associative cube found within "
                        + std::to_string(config.attempt_budget) + " attempts");
      }
      out.push_back(GammaSemigroup::from_cube(config.n, config.k, *cube));
    }
    return out;
  }

  std::size_t count_structures(std::size_t n, std::size_t k) {
    std::size_t total = 0;
    CubeFiller  filler(n, k);
    filler.exhaustive([&](std::vector<Element> const&) { ++total; });
    return total;
  }

  std::vector<FuzzySubset> random_fuzzy(StructurePtr const&    S,
                                        GeneratorConfig const& config) {
    config.validate();
    Rng                      rng(config.seed);
    std::vector<FuzzySubset> out;
    auto const               d = static_cast<std::int64_t>(config.grid);
    while (out.size() < config.count) {
      std::vector<FuzzyValue> grades(S->size());
      for (auto& g : grades) {
        g = FuzzyValue(static_cast<std::int64_t>(rng.below(d + 1)), d);
      }
      FuzzySubset mu(S, std::move(grades));
      if (!mu.is_zero()) {
        out.push_back(std::move(mu));
      }
    }
    return out;
  }

  std::vector<FuzzySubset> random_chain_fuzzy(StructurePtr const&    S,
                                              CrispKind              kind,
                                              GeneratorConfig const& config) {
    config.validate();
    auto const crisp = enumerate_crisp(*S, kind);
    auto const d     = static_cast<std::int64_t>(config.grid);
    // Grid numerators j with j/d >= 1/2, and with 0 < j/d < 1/2.
    std::vector<std::int64_t> high, low;
    for (std::int64_t j = 1; j <= d; ++j) {
      (2 * j >= d ? high : low).push_back(j);
    }
    Rng                      rng(config.seed);
    std::vector<FuzzySubset> out;
    for (std::size_t i = 0; i < config.count; ++i) {
      // With some probability the innermost layer also sits below 1/2.
      bool const top_is_low = !low.empty() && rng.below(4) == 0;
      std::size_t const low_layers_available
          = top_is_low ? low.size() - 1 : low.size();
      std::size_t const target_length = 1 + rng.below(low_layers_available + 1);

      std::vector<CrispSubset> chain{crisp[rng.below(crisp.size())]};
      while (chain.size() < target_length) {
        std::vector<CrispSubset const*> bigger;
        for (auto const& D : crisp) {
          if (chain.back().is_subset_of(D) && !(D == chain.back())) {
            bigger.push_back(&D);
          }
        }
        if (bigger.empty()) {
          break;
        }
        chain.push_back(*bigger[rng.below(bigger.size())]);
      }

      // Distinct low grades, descending, one per layer that needs one.
      std::size_t const low_needed = chain.size() - 1 + (top_is_low ? 1 : 0);
      auto              pool       = low;
      rng.shuffle(pool);
      pool.resize(low_needed);
      std::sort(pool.rbegin(), pool.rend());

      std::vector<FuzzyValue> grades(S->size());
      for (Element x = 0; x < S->size(); ++x) {
        for (std::size_t layer = 0; layer < chain.size(); ++layer) {
          if (!chain[layer].contains(x)) {
            continue;
          }
          if (layer == 0 && !top_is_low) {
            grades[x] = FuzzyValue(high[rng.below(high.size())], d);
          } else {
            grades[x] = FuzzyValue(pool[top_is_low ? layer : layer - 1], d);
          }
          break;
        }
      }
      out.emplace_back(S, std::move(grades));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  namespace {
    StructurePtr table_structure(std::vector<std::string> const&  names,
                                 std::vector<std::string> const&  rows) {
      std::size_t const    n = names.size();
      std::vector<Element> cube(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto const name = std::string(1, rows[i][j]);
          cube[i * n + j] = static_cast<Element>(
              std::find(names.begin(), names.end(), name) - names.begin());
        }
      }
      return share(GammaSemigroup::validate(names, {"g"}, std::move(cube)));
    }

    FuzzySubset grades_of(StructurePtr const&                     S,
                          std::initializer_list<std::pair<int, int>> grades) {
      std::vector<FuzzyValue> values;
      for (auto [p, q] : grades) {
        values.emplace_back(p, q);
      }
      return FuzzySubset(S, std::move(values));
    }

    // The ten further (alpha, beta) pairs that fail on the ex4.6 grades.
    constexpr char const* example_46_pairs[] = {
        "q,in",    "in,q",      "q,invq", "q,inandq", "invq,inandq",
        "invq,in", "in,inandq", "q,q",    "invq,q",   "invq,invq",
    };

    Fixture example_34() {
      auto S = table_structure({"e", "a", "b"}, {"eee", "eae", "eeb"});
      Fixture f{"ex3.4", S, {}, {}, {}};
      f.fuzzy.emplace_back("mu", grades_of(S, {{1, 2}, {3, 5}, {3, 5}}));
      f.expected = {{"mu", "eq-subsemigroup", true},
                    {"mu", "fuzzy-subsemigroup", false}};
      return f;
    }

    Fixture example_46() {
      auto S = table_structure({"a", "b", "c", "d", "e"},
                               {"adadd", "abadd", "adcde", "adadd", "adcde"});
      Fixture f{"ex4.6", S, {}, {}, {}};
      f.fuzzy.emplace_back(
          "mu", grades_of(S, {{4, 5}, {7, 10}, {3, 10}, {1, 2}, {3, 5}}));
      f.expected = {{"mu", "eq-subsemigroup", true},
                    {"mu", "eq-bi-ideal", true},
                    {"mu", "ab-subsemigroup:in,in", false},
                    {"mu", "ab-bi-ideal:in,in", false}};
      for (auto const* pair : example_46_pairs) {
        f.expected.push_back({"mu", std::string("ab-subsemigroup:") + pair, false});
        f.expected.push_back({"mu", std::string("ab-bi-ideal:") + pair, false});
      }
      return f;
    }

    Fixture example_427() {
      auto S = table_structure({"a", "b", "c"}, {"aaa", "bbb", "ccc"});
      Fixture f{"ex4.27", S, {}, {}, {}};
      f.fuzzy.emplace_back("mu", grades_of(S, {{4, 5}, {7, 10}, {3, 5}}));
      f.expected = {{"mu", "eq-subsemigroup", true}, {"mu", "eq-bi-ideal", true}};
      f.values   = {{"mu", ProductForm::half_square, 0, FuzzyValue(1, 2)},
                    {"mu", ProductForm::half_sandwich, 0, FuzzyValue(1, 2)}};
      return f;
    }

    Fixture example_21(std::size_t modulus) {
      return Fixture{"ex2.1-mod-" + std::to_string(modulus),
                     share(modular_example(modulus)),
                     {},
                     {},
                     {}};
    }
  }  // namespace

  FuzzySubset const& Fixture::fuzzy_named(std::string_view name) const {
    for (auto const& [n, mu] : fuzzy) {
      if (n == name) {
        return mu;
      }
    }
    throw Error(ErrorCode::unknown_element,
                "fixture " + id + " has no fuzzy subset '" + std::string(name)
                    + "'");
  }

  GammaSemigroup modular_example(std::size_t n) {
    std::vector<std::string> elements;
    for (std::size_t i = 0; i < n; ++i) {
      elements.push_back(std::to_string(i));
    }
    std::vector<std::size_t> const gammas{5, 7};
    std::vector<Element>           cube;
    for (Element x = 0; x < n; ++x) {
      for (auto g : gammas) {
        for (Element y = 0; y < n; ++y) {
          cube.push_back((x * g % n) * y % n);
        }
      }
    }
    return GammaSemigroup::validate(std::move(elements), {"5", "7"},
                                    std::move(cube));
  }

  std::vector<Fixture> fixtures(std::size_t modulus) {
    return {example_21(modulus), example_34(), example_46(), example_427()};
  }

  std::optional<Fixture> fixture(std::string_view id) {
    constexpr std::string_view modular_prefix = "ex2.1-mod-";
    if (id.starts_with(modular_prefix)) {
      auto digits = id.substr(modular_prefix.size());
      if (digits.empty() || digits.size() > 4
          || !std::all_of(digits.begin(), digits.end(),
                          [](char c) { return std::isdigit(c) != 0; })) {
        return std::nullopt;
      }
      auto const n = std::stoul(std::string(digits));
      if (n == 0) {
        return std::nullopt;
      }
      return example_21(n);
    }
    for (auto& f : fixtures()) {
      if (f.id == id) {
        return std::move(f);
      }
    }
    return std::nullopt;
  }

  std::vector<std::string> verify_fixture(Fixture const& fixture) {
    std::vector<std::string> failures;
    for (auto const& golden : fixture.expected) {
      auto const verdict = evaluate(parse_predicate(golden.predicate),
                                    fixture.fuzzy_named(golden.fuzzy));
      if (verdict.holds != golden.holds) {
        failures.push_back(fixture.id + ": " + golden.predicate + "("
                           + golden.fuzzy + ") expected "
                           + (golden.holds ? "true" : "false"));
      }
    }
    for (auto const& golden : fixture.values) {
      auto const& mu = fixture.fuzzy_named(golden.fuzzy);
      auto const  product
          = golden.form == ProductForm::half_square
                ? o05_product(mu, mu)
                : o05_product(
                    o05_product(mu, FuzzySubset::constant(
                                        fixture.structure, FuzzyValue::one())),
                    mu);
      if (product(golden.at) != golden.value) {
        failures.push_back(fixture.id + ": product at "
                           + fixture.structure->element_name(golden.at)
                           + " is " + product(golden.at).to_string()
                           + ", expected " + golden.value.to_string());
      }
    }
    return failures;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    enum class PairMode { none, union_, intersection };

    struct Atom {
      std::string text;
      // Ordinary predicate on the subject.
      std::optional<PredicateSpec> spec;
      // Pair atom: both members pass `member`.
      PairMode      pair_mode = PairMode::none;
      PredicateKind member    = PredicateKind::eq_subsemigroup;
    };

    struct Node {
      enum class Op { atom, negate, conj, disj } op = Op::atom;
      std::size_t       atom                        = 0;
      std::vector<Node> children;
    };

    class ExpressionParser {
     public:
      explicit ExpressionParser(std::string_view text) {
        tokenize(text);
      }

      Node parse(std::vector<Atom>& atoms) {
        _atoms = &atoms;
        Node root = parse_or();
        if (_pos != _tokens.size()) {
          fail("unexpected '" + _tokens[_pos] + "'");
        }
        return root;
      }

     private:
      [[noreturn]] static void fail(std::string const& message) {
        throw Error(ErrorCode::syntax_error, "search expression: " + message);
      }

      static std::string upper(std::string s) {
        for (auto& c : s) {
          c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        return s;
      }

      void tokenize(std::string_view text) {
        std::string current;
        auto flush = [&] {
          if (!current.empty()) {
            _tokens.push_back(current);
            current.clear();
          }
        };
        for (char c : text) {
          if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            flush();
          } else if (c == '(' || c == ')' || c == '!' || c == '&' || c == '|') {
            flush();
            _tokens.emplace_back(1, c);
          } else {
            current.push_back(c);
          }
        }
        flush();
      }

      bool accept(std::initializer_list<char const*> spellings) {
        if (_pos < _tokens.size()) {
          auto const token = upper(_tokens[_pos]);
          for (auto const* s : spellings) {
            if (token == s) {
              ++_pos;
              return true;
            }
          }
        }
        return false;
      }

      Node parse_or() {
        Node left = parse_and();
        if (_pos < _tokens.size()
            && (upper(_tokens[_pos]) == "OR" || _tokens[_pos] == "|")) {
          Node n{Node::Op::disj, 0, {std::move(left)}};
          while (accept({"OR", "|"})) {
            n.children.push_back(parse_and());
          }
          return n;
        }
        return left;
      }

      Node parse_and() {
        Node left = parse_not();
        if (_pos < _tokens.size()
            && (upper(_tokens[_pos]) == "AND" || _tokens[_pos] == "&")) {
          Node n{Node::Op::conj, 0, {std::move(left)}};
          while (accept({"AND", "&"})) {
            n.children.push_back(parse_not());
          }
          return n;
        }
        return left;
      }

      Node parse_not() {
        if (accept({"NOT", "!"})) {
          return Node{Node::Op::negate, 0, {parse_not()}};
        }
        if (accept({"("})) {
          Node inner = parse_or();
          if (!accept({")"})) {
            fail("missing ')'");
          }
          return inner;
        }
        if (_pos >= _tokens.size()) {
          fail("expression ends early");
        }
        auto const& token = _tokens[_pos];
        if (token == ")" || token == "&" || token == "|") {
          fail("unexpected '" + token + "'");
        }
        ++_pos;
        _atoms->push_back(make_atom(token));
        return Node{Node::Op::atom, _atoms->size() - 1, {}};
      }

      static Atom make_atom(std::string const& token) {
        std::string name = token;
        std::replace(name.begin(), name.end(), '-', '_');
        static constexpr std::tuple<char const*, PairMode, PredicateKind> pairs[]
            = {{"union_of_two_eq_subsemigroups", PairMode::union_,
                PredicateKind::eq_subsemigroup},
               {"union_of_two_eq_bi_ideals", PairMode::union_,
                PredicateKind::eq_bi_ideal},
               {"intersection_of_two_eq_subsemigroups", PairMode::intersection,
                PredicateKind::eq_subsemigroup},
               {"intersection_of_two_eq_bi_ideals", PairMode::intersection,
                PredicateKind::eq_bi_ideal}};
        for (auto const& [spelling, mode, member] : pairs) {
          if (name == spelling) {
            return Atom{token, std::nullopt, mode, member};
          }
        }
        return Atom{token, parse_predicate(token), PairMode::none,
                    PredicateKind::eq_subsemigroup};
      }

      std::vector<std::string> _tokens;
      std::size_t              _pos   = 0;
      std::vector<Atom>*       _atoms = nullptr;
    };

    struct Candidate {
      FuzzySubset const* mu;
      FuzzySubset const* nu;
      FuzzySubset const* subject;
    };

    PredicateVerdict evaluate_atom(Atom const& atom, Candidate const& c) {
      if (atom.pair_mode != PairMode::none) {
        PredicateSpec const member{atom.member, std::nullopt};
        auto                first = evaluate(member, *c.mu);
        if (!first.holds) {
          return first;
        }
        return evaluate(member, *c.nu);
      }
      return evaluate(*atom.spec, *c.subject);
    }

    bool evaluate_node(Node const&                          node,
                       std::vector<Atom> const&             atoms,
                       Candidate const&                     c,
                       std::vector<std::optional<bool>>&    memo) {
      switch (node.op) {
        case Node::Op::atom: {
          auto& slot = memo[node.atom];
          if (!slot) {
            slot = evaluate_atom(atoms[node.atom], c).holds;
          }
          return *slot;
        }
        case Node::Op::negate:
          return !evaluate_node(node.children[0], atoms, c, memo);
        case Node::Op::conj:
          return std::all_of(node.children.begin(), node.children.end(),
                             [&](Node const& child) {
                               return evaluate_node(child, atoms, c, memo);
                             });
        case Node::Op::disj:
          return std::any_of(node.children.begin(), node.children.end(),
                             [&](Node const& child) {
                               return evaluate_node(child, atoms, c, memo);
                             });
      }
      return false;
    }

    // Nonzero grade vectors over the d-grid in lexicographic order, element 0
    // most significant.
    std::vector<FuzzySubset> grid_subsets(StructurePtr const& S,
                                          std::uint32_t       grid) {
      std::size_t const        n = S->size();
      std::vector<std::int64_t> digits(n, 0);
      std::vector<FuzzySubset> out;
      auto const               d = static_cast<std::int64_t>(grid);
      while (true) {
        // advance: increment the least significant (last) digit
        std::size_t i = n;
        while (i > 0) {
          --i;
          if (digits[i] < d) {
            ++digits[i];
            break;
          }
          digits[i] = 0;
          if (i == 0) {
            return out;
          }
        }
        std::vector<FuzzyValue> grades;
        grades.reserve(n);
        for (auto j : digits) {
          grades.emplace_back(j, d);
        }
        out.emplace_back(S, std::move(grades));
      }
    }
  }  // namespace

  SearchOutcome find_witness(SearchSpace const& space, std::string_view want) {
    std::vector<Atom> atoms;
    Node const        root = ExpressionParser(want).parse(atoms);

    PairMode mode = PairMode::none;
    for (auto const& atom : atoms) {
      if (atom.pair_mode == PairMode::none) {
        continue;
      }
      if (mode != PairMode::none && mode != atom.pair_mode) {
        throw Error(ErrorCode::syntax_error,
                    "search expression mixes union and intersection atoms");
      }
      mode = atom.pair_mode;
    }
    if (space.grid < 1) {
      throw Error(ErrorCode::invalid_config, "grid must be >= 1");
    }

    SearchOutcome outcome;
    auto record = [&](std::size_t index, Candidate const& c) {
      outcome.found           = true;
      outcome.structure_index = index;
      outcome.structure       = space.structures[index];
      outcome.mu              = *c.mu;
      if (mode != PairMode::none) {
        outcome.nu      = *c.nu;
        outcome.subject = *c.subject;
      }
      for (auto const& atom : atoms) {
        outcome.atoms.emplace_back(atom.text, evaluate_atom(atom, c));
      }
    };

    for (std::size_t index = 0; index < space.structures.size(); ++index) {
      auto const& S        = space.structures[index];
      auto const  subsets  = grid_subsets(S, space.grid);
      ++outcome.structures_scanned;
      std::vector<std::optional<bool>> memo(atoms.size());
      if (mode == PairMode::none) {
        for (auto const& mu : subsets) {
          ++outcome.candidates_scanned;
          std::fill(memo.begin(), memo.end(), std::nullopt);
          Candidate const c{&mu, &mu, &mu};
          if (evaluate_node(root, atoms, c, memo)) {
            record(index, c);
            return outcome;
          }
        }
        continue;
      }
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i; j < subsets.size(); ++j) {
          ++outcome.candidates_scanned;
          std::array<FuzzySubset, 2> pair{subsets[i], subsets[j]};
          auto const                 subject = pointwise_family(
              mode == PairMode::union_ ? Combine::max : Combine::min, pair);
          if (subject.is_zero()) {
            continue;
          }
          std::fill(memo.begin(), memo.end(), std::nullopt);
          Candidate const c{&subsets[i], &subsets[j], &subject};
          if (evaluate_node(root, atoms, c, memo)) {
            record(index, c);
            return outcome;
          }
        }
      }
    }
    return outcome;
  }

}  // namespace gsf
