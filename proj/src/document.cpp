#include "gsf/document.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace gsf {

  namespace {
    std::vector<std::string> split_words(std::string_view line) {
      std::vector<std::string> words;
      std::istringstream       in{std::string(line)};
      std::string              word;
      while (in >> word) {
        words.push_back(word);
      }
      return words;
    }

    std::string_view strip_comment(std::string_view line) {
      auto const hash = line.find('#');
      return hash == std::string_view::npos ? line : line.substr(0, hash);
    }

    std::optional<std::size_t> index_of(std::vector<std::string> const& names,
                                        std::string_view                name) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - names.begin());
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
          auto end = text.find('\n', start);
          if (end == std::string_view::npos) {
            end = text.size();
          }
          auto line = strip_comment(text.substr(start, end - start));
          _lines.push_back(split_words(line));
          start = end + 1;
        }
      }

      StructureDocument run() {
        while (next_nonblank()) {
          auto const& words = _lines[_pos];
          auto const& kw    = words[0];
          if (kw == "elements") {
            names_line(_doc.elements, _have_elements, "elements");
          } else if (kw == "gammas") {
            names_line(_doc.gammas, _have_gammas, "gammas");
          } else if (kw == "table") {
            table_block();
            continue;
          } else if (kw == "fuzzy") {
            fuzzy_line();
          } else if (kw == "subset") {
            subset_line();
          } else if (kw == "map") {
            map_line();
          } else {
            fail(ErrorCode::syntax_error, "unknown keyword '" + kw + "'");
          }
          ++_pos;
        }
        if (!_have_elements || !_have_gammas) {
          fail(ErrorCode::syntax_error, "missing elements or gammas line",
               _lines.size());
        }
        _doc.tables.resize(_doc.gammas.size());
        for (std::size_t g = 0; g < _doc.gammas.size(); ++g) {
          if (_doc.tables[g].empty()) {
            fail(ErrorCode::missing_table,
                 "no table for gamma '" + _doc.gammas[g] + "'", _lines.size());
          }
        }
        return std::move(_doc);
      }

     private:
      [[noreturn]] void fail(ErrorCode          code,
                             std::string const& message,
                             std::optional<std::size_t> line = {}) const {
        throw ParseError(code, line.value_or(_pos + 1), message);
      }

      bool next_nonblank() {
        while (_pos < _lines.size() && _lines[_pos].empty()) {
          ++_pos;
        }
        return _pos < _lines.size();
      }

      void require_header() const {
        if (!_have_elements || !_have_gammas) {
          fail(ErrorCode::syntax_error,
               "elements and gammas must be declared first");
        }
      }

      Element element(std::string_view name) const {
        auto i = index_of(_doc.elements, name);
        if (!i) {
          fail(ErrorCode::syntax_error, "unknown element '" + std::string(name) + "'");
        }
        return *i;
      }

      void check_new_name(std::string const& name, bool taken) const {
        if (taken) {
          fail(ErrorCode::duplicate_name, "duplicate name '" + name + "'");
        }
      }

      void names_line(std::vector<std::string>& into, bool& seen, char const* kw) {
        if (seen) {
          fail(ErrorCode::duplicate_name, std::string("second ") + kw + " line");
        }
        auto const& words = _lines[_pos];
        if (words.size() < 2) {
          fail(ErrorCode::syntax_error, std::string(kw) + " needs at least one name");
        }
        for (std::size_t i = 1; i < words.size(); ++i) {
          check_new_name(words[i], index_of(into, words[i]).has_value());
          into.push_back(words[i]);
        }
        seen = true;
        if (&into == &_doc.gammas) {
          _doc.tables.resize(_doc.gammas.size());
        }
      }

      void table_block() {
        require_header();
        auto const& head = _lines[_pos];
        if (head.size() != 2) {
          fail(ErrorCode::syntax_error, "expected 'table <gamma>'");
        }
        auto g = index_of(_doc.gammas, head[1]);
        if (!g) {
          fail(ErrorCode::syntax_error, "unknown gamma '" + head[1] + "'");
        }
        if (!_doc.tables[*g].empty()) {
          fail(ErrorCode::duplicate_name, "second table for '" + head[1] + "'");
        }
        std::size_t const    n = _doc.elements.size();
        std::vector<Element> table;
        table.reserve(n * n);
        ++_pos;
        for (std::size_t row = 0; row < n; ++row) {
          if (!next_nonblank() || is_keyword(_lines[_pos][0])) {
            fail(ErrorCode::missing_table,
                 "table " + head[1] + " has " + std::to_string(row) + " rows, needs "
                     + std::to_string(n));
          }
          auto const& words = _lines[_pos];
          if (words.size() != n) {
            fail(ErrorCode::missing_table,
                 "table row has " + std::to_string(words.size())
                     + " entries, needs " + std::to_string(n));
          }
          for (auto const& w : words) {
            table.push_back(element(w));
          }
          ++_pos;
        }
        _doc.tables[*g] = std::move(table);
      }

      static bool is_keyword(std::string_view word) {
        return word == "elements" || word == "gammas" || word == "table"
               || word == "fuzzy" || word == "subset" || word == "map";
      }

      void fuzzy_line() {
        require_header();
        auto const& words = _lines[_pos];
        if (words.size() < 2) {
          fail(ErrorCode::syntax_error, "fuzzy needs a name");
        }
        std::string name = words[1];
        if (name.size() > 1 && name.back() == ':') {
          name.pop_back();
        }
        check_new_name(name, std::any_of(_doc.fuzzy.begin(), _doc.fuzzy.end(),
                                         [&](auto const& f) { return f.name == name; }));
        NamedFuzzy        fuzzy{name, std::vector<FuzzyValue>(_doc.elements.size())};
        std::vector<bool> seen(_doc.elements.size());
        for (std::size_t i = 2; i < words.size(); ++i) {
          auto const eq = words[i].find('=');
          if (eq == std::string::npos) {
            fail(ErrorCode::syntax_error, "expected element=grade, got '" + words[i] + "'");
          }
          auto const x = element(std::string_view(words[i]).substr(0, eq));
          if (seen[x]) {
            fail(ErrorCode::duplicate_name,
                 "grade for '" + _doc.elements[x] + "' given twice");
          }
          seen[x] = true;
          try {
            fuzzy.grades[x] = FuzzyValue::parse(std::string_view(words[i]).substr(eq + 1));
          } catch (Error const& e) {
            fail(ErrorCode::bad_rational,
                 "bad grade '" + words[i].substr(eq + 1) + "' for '" + _doc.elements[x]
                     + "'");
          }
        }
        _doc.fuzzy.push_back(std::move(fuzzy));
      }

      void subset_line() {
        require_header();
        auto const& words = _lines[_pos];
        if (words.size() < 2) {
          fail(ErrorCode::syntax_error, "subset needs a name");
        }
        check_new_name(words[1],
                       std::any_of(_doc.subsets.begin(), _doc.subsets.end(),
                                   [&](auto const& s) { return s.name == words[1]; }));
        NamedSubset subset{words[1], {}};
        for (std::size_t i = 2; i < words.size(); ++i) {
          auto const x = element(words[i]);
          if (std::find(subset.members.begin(), subset.members.end(), x)
              != subset.members.end()) {
            fail(ErrorCode::duplicate_name, "member '" + words[i] + "' listed twice");
          }
          subset.members.push_back(x);
        }
        std::sort(subset.members.begin(), subset.members.end());
        _doc.subsets.push_back(std::move(subset));
      }

      void map_line() {
        require_header();
        auto const& words = _lines[_pos];
        if (words.size() < 5 || words[2] != "->" || words[4] != ":") {
          fail(ErrorCode::syntax_error,
               "expected 'map <name> -> <target> : x=y ...'");
        }
        check_new_name(words[1],
                       std::any_of(_doc.maps.begin(), _doc.maps.end(),
                                   [&](auto const& m) { return m.name == words[1]; }));
        NamedMap map{words[1], words[3],
                     std::vector<std::string>(_doc.elements.size())};
        for (std::size_t i = 5; i < words.size(); ++i) {
          auto const eq = words[i].find('=');
          if (eq == std::string::npos || eq + 1 == words[i].size()) {
            fail(ErrorCode::syntax_error, "expected x=y, got '" + words[i] + "'");
          }
          auto const x = element(std::string_view(words[i]).substr(0, eq));
          if (!map.images[x].empty()) {
            fail(ErrorCode::duplicate_name,
                 "image of '" + _doc.elements[x] + "' given twice");
          }
          map.images[x] = words[i].substr(eq + 1);
        }
        for (std::size_t x = 0; x < map.images.size(); ++x) {
          if (map.images[x].empty()) {
            fail(ErrorCode::syntax_error,
                 "map " + map.name + " gives no image for '" + _doc.elements[x] + "'");
          }
        }
        _doc.maps.push_back(std::move(map));
      }

      std::vector<std::vector<std::string>> _lines;
      std::size_t                           _pos = 0;
      StructureDocument                     _doc;
      bool                                  _have_elements = false;
      bool                                  _have_gammas   = false;
    };

    void append_names(std::string& out, char const* kw,
                      std::vector<std::string> const& names) {
      out += kw;
      for (auto const& name : names) {
        out += " " + name;
      }
      out += "\n";
    }
  }  // namespace

  StructureDocument parse_document(std::string_view text) {
    return Parser(text).run();
  }

  std::string print_document(StructureDocument const& doc) {
    std::string out;
    append_names(out, "elements", doc.elements);
    append_names(out, "gammas", doc.gammas);
    std::size_t const n = doc.elements.size();
    for (std::size_t g = 0; g < doc.gammas.size(); ++g) {
      out += "table " + doc.gammas[g] + "\n";
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          out += (y == 0 ? "" : " ") + doc.elements[doc.tables[g][x * n + y]];
        }
        out += "\n";
      }
    }
    for (auto const& f : doc.fuzzy) {
      out += "fuzzy " + f.name;
      for (std::size_t x = 0; x < n; ++x) {
        out += " " + doc.elements[x] + "=" + f.grades[x].to_string();
      }
      out += "\n";
    }
    for (auto const& s : doc.subsets) {
      out += "subset " + s.name;
      for (auto x : s.members) {
        out += " " + doc.elements[x];
      }
      out += "\n";
    }
    for (auto const& m : doc.maps) {
      out += "map " + m.name + " -> " + m.target + " :";
      for (std::size_t x = 0; x < n; ++x) {
        out += " " + doc.elements[x] + "=" + m.images[x];
      }
      out += "\n";
    }
    return out;
  }

  GammaSemigroup build_structure(StructureDocument const& doc) {
    std::size_t const    n = doc.elements.size();
    std::size_t const    k = doc.gammas.size();
    std::vector<Element> cube(n * k * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t y = 0; y < n; ++y) {
          cube[(x * k + g) * n + y] = doc.tables[g][x * n + y];
        }
      }
    }
    return GammaSemigroup::validate(doc.elements, doc.gammas, std::move(cube));
  }

  FuzzySubset document_fuzzy(StructureDocument const& doc,
                             StructurePtr const&      S,
                             std::string_view         name) {
    for (auto const& f : doc.fuzzy) {
      if (f.name == name) {
        return FuzzySubset(S, f.grades);
      }
    }
    throw Error(ErrorCode::unknown_element,
                "no fuzzy subset named '" + std::string(name) + "'");
  }

  CrispSubset document_subset(StructureDocument const& doc, std::string_view name) {
    for (auto const& s : doc.subsets) {
      if (s.name == name) {
        CrispSubset A(doc.elements.size());
        for (auto x : s.members) {
          A.insert(x);
        }
        return A;
      }
    }
    throw Error(ErrorCode::unknown_element,
                "no subset named '" + std::string(name) + "'");
  }

  StructureDocument to_document(GammaSemigroup const& S) {
    StructureDocument doc;
    doc.elements = S.element_names();
    doc.gammas   = S.gamma_names();
    std::size_t const n = S.size();
    for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
      std::vector<Element> table(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          table[x * n + y] = S(x, g, y);
        }
      }
      doc.tables.push_back(std::move(table));
    }
    return doc;
  }

  StructureDocument to_document(Fixture const& fixture) {
    auto doc = to_document(*fixture.structure);
    for (auto const& [name, mu] : fixture.fuzzy) {
      doc.fuzzy.push_back(NamedFuzzy{name, mu.grades()});
    }
    return doc;
  }

}  // namespace gsf
