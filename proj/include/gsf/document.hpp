#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsf/fuzzy.hpp"
#include "gsf/search.hpp"

namespace gsf {

  // The line-oriented structure file:
  //
  //   # comment
  //   elements e a b
  //   gammas g
  //   table g          (then one row per element, one entry per column)
  //   e e e
  //   e a e
  //   e e b
  //   fuzzy mu e=1/2 a=3/5 b=3/5
  //   subset A e a
  //   map f -> other.gsf : e=e a=a b=b
  //
  // `elements` and `gammas` come first. Row i, column j of `table g` is
  // element_i g element_j. Fuzzy grades omitted for an element are 0; a
  // trailing ':' on a fuzzy name is ignored.

  struct NamedFuzzy {
    std::string             name;
    std::vector<FuzzyValue> grades;  // indexed by element

    friend bool operator==(NamedFuzzy const&, NamedFuzzy const&) = default;
  };

  struct NamedSubset {
    std::string          name;
    std::vector<Element> members;  // ascending

    friend bool operator==(NamedSubset const&, NamedSubset const&) = default;
  };

  struct NamedMap {
    std::string              name;
    std::string              target;  // path as written
    std::vector<std::string> images;  // target element name per source element

    friend bool operator==(NamedMap const&, NamedMap const&) = default;
  };

  struct StructureDocument {
    std::vector<std::string>          elements;
    std::vector<std::string>          gammas;
    std::vector<std::vector<Element>> tables;  // per gamma, row-major n x n
    std::vector<NamedFuzzy>           fuzzy;
    std::vector<NamedSubset>          subsets;
    std::vector<NamedMap>             maps;

    friend bool operator==(StructureDocument const&, StructureDocument const&)
        = default;
  };

  /// Throws ParseError with code syntax_error, duplicate_name, missing_table
  /// or bad_rational.
  StructureDocument parse_document(std::string_view text);

  /// Canonical text; parse_document(print_document(d)) == d.
  std::string print_document(StructureDocument const& doc);

  /// Validates the tables (see GammaSemigroup::validate).
  GammaSemigroup build_structure(StructureDocument const& doc);

  /// Throws Error(unknown_element) if no fuzzy subset has that name.
  FuzzySubset document_fuzzy(StructureDocument const& doc,
                             StructurePtr const&      S,
                             std::string_view         name);

  /// Throws Error(unknown_element) if no subset has that name.
  CrispSubset document_subset(StructureDocument const& doc, std::string_view name);

  StructureDocument to_document(GammaSemigroup const& S);
  StructureDocument to_document(Fixture const& fixture);

}  // namespace gsf
