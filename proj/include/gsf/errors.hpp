#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsf {

  enum class ErrorCode {
    empty_carrier,
    out_of_range_entry,
    associativity_violation,
    index_out_of_range,
    carrier_too_large,
    gamma_mismatch,
    homomorphism_violation,
    unknown_element,
    invalid_threshold,
    structure_mismatch,
    empty_family,
    empty_fuzzy_subset,
    invalid_alpha,
    sample_not_bi_ideal,
    budget_exhausted,
    unknown_predicate_name,
    invalid_config,
    syntax_error,
    duplicate_name,
    missing_table,
    bad_rational,
  };

  std::string_view to_string(ErrorCode code);

  // Every failure raised by the library carries one of the codes above, so
  // callers (the CLI in particular) can map failures to exit codes without
  // string matching.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  // Parse errors remember the (1-based) line they were raised on.
  class ParseError : public Error {
   public:
    ParseError(ErrorCode code, std::size_t line, std::string const& message)
        : Error(code, "line " + std::to_string(line) + ": " + message),
          _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace gsf
