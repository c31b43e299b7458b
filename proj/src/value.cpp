#include "gsf/value.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "gsf/errors.hpp"

namespace gsf {

  namespace {
    Rational checked(Rational const& r, std::string_view origin) {
      if (r < Rational(0) || r > Rational(1)) {
        throw Error(ErrorCode::bad_rational,
                    "grade " + std::string(origin) + " outside [0,1]");
      }
      return r;
    }

    std::int64_t parse_digits(std::string_view digits, std::string_view text) {
      if (digits.empty()) {
        throw Error(ErrorCode::bad_rational,
                    "malformed rational '" + std::string(text) + "'");
      }
      std::int64_t out = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), out);
      if (ec != std::errc() || ptr != digits.data() + digits.size()
          || out < 0) {
        throw Error(ErrorCode::bad_rational,
                    "malformed rational '" + std::string(text) + "'");
      }
      return out;
    }
  }  // namespace

  FuzzyValue::FuzzyValue(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw Error(ErrorCode::bad_rational, "zero denominator");
    }
    Rational r(num, den);
    _value = checked(r, r.numerator() == 0 ? "0" : std::to_string(num) + "/"
                                                       + std::to_string(den));
  }

  FuzzyValue::FuzzyValue(Rational const& r) : _value(checked(r, "value")) {}

  FuzzyValue FuzzyValue::parse(std::string_view text) {
    if (text.empty()) {
      throw Error(ErrorCode::bad_rational, "empty grade");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_digits(text.substr(0, slash), text);
      auto den = parse_digits(text.substr(slash + 1), text);
      if (den == 0) {
        throw Error(ErrorCode::bad_rational,
                    "zero denominator in '" + std::string(text) + "'");
      }
      Rational r(num, den);
      return FuzzyValue(checked(r, text));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
      return FuzzyValue(checked(Rational(parse_digits(text, text)), text));
    }
    auto whole_part = text.substr(0, dot);
    auto frac_part  = text.substr(dot + 1);
    if (frac_part.size() > 15 || (whole_part.empty() && frac_part.empty())) {
      throw Error(ErrorCode::bad_rational,
                  "malformed decimal '" + std::string(text) + "'");
    }
    std::int64_t whole = whole_part.empty() ? 0 : parse_digits(whole_part, text);
    std::int64_t frac  = frac_part.empty() ? 0 : parse_digits(frac_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
      scale *= 10;
    }
    if (whole > 1) {
      throw Error(ErrorCode::bad_rational,
                  "grade " + std::string(text) + " outside [0,1]");
    }
    return FuzzyValue(checked(Rational(whole * scale + frac, scale), text));
  }

  FuzzyValue FuzzyValue::complement() const {
    return FuzzyValue(Rational(1) - _value);
  }

  FuzzyValue FuzzyValue::midpoint(FuzzyValue const& a, FuzzyValue const& b) {
    return FuzzyValue((a._value + b._value) / Rational(2));
  }

  std::string FuzzyValue::to_string() const {
    return std::to_string(_value.numerator()) + "/"
           + std::to_string(_value.denominator());
  }

  std::ostream& operator<<(std::ostream& os, FuzzyValue const& v) {
    return os << v.to_string();
  }

  std::string_view to_string(ErrorCode code) {
    switch (code) {
      case ErrorCode::empty_carrier:
        return "EmptyCarrier";
      case ErrorCode::out_of_range_entry:
        return "OutOfRangeEntry";
      case ErrorCode::associativity_violation:
        return "AssociativityViolation";
      case ErrorCode::index_out_of_range:
        return "IndexOutOfRange";
      case ErrorCode::carrier_too_large:
        return "CarrierTooLarge";
      case ErrorCode::gamma_mismatch:
        return "GammaMismatch";
      case ErrorCode::homomorphism_violation:
        return "HomomorphismViolation";
      case ErrorCode::unknown_element:
        return "UnknownElement";
      case ErrorCode::invalid_threshold:
        return "InvalidThreshold";
      case ErrorCode::structure_mismatch:
        return "StructureMismatch";
      case ErrorCode::empty_family:
        return "EmptyFamily";
      case ErrorCode::empty_fuzzy_subset:
        return "EmptyFuzzySubset";
      case ErrorCode::invalid_alpha:
        return "InvalidAlpha";
      case ErrorCode::sample_not_bi_ideal:
        return "SampleNotBiIdeal";
      case ErrorCode::budget_exhausted:
        return "BudgetExhausted";
      case ErrorCode::unknown_predicate_name:
        return "UnknownPredicateName";
      case ErrorCode::invalid_config:
        return "InvalidConfig";
      case ErrorCode::syntax_error:
        return "SyntaxError";
      case ErrorCode::duplicate_name:
        return "DuplicateName";
      case ErrorCode::missing_table:
        return "MissingTable";
      case ErrorCode::bad_rational:
        return "BadRational";
    }
    return "Unknown";
  }

}  // namespace gsf
