#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gsf {

  using Rational = boost::rational<std::int64_t>;

  /// An exact membership grade in [0, 1].
  ///
  /// Stored as a reduced fraction with positive denominator. All predicates
  /// in this library mix strict and non-strict comparisons (`mu(x) >= t`
  /// versus `mu(x) + t > 1`), so grades never pass through floating point.
  class FuzzyValue {
   public:
    FuzzyValue() = default;

    /// Throws Error(bad_rational) unless 0 <= num/den <= 1 and den != 0.
    FuzzyValue(std::int64_t num, std::int64_t den);

    /// Throws Error(bad_rational) unless 0 <= r <= 1.
    explicit FuzzyValue(Rational const& r);

    /// Accepts `p/q`, integers, and decimal literals such as `0.78`
    /// (converted exactly to 39/50). Throws Error(bad_rational).
    static FuzzyValue parse(std::string_view text);

    static FuzzyValue zero() {
      return FuzzyValue();
    }
    static FuzzyValue one() {
      return FuzzyValue(1, 1);
    }
    static FuzzyValue half() {
      return FuzzyValue(1, 2);
    }

    [[nodiscard]] Rational const& rational() const noexcept {
      return _value;
    }
    [[nodiscard]] std::int64_t numerator() const noexcept {
      return _value.numerator();
    }
    [[nodiscard]] std::int64_t denominator() const noexcept {
      return _value.denominator();
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return _value.numerator() == 0;
    }

    /// 1 - v
    [[nodiscard]] FuzzyValue complement() const;

    /// (a + b) / 2
    static FuzzyValue midpoint(FuzzyValue const& a, FuzzyValue const& b);

    /// Always `p/q` in lowest terms, including `0/1` and `1/1`.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(FuzzyValue const&, FuzzyValue const&) = default;
    friend bool operator<(FuzzyValue const& a, FuzzyValue const& b) {
      return a._value < b._value;
    }
    friend bool operator>(FuzzyValue const& a, FuzzyValue const& b) {
      return b < a;
    }
    friend bool operator<=(FuzzyValue const& a, FuzzyValue const& b) {
      return !(b < a);
    }
    friend bool operator>=(FuzzyValue const& a, FuzzyValue const& b) {
      return !(a < b);
    }

    /// a + b > 1, evaluated without leaving [0,1].
    friend bool sum_exceeds_one(FuzzyValue const& a, FuzzyValue const& b) {
      return a._value + b._value > Rational(1);
    }

   private:
    Rational _value{0};
  };

  std::ostream& operator<<(std::ostream& os, FuzzyValue const& v);

}  // namespace gsf
