#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dlat {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4" or "0.125" exactly. Throws Error(Format).
Rational parse_rational(std::string_view text);
/// "7" or "3/4".
std::string format_rational(const Rational& q);

/// A value in [0, +∞]: a nonnegative exact rational or infinity.
class ExtendedValue {
public:
  ExtendedValue() = default;
  /// Throws InvalidArgument for negative values.
  ExtendedValue(Rational value);  // NOLINT(google-explicit-constructor)
  ExtendedValue(long long value) : ExtendedValue(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static ExtendedValue infinity() {
    ExtendedValue v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  /// The finite value; zero for infinity.
  const Rational& value() const { return value_; }

  ExtendedValue operator+(const ExtendedValue& o) const;
  /// Multiplication by a positive rational; infinity stays infinite.
  ExtendedValue scaled(const Rational& k) const;

  bool operator==(const ExtendedValue& o) const { return infinite_ == o.infinite_ && value_ == o.value_; }
  bool operator<(const ExtendedValue& o) const;
  bool operator<=(const ExtendedValue& o) const { return !(o < *this); }
  bool operator>(const ExtendedValue& o) const { return o < *this; }

private:
  bool infinite_ = false;
  Rational value_{0};
};

/// ε-closeness in the uniformity of [0,+∞] where +∞ is an isolated point:
/// both finite with |x−y| < ε, or both infinite.
bool eps_close(const ExtendedValue& x, const ExtendedValue& y, const Rational& eps);

/// True iff x and y are ε-close for every ε > 0, i.e. equal.
bool close_for_all_eps(const ExtendedValue& x, const ExtendedValue& y);

/// "inf" or a rational string.
std::string format_extended(const ExtendedValue& v);

}  // namespace dlat
