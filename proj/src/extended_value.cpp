#include "dlattice/extended_value.hpp"

#include <cctype>

#include "dlattice/errors.hpp"

namespace dlat {

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::Format, "not a rational: '" + std::string(text) + "'");
}

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad(whole);
  boost::multiprecision::cpp_int v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad(whole);
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) bad(text);
    q = Rational(parse_integer(s.substr(0, slash), text), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto frac = s.substr(dot + 1);
    const auto int_part = s.substr(0, dot);
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const auto whole = int_part.empty() ? boost::multiprecision::cpp_int(0) : parse_integer(int_part, text);
    const auto fpart = frac.empty() ? boost::multiprecision::cpp_int(0) : parse_integer(frac, text);
    if (int_part.empty() && frac.empty()) bad(text);
    q = Rational(whole * scale + fpart, scale);
  } else {
    q = Rational(parse_integer(s, text));
  }
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

ExtendedValue::ExtendedValue(Rational value) : value_(std::move(value)) {
  if (value_ < 0) throw Error(ErrorKind::InvalidArgument, "negative value " + format_rational(value_));
}

ExtendedValue ExtendedValue::operator+(const ExtendedValue& o) const {
  if (infinite_ || o.infinite_) return infinity();
  return {Rational(value_ + o.value_)};
}

ExtendedValue ExtendedValue::scaled(const Rational& k) const {
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "scaling factor must be positive");
  if (infinite_) return infinity();
  return {Rational(value_ * k)};
}

bool ExtendedValue::operator<(const ExtendedValue& o) const {
  if (infinite_) return false;
  if (o.infinite_) return true;
  return value_ < o.value_;
}

bool eps_close(const ExtendedValue& x, const ExtendedValue& y, const Rational& eps) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
  return abs(x.value() - y.value()) < eps;
}

bool close_for_all_eps(const ExtendedValue& x, const ExtendedValue& y) { return x == y; }

std::string format_extended(const ExtendedValue& v) {
  return v.is_infinite() ? std::string("inf") : format_rational(v.value());
}

}  // namespace dlat
