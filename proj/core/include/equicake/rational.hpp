#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace equicake {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p", or "p/q" with integer p and positive integer q.
/// Decimal notation is rejected on purpose: instances are exact.
inline std::optional<Rational> parse_rational(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits(num) || !digits(den)) return std::nullopt;
  BigInt p{std::string(num)}, q{std::string(den)};
  if (q == 0) return std::nullopt;
  if (neg) p = -p;
  return Rational(p, q);
}

/// Lowest-terms "p" or "p/q" form; parse_rational accepts everything this emits.
inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact value of a finite double (doubles are dyadic rationals), so float
/// tolerances can be compared against exact gaps without rounding.
inline Rational rational_from_double(double v) {
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double frac = std::frexp(v, &exp);
  // 53 doublings make the mantissa integral.
  auto mant = static_cast<long long>(std::ldexp(frac, 53));
  exp -= 53;
  Rational r(mant);
  BigInt scale = BigInt(1) << std::abs(exp);
  if (exp >= 0)
    r *= scale;
  else
    r /= scale;
  return r;
}

}  // namespace equicake
