#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace secondkind {

/// Exact scalar backend: arbitrary-precision rational, always in lowest terms
/// with positive denominator. The floating backend is plain `double`. Every
/// computation picks one backend; templates make mixing a compile error.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class T>
struct is_exact_backend : std::false_type {};
template <>
struct is_exact_backend<Rational> : std::true_type {};

template <class T>
inline constexpr bool is_exact_v = is_exact_backend<T>::value;

/// The scalar p/q in the requested backend.
template <class T>
T frac(long long p, long long q);

template <>
inline double frac<double>(long long p, long long q) {
  return static_cast<double>(p) / static_cast<double>(q);
}

template <>
inline Rational frac<Rational>(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("frac: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(BigInt(p), BigInt(q));
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class T>
T abs_val(const T& x) {
  return x < T(0) ? T(-x) : x;
}

inline std::string format_scalar(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Rationals print as "p" or "p/q".
inline std::string format_scalar(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Accepts "p/q", integers, and finite decimals ("-3", "3.25", "1/3").
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    return Rational(p, q);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(BigInt(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0) return Rational(BigInt(s.substr(0, dot)));
  BigInt den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(BigInt(digits), den);
}

/// Parse a scalar in the requested backend. The exact backend insists on
/// exactly representable text; the float backend takes anything strtod does.
template <class T>
T parse_scalar(const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const std::string& s) {
  return parse_rational(s);
}

template <>
inline double parse_scalar<double>(const std::string& s) {
  size_t pos = 0;
  double v;
  try {
    if (s.find('/') != std::string::npos) return to_double(parse_rational(s));
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_scalar: bad number '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("parse_scalar: bad number '" + s + "'");
  return v;
}

}  // namespace secondkind
