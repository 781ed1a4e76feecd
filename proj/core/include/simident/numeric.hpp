#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace simident {

// Exact arithmetic for fixture distributions and hand-written tables.
// Arbitrary precision: sums and products of user-supplied fractions can
// never overflow, and the desk-scale state-space guard keeps the cost
// negligible.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

// Equality with mode-appropriate semantics: exact for rationals, absolute
// tolerance for floating point.
inline bool num_eq(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
inline bool num_eq(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool num_is_zero(const Rational& a) { return a.is_zero(); }
inline bool num_is_zero(double a) { return a == 0.0; }

template <class Num>
struct NumericConstants;

template <>
struct NumericConstants<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static constexpr const char* mode_name = "exact";
};

template <>
struct NumericConstants<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static constexpr const char* mode_name = "float";
};

inline std::string format_number(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

inline std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Parses "n", "n/d" or a plain decimal. Decimals are exact in rational mode
// (digits over a power of ten), so fixture files may use either style.
template <class Num>
Num parse_number(const std::string& tok);

template <>
inline Rational parse_number<Rational>(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash != std::string::npos) {
      long long num = std::stoll(tok.substr(0, slash));
      long long den = std::stoll(tok.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }
    auto dot = tok.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(tok));
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    std::size_t frac_len = tok.size() - dot - 1;
    if (frac_len > 17) throw std::invalid_argument("too many decimal places");
    long long den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(std::stoll(digits), den);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse '" + tok + "' as an exact number");
  }
}

template <>
inline double parse_number<double>(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash != std::string::npos) {
      double num = std::stod(tok.substr(0, slash));
      double den = std::stod(tok.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return num / den;
    }
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse '" + tok + "' as a number");
  }
}

}  // namespace simident
