#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flagcurv {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline int sign(const Rational& q) { return q.sign(); }

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

/// Parses "3", "-3/2" or a terminating decimal such as "0.75".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
    std::size_t i = 0;
    while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
    v.erase(0, i);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto parse_int = [](const std::string& v) -> BigInt {
    if (v.empty() || v == "-" || v == "+") throw std::invalid_argument("bad integer '" + v + "'");
    std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    for (std::size_t k = i; k < v.size(); ++k)
      if (v[k] < '0' || v[k] > '9') throw std::invalid_argument("bad integer '" + v + "'");
    return BigInt(v[0] == '+' ? v.substr(1) : v);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt n = parse_int(s.substr(0, slash));
    BigInt d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(n, d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    BigInt w = parse_int(whole);
    BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))
      throw std::invalid_argument("bad decimal '" + s + "'");
    BigInt absw = w < 0 ? BigInt(-w) : w;
    Rational r = Rational(absw * scale + f, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_int(s));
}

}  // namespace flagcurv
