#pragma once

// Exact real numbers of the form q * sqrt(s) and finite sums of them.
//
// Structure constants in the normalized root-vector basis are square roots of
// rationals; every curvature value is a sum of products of two of them, so the
// additive group Q[sqrt(2), sqrt(3), ...] is closed under everything we need.

#include "flagcurv/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagcurv {

namespace detail {

/// Writes n = k^2 * s with s squarefree. n must be positive and fit in 63 bits.
inline std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t n) {
  std::uint64_t k = 1, s = 1;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) s *= p;
  }
  s *= n;
  return {k, s};
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("radicand out of range: " + v.str());
  return v.convert_to<std::uint64_t>();
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace detail

/// sign * sqrt(radicand), stored as coef * sqrt(root) with root squarefree.
class SignedSqrt {
 public:
  SignedSqrt() = default;

  static SignedSqrt from_square(int sgn, const Rational& radicand) {
    if (radicand < 0) throw std::domain_error("negative radicand");
    if (sgn == 0 || radicand == 0) {
      if (sgn != 0 && radicand == 0) throw std::domain_error("nonzero sign with zero radicand");
      if (sgn == 0 && radicand != 0) throw std::domain_error("zero sign with nonzero radicand");
      return {};
    }
    // sqrt(p/q) = sqrt(p*q)/q
    BigInt p = numer(radicand), q = denom(radicand);
    auto [k, s] = detail::square_free_split(detail::to_u64(p * q));
    SignedSqrt out;
    out.coef_ = Rational(BigInt(k), q);
    if (sgn < 0) out.coef_ = -out.coef_;
    out.root_ = s;
    return out;
  }

  static SignedSqrt rational(const Rational& q) {
    SignedSqrt out;
    out.coef_ = q;
    out.root_ = 1;
    return out;
  }

  int sign() const { return coef_.sign(); }
  bool is_zero() const { return coef_ == 0; }
  const Rational& coef() const { return coef_; }
  std::uint64_t root() const { return root_; }
  Rational radicand() const { return coef_ * coef_ * Rational(BigInt(root_)); }
  /// Exact square of the value.
  Rational square() const { return radicand(); }
  bool is_rational() const { return root_ == 1 || is_zero(); }
  double to_double() const { return flagcurv::to_double(coef_) * std::sqrt(double(root_)); }

  SignedSqrt operator-() const {
    SignedSqrt out = *this;
    out.coef_ = -out.coef_;
    return out;
  }

  friend SignedSqrt operator*(const SignedSqrt& a, const SignedSqrt& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::uint64_t g = detail::gcd_u64(a.root_, b.root_);
    SignedSqrt out;
    out.coef_ = a.coef_ * b.coef_ * Rational(BigInt(g));
    out.root_ = (a.root_ / g) * (b.root_ / g);
    return out;
  }
  friend SignedSqrt operator*(const SignedSqrt& a, const Rational& q) {
    if (q == 0 || a.is_zero()) return {};
    SignedSqrt out = a;
    out.coef_ *= q;
    return out;
  }
  friend SignedSqrt operator*(const Rational& q, const SignedSqrt& a) { return a * q; }

  friend bool operator==(const SignedSqrt& a, const SignedSqrt& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.coef_ == b.coef_ && a.root_ == b.root_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    if (root_ == 1) return to_string(coef_);
    return to_string(coef_) + "*sqrt(" + std::to_string(root_) + ")";
  }

 private:
  Rational coef_{0};
  std::uint64_t root_ = 1;
};

/// Finite sum of SignedSqrt terms with distinct squarefree roots.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& q) {  // NOLINT(google-explicit-constructor)
    if (q != 0) terms_.push_back({1, q});
  }
  Surd(const SignedSqrt& x) {  // NOLINT(google-explicit-constructor)
    if (!x.is_zero()) terms_.push_back({x.root(), x.coef()});
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational rational_value() const {
    if (!is_rational()) throw std::logic_error("surd is not rational: " + str());
    return terms_.empty() ? Rational(0) : terms_[0].second;
  }
  const std::vector<std::pair<std::uint64_t, Rational>>& terms() const { return terms_; }

  double to_double() const {
    long double acc = 0;
    for (const auto& [s, q] : terms_) acc += static_cast<long double>(flagcurv::to_double(q)) * std::sqrt((long double)s);
    return static_cast<double>(acc);
  }

  /// Exact for up to two distinct radicands; otherwise decided in long double.
  int sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return terms_[0].second.sign();
    if (terms_.size() == 2) {
      // a sqrt(s) + b sqrt(t): compare a^2 s with b^2 t when the signs differ
      const auto& [s, a] = terms_[0];
      const auto& [t, b] = terms_[1];
      if (a.sign() == b.sign()) return a.sign();
      Rational lhs = a * a * Rational(BigInt(s)), rhs = b * b * Rational(BigInt(t));
      if (lhs == rhs) return 0;
      return lhs > rhs ? a.sign() : b.sign();
    }
    double v = to_double();
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }

  Surd& operator+=(const Surd& o) {
    std::vector<std::pair<std::uint64_t, Rational>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        merged.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        merged.push_back(o.terms_[j++]);
      } else {
        Rational q = terms_[i].second + o.terms_[j].second;
        if (q != 0) merged.push_back({terms_[i].first, q});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }
  Surd operator-() const {
    Surd out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  Surd& operator-=(const Surd& o) { return *this += -o; }
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }

  friend Surd operator*(const Surd& a, const Rational& q) {
    if (q == 0) return {};
    Surd out = a;
    for (auto& t : out.terms_) t.second *= q;
    return out;
  }
  friend Surd operator*(const Rational& q, const Surd& a) { return a * q; }

  friend Surd operator*(const Surd& a, const Surd& b) {
    Surd out;
    for (const auto& [s, p] : a.terms_)
      for (const auto& [t, q] : b.terms_) {
        SignedSqrt x = SignedSqrt::rational(p) * SignedSqrt::from_square(1, Rational(BigInt(s)));
        SignedSqrt y = SignedSqrt::rational(q) * SignedSqrt::from_square(1, Rational(BigInt(t)));
        out += Surd(x * y);
      }
    return out;
  }

  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& [s, q] = terms_[k];
      std::string part = s == 1 ? to_string(q) : to_string(q) + "*sqrt(" + std::to_string(s) + ")";
      if (k > 0) out += (part[0] == '-') ? " - " + part.substr(1) : " + " + part;
      else out += part;
    }
    return out;
  }

 private:
  std::vector<std::pair<std::uint64_t, Rational>> terms_;  // sorted by root
};

inline std::ostream& operator<<(std::ostream& os, const SignedSqrt& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.str(); }

}  // namespace flagcurv
