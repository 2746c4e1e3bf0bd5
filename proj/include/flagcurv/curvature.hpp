#pragma once

// Chern connection and curvature of an invariant almost-Hermitian metric at
// the origin of a flag manifold, evaluated exactly in Q(sqrt 2, sqrt 3, ...).
//
// Conventions: lambda(X_a, X_{-a}) = -lambda_a, the connection is
// nabla_{X_a} X_b = Gamma(a,b) X_{a+b} (zero unless a+b in R_M), and
// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]_m} Z - [[X,Y]_k, Z].

#include "flagcurv/chevalley.hpp"
#include "flagcurv/flagspace.hpp"

#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

namespace flagcurv {

namespace detail {

/// Index of a+b+c (or kZero / kNotRoot). If a+b+c is a root e then (e,x) > 0
/// for some summand x, so one of the pairwise sums is a root or zero.
inline RootIndex triple_sum(const RootSystem& rs, RootIndex a, RootIndex b, RootIndex c) {
  const RootIndex u[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    RootIndex pair = rs.sum(u[(i + 1) % 3], u[(i + 2) % 3]);
    if (pair == RootSystem::kZero) return u[i];
    if (pair >= 0) return rs.sum(u[i], pair);
  }
  return RootSystem::kNotRoot;
}

}  // namespace detail

class CurvatureEngine {
 public:
  /// `ct` must outlive the engine; `fm` is held by value.
  CurvatureEngine(const ChevalleyTable& ct, FlagManifold fm, const AlmostComplexStructure& j, const InvariantMetric& g)
      : ct_(ct), fm_(std::move(fm)), j_(j), g_(g) {
    check_shape(fm_, j_);
    check_shape(fm_, g_);
    const RootSystem& rs = fm_.roots();
    const int N = rs.size();
    eps_.assign(N, 0);
    lam_.assign(N, Rational(0));
    for (int a = 0; a < N; ++a)
      if (fm_.in_m(a)) {
        eps_[a] = j_.eps(fm_, a);
        lam_[a] = g_.lambda(fm_, a);
      }
  }

  const FlagManifold& flag() const { return fm_; }
  const AlmostComplexStructure& acs() const { return j_; }
  const InvariantMetric& metric() const { return g_; }
  const ChevalleyTable& table() const { return ct_; }
  int eps(RootIndex a) const { return eps_[a]; }
  const Rational& lambda(RootIndex a) const { return lam_[a]; }

  /// Gamma(a,b) with nabla_{X_a} X_b = Gamma(a,b) X_{a+b}; zero unless a, b, a+b lie in R_M.
  SignedSqrt connection(RootIndex a, RootIndex b) const {
    const RootSystem& rs = fm_.roots();
    if (!fm_.in_m(a) || !fm_.in_m(b)) return {};
    RootIndex s = rs.sum(a, b);
    if (s < 0 || !fm_.in_m(s)) return {};
    const int ea = eps_[a], eb = eps_[b], es = eps_[s];
    Rational bracket = lam_[b] * (1 + ea * es + ea * eb + eb * es) + lam_[s] * (1 - ea * eb - ea * es + eb * es);
    if (bracket == 0) return {};
    return ct_.m(a, b) * (bracket / (4 * lam_[s]));
  }

  /// lambda(R(X_a, X_b) X_c, X_d) for roots of R_M.
  Surd entry(RootIndex a, RootIndex b, RootIndex c, RootIndex d) const {
    const RootSystem& rs = fm_.roots();
    if (!fm_.in_m(a) || !fm_.in_m(b) || !fm_.in_m(c) || !fm_.in_m(d)) return {};
    RootIndex bc = rs.sum(b, c), ac = rs.sum(a, c), ab = rs.sum(a, b);
    RootIndex e = detail::triple_sum(rs, a, b, c);
    if (e < 0 || rs.neg(e) != d) return {};
    Surd kappa;
    if (bc >= 0 && fm_.in_m(bc)) kappa += Surd(connection(b, c) * connection(a, bc));
    if (ac >= 0 && fm_.in_m(ac)) kappa -= Surd(connection(a, c) * connection(b, ac));
    if (ab == RootSystem::kZero) {
      kappa -= Surd(rs.killing(c, a));
    } else if (ab >= 0 && fm_.in_k(ab)) {
      kappa -= Surd(ct_.m(a, b) * ct_.m(ab, c));
    } else if (ab >= 0) {
      kappa -= Surd(ct_.m(a, b) * connection(ab, c));
    }
    return kappa * Rational(-lam_[d]);
  }

  /// R_{i jbar k lbar} = lambda(R(X_i, X_{-j}) X_k, X_{-l}).
  Surd hermitian_entry(RootIndex i, RootIndex j, RootIndex k, RootIndex l) const {
    const RootSystem& rs = fm_.roots();
    return entry(i, rs.neg(j), k, rs.neg(l));
  }

 private:
  const ChevalleyTable& ct_;
  FlagManifold fm_;
  AlmostComplexStructure j_;
  InvariantMetric g_;
  std::vector<int> eps_;
  std::vector<Rational> lam_;
};

/// Free-function form of the connection coefficient.
inline SignedSqrt chern_coefficient(const ChevalleyTable& ct, const FlagManifold& fm, const AlmostComplexStructure& j,
                                    const InvariantMetric& g, RootIndex a, RootIndex b) {
  return CurvatureEngine(ct, fm, j, g).connection(a, b);
}

/// Sparse curvature tensor over R_M: every nonzero lambda(R(X_a,X_b)X_c,X_d).
class CurvatureTensor {
 public:
  using Key = std::array<RootIndex, 4>;

  explicit CurvatureTensor(const CurvatureEngine& engine) : fm_(engine.flag()) {
    const RootSystem& rs = fm_.roots();
    std::vector<RootIndex> rm;
    for (int a = 0; a < rs.size(); ++a)
      if (fm_.in_m(a)) rm.push_back(a);
    for (RootIndex a : rm)
      for (RootIndex b : rm)
        for (RootIndex c : rm) {
          RootIndex e = detail::triple_sum(rs, a, b, c);
          if (e < 0 || !fm_.in_m(e)) continue;
          RootIndex d = rs.neg(e);
          Surd v = engine.entry(a, b, c, d);
          if (!v.is_zero()) entries_.emplace(Key{a, b, c, d}, std::move(v));
        }
  }

  const FlagManifold& flag() const { return fm_; }
  const std::map<Key, Surd>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  Surd at(RootIndex a, RootIndex b, RootIndex c, RootIndex d) const {
    auto it = entries_.find(Key{a, b, c, d});
    return it == entries_.end() ? Surd() : it->second;
  }
  Surd hermitian(RootIndex i, RootIndex j, RootIndex k, RootIndex l) const {
    const RootSystem& rs = fm_.roots();
    return at(i, rs.neg(j), k, rs.neg(l));
  }
  bool all_rational() const {
    for (const auto& [k, v] : entries_)
      if (!v.is_rational()) return false;
    return true;
  }

  /// CSV rows "alpha,beta,gamma,delta,exact,value": exact rows carry n/d,
  /// irrational rows carry a float.
  std::string dump_csv() const {
    const RootSystem& rs = fm_.roots();
    std::ostringstream os;
    os << "alpha,beta,gamma,delta,exact,value\n";
    auto coords = [&](RootIndex a) {
      std::string s;
      for (std::size_t k = 0; k < rs.coords(a).size(); ++k) s += (k ? " " : "") + std::to_string(rs.coords(a)[k]);
      return s;
    };
    for (const auto& [k, v] : entries_) {
      os << coords(k[0]) << ',' << coords(k[1]) << ',' << coords(k[2]) << ',' << coords(k[3]) << ',';
      if (v.is_rational()) {
        os << "1," << to_string(v.rational_value()) << '\n';
      } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v.to_double());
        os << "0," << buf << '\n';
      }
    }
    return os.str();
  }

 private:
  FlagManifold fm_;
  std::map<Key, Surd> entries_;
};

/// Closed-form values of R(X_a,X_{-a},X_c,X_{-c}) and R(X_c,X_{-a},X_a,X_{-c})
/// for a, c in R_M^+. Indicator terms vanish when the relevant root leaves R_M.
/// For a = c the bracket [X_a, X_{-a}] lands in the Cartan part and both values
/// equal lambda_a (a,a)_B.
inline std::pair<Rational, Rational> curvature_diag_oracle(const CurvatureEngine& eng, RootIndex a, RootIndex c) {
  const FlagManifold& fm = eng.flag();
  const RootSystem& rs = fm.roots();
  const ChevalleyTable& ct = eng.table();
  if (eng.eps(a) <= 0 || eng.eps(c) <= 0) throw std::invalid_argument("oracle expects roots of R_M^+");
  if (a == c) {
    Rational v = eng.lambda(a) * rs.killing(a, a);
    return {v, v};
  }
  auto delta_plus = [&](RootIndex r) { return r >= 0 && fm.in_m(r) && eng.eps(r) > 0; };
  auto delta_minus = [&](RootIndex r) { return r >= 0 && fm.in_m(r) && eng.eps(r) < 0; };
  const Rational& la = eng.lambda(a);
  const Rational& lc = eng.lambda(c);
  RootIndex sum = rs.sum(a, c);              // a + c
  RootIndex diff = rs.diff(c, a);            // c - a
  Rational m2_plus = ct.m2(a, c);            // m_{a,c}^2
  Rational m2_minus = ct.m2(a, rs.neg(c));   // m_{a,-c}^2

  Rational first(0);
  if (delta_plus(diff)) first -= eng.lambda(diff) / lc * m2_minus;
  if (delta_plus(sum)) first += lc / eng.lambda(sum) * m2_plus;
  first += m2_minus - m2_plus;
  first *= lc;

  Rational second(0);
  if (delta_plus(sum)) second -= la * lc / eng.lambda(sum) * m2_plus;
  Rational xi = lc;
  if (diff >= 0 && fm.in_m(diff)) xi = delta_minus(diff) ? lc : la;
  second += m2_minus * xi;
  return {first, second};
}

}  // namespace flagcurv
