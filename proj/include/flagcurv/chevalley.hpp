#pragma once

// Structure constants m_{a,b} of a root-vector basis {X_a, H_a} normalized by
// B(X_a, X_-a) = 1 and [X_a, X_-a] = H_a, so [X_a, X_b] = m_{a,b} X_{a+b}.
//
// Signs come from an integral Chevalley basis built with the extraspecial-pair
// recursion; each E_a is then rescaled by c_a = sqrt((a,a)_B / 2).

#include "flagcurv/rootsys.hpp"
#include "flagcurv/surd.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace flagcurv {

/// Element of the complexified Lie algebra: sum_i h_i H_{E_i} + sum_a x_a X_a.
struct AlgebraElement {
  std::vector<Surd> cartan;          // length rank
  std::map<RootIndex, Surd> roots;   // zero coefficients are never stored

  static AlgebraElement root_vector(int rank, RootIndex a, const Surd& coef = Surd(Rational(1))) {
    AlgebraElement e;
    e.cartan.assign(rank, Surd());
    if (!coef.is_zero()) e.roots[a] = coef;
    return e;
  }
  /// H_v for v given in simple-root coordinates (H is linear in the root).
  static AlgebraElement cartan_element(const Coords& v) {
    AlgebraElement e;
    for (int c : v) e.cartan.push_back(Surd(Rational(c)));
    return e;
  }

  bool is_zero() const {
    for (const auto& c : cartan)
      if (!c.is_zero()) return false;
    return roots.empty();
  }
  void add_root(RootIndex a, const Surd& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = roots.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) roots.erase(it);
    }
  }
  AlgebraElement& operator+=(const AlgebraElement& o) {
    if (cartan.size() < o.cartan.size()) cartan.resize(o.cartan.size());
    for (std::size_t i = 0; i < o.cartan.size(); ++i) cartan[i] += o.cartan[i];
    for (const auto& [a, c] : o.roots) add_root(a, c);
    return *this;
  }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement d = x;
    AlgebraElement neg = y;
    for (auto& c : neg.cartan) c = -c;
    for (auto& [a, c] : neg.roots) c = -c;
    d += neg;
    return d.is_zero();
  }
};

class ChevalleyTable {
 public:
  explicit ChevalleyTable(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) { build(); }

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }

  /// m_{a,b}; zero when a+b is not a root.
  const SignedSqrt& m(RootIndex a, RootIndex b) const { return m_[idx(a, b)]; }
  /// m_{a,b}^2 as an exact rational.
  Rational m2(RootIndex a, RootIndex b) const { return m_[idx(a, b)].square(); }
  /// Integral Chevalley constant N_{a,b} = +-(p+1).
  int chevalley_integer(RootIndex a, RootIndex b) const { return n_[idx(a, b)]; }

  /// Table for the basis X'_a = s_a X_a with s_a = s_{-a} = signs[positive_part(a)].
  ChevalleyTable regauged(const std::vector<int>& signs) const {
    if (static_cast<int>(signs.size()) != rs_->num_positive())
      throw std::invalid_argument("regauge needs one sign per positive root");
    ChevalleyTable out = *this;
    const int N = rs_->size();
    auto s = [&](RootIndex a) { return signs[rs_->positive_part(a)]; };
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        RootIndex c = rs_->sum(a, b);
        if (c < 0) continue;
        int f = s(a) * s(b) * s(c);
        if (f < 0) {
          out.m_[idx(a, b)] = -m_[idx(a, b)];
          out.n_[idx(a, b)] = -n_[idx(a, b)];
        }
      }
    return out;
  }

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    const RootSystem& rs = *rs_;
    const int n = rs.rank();
    AlgebraElement out;
    out.cartan.assign(n, Surd());
    // (gamma, H_v)_B for the Cartan part v of an element
    auto pairing = [&](RootIndex g, const std::vector<Surd>& v) {
      Surd acc;
      for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (v[i].is_zero()) continue;
        acc += v[i] * rs.killing(rs.coords(g), unit(i));
      }
      return acc;
    };
    for (const auto& [a, ca] : x.roots)
      for (const auto& [b, cb] : y.roots) {
        RootIndex s = rs.sum(a, b);
        if (s == RootSystem::kZero) {
          Surd c = ca * cb;
          const auto& co = rs.coords(a);
          for (int i = 0; i < n; ++i)
            if (co[i]) out.cartan[i] += c * Rational(co[i]);
        } else if (s >= 0) {
          out.add_root(s, ca * cb * Surd(m(a, b)));
        }
      }
    // [H_v, X_g] = (g, v)_B X_g
    for (const auto& [g, cg] : y.roots) out.add_root(g, cg * pairing(g, x.cartan));
    for (const auto& [g, cg] : x.roots) out.add_root(g, -(cg * pairing(g, y.cartan)));
    return out;
  }

  /// Checks antisymmetry, m_{a,b} = -m_{-a,-b}, the cyclic identity and the
  /// magnitude law m^2 = q(1+p)/2 (a,a)_B. Returns the first violation.
  std::optional<std::string> verify_identities() const {
    const RootSystem& rs = *rs_;
    const int N = rs.size();
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        if (b == a || b == rs.neg(a)) continue;
        RootIndex s = rs.sum(a, b);
        const SignedSqrt& v = m(a, b);
        auto fail = [&](const std::string& what) {
          return what + " at a=" + rs.root_str(a) + " b=" + rs.root_str(b) + " m=" + v.str();
        };
        if ((s < 0) != v.is_zero()) return fail("zero pattern");
        if (!(v == -m(b, a))) return fail("antisymmetry");
        if (!(v == -m(rs.neg(a), rs.neg(b)))) return fail("negation");
        if (s >= 0) {
          RootIndex ms = rs.neg(s);
          if (!(v == m(b, ms)) || !(v == m(ms, a))) return fail("cyclic identity");
        }
        auto [p, q] = rs.root_string(a, b);
        if (v.square() != Rational(q * (1 + p), 2) * rs.killing(a, a)) return fail("magnitude law");
      }
    return std::nullopt;
  }

  /// Jacobi identity on basis triples: exhaustive when the root count is at
  /// most 50, plus `trials` sampled triples otherwise.
  bool verify_jacobi(int trials, std::uint64_t seed = 1, std::string* failure = nullptr) const {
    const RootSystem& rs = *rs_;
    const int n = rs.rank(), N = rs.size();
    const int dim = n + N;
    auto basis = [&](int k) {
      if (k < n) {
        Coords e(n, 0);
        e[k] = 1;
        return AlgebraElement::cartan_element(e);
      }
      return AlgebraElement::root_vector(n, k - n);
    };
    std::vector<AlgebraElement> b(dim);
    for (int k = 0; k < dim; ++k) b[k] = basis(k);
    auto check = [&](int i, int j, int k) {
      AlgebraElement acc = bracket(bracket(b[i], b[j]), b[k]);
      acc += bracket(bracket(b[j], b[k]), b[i]);
      acc += bracket(bracket(b[k], b[i]), b[j]);
      if (!acc.is_zero()) {
        if (failure) *failure = "Jacobi fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        return false;
      }
      return true;
    };
    if (N <= 50) {
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          for (int k = j + 1; k < dim; ++k)
            if (!check(i, j, k)) return false;
      return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (int t = 0; t < trials; ++t)
      if (!check(pick(rng), pick(rng), pick(rng))) return false;
    return true;
  }

  /// CSV rows "alpha,beta,sign,radicand" over pairs with a+b a root.
  std::string dump_csv() const {
    const RootSystem& rs = *rs_;
    std::ostringstream os;
    os << "alpha,beta,sign,radicand\n";
    auto coords = [&](RootIndex a) {
      std::string s;
      for (std::size_t k = 0; k < rs.coords(a).size(); ++k) s += (k ? " " : "") + std::to_string(rs.coords(a)[k]);
      return s;
    };
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        if (rs.sum(a, b) < 0) continue;
        const auto& v = m(a, b);
        os << coords(a) << ',' << coords(b) << ',' << v.sign() << ',' << to_string(v.radicand()) << '\n';
      }
    return os.str();
  }

 private:
  std::size_t idx(RootIndex a, RootIndex b) const { return static_cast<std::size_t>(a) * rs_->size() + b; }
  Coords unit(int i) const {
    Coords e(rs_->rank(), 0);
    e[i] = 1;
    return e;
  }

  void build() {
    const RootSystem& rs = *rs_;
    const int N = rs.size(), P = rs.num_positive();
    extraspecial_.assign(P, -1);
    for (int xi = 0; xi < P; ++xi)
      for (int x = 0; x < P; ++x)
        if (rs.diff(xi, x) >= 0 && rs.is_positive(rs.diff(xi, x))) {
          extraspecial_[xi] = x;
          break;
        }
    memo_.assign(static_cast<std::size_t>(P) * P, 0);
    n_.assign(static_cast<std::size_t>(N) * N, 0);
    m_.assign(static_cast<std::size_t>(N) * N, SignedSqrt());
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        RootIndex s = rs.sum(a, b);
        if (s < 0) continue;
        int v = integer_constant(a, b);
        auto [p, q] = rs.root_string(a, b);
        if (std::abs(v) != p + 1) throw std::logic_error("Chevalley constant magnitude mismatch");
        n_[idx(a, b)] = v;
        Rational r = Rational(v * v) * rs.killing(a, a) * rs.killing(b, b) / (2 * rs.killing(s, s));
        m_[idx(a, b)] = SignedSqrt::from_square(v > 0 ? 1 : -1, r);
      }
    memo_.clear();
  }

  Rational norm(RootIndex a) const { return rs_->symmetrized(a, a); }

  // N_{r,s} for any pair with r+s a root, reduced to a positive special pair.
  int integer_constant(RootIndex r, RootIndex s) {
    const RootSystem& rs = *rs_;
    RootIndex sum = rs.sum(r, s);
    if (sum < 0) return 0;
    RootIndex t = rs.neg(sum);
    int npos = rs.is_positive(r) + rs.is_positive(s) + rs.is_positive(t);
    if (npos < 2) return -integer_constant(rs.neg(r), rs.neg(s));
    RootIndex u[3] = {r, s, t};
    for (int i = 0; i < 3; ++i) {
      RootIndex a = u[i], b = u[(i + 1) % 3], z = u[(i + 2) % 3];
      if (!rs.is_positive(a) || !rs.is_positive(b)) continue;
      // N_{r,s}/(t,t) = N_{a,b}/(z,z) along the cyclic order
      int base = a < b ? positive_constant(a, b) : -positive_constant(b, a);
      Rational v = Rational(base) * norm(t) / norm(z);
      if (!is_integer(v)) throw std::logic_error("non-integral Chevalley constant");
      return numer(v).convert_to<int>();
    }
    throw std::logic_error("unreachable");
  }

  // N_{x,y} for positive x < y with x+y a root.
  int positive_constant(RootIndex x, RootIndex y) {
    const RootSystem& rs = *rs_;
    int& slot = memo_[static_cast<std::size_t>(x) * rs.num_positive() + y];
    if (slot != 0) return slot;
    RootIndex xi = rs.sum(x, y);
    RootIndex a1 = extraspecial_[xi];
    RootIndex b1 = rs.diff(xi, a1);
    if (x == a1) {
      slot = rs.root_string(x, y).first + 1;
      return slot;
    }
    // four-term relation on (x, y, -a1, -b1)
    Rational acc(0);
    RootIndex ya = rs.diff(y, a1);
    if (ya >= 0) acc += Rational(integer_constant(y, rs.neg(a1)) * integer_constant(x, rs.neg(b1))) / norm(ya);
    RootIndex xa = rs.diff(x, a1);
    if (xa >= 0) acc += Rational(integer_constant(rs.neg(a1), x) * integer_constant(y, rs.neg(b1))) / norm(xa);
    Rational v = norm(xi) * acc / positive_constant(a1, b1);
    if (!is_integer(v) || v == 0) throw std::logic_error("extraspecial recursion produced " + to_string(v));
    slot = numer(v).convert_to<int>();
    return slot;
  }

  std::shared_ptr<const RootSystem> rs_;
  std::vector<RootIndex> extraspecial_;
  std::vector<int> memo_;
  std::vector<int> n_;
  std::vector<SignedSqrt> m_;
};

}  // namespace flagcurv
