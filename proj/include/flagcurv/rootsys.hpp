#pragma once

// Irreducible root systems of types A-G in simple-root coordinates.
//
// Simple roots are numbered as in Bourbaki. Roots are addressed by a dense
// index: positive roots come first, ordered by height and then by descending
// lexicographic order of their coordinates (so E1 precedes E2), and the
// negative of positive root i has index i + num_positive().

#include "flagcurv/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagcurv {

using Coords = std::vector<int>;
using RootIndex = int;

struct LieType {
  char series = 'A';
  int rank = 1;

  static void validate(char series, int rank) {
    auto bad = [&] {
      throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for series " +
                                  series);
    };
    switch (series) {
      case 'A': if (rank < 1) bad(); break;
      case 'B': if (rank < 2) bad(); break;
      case 'C': if (rank < 2) bad(); break;
      case 'D': if (rank < 3) bad(); break;
      case 'E': if (rank < 6 || rank > 8) bad(); break;
      case 'F': if (rank != 4) bad(); break;
      case 'G': if (rank != 2) bad(); break;
      default: throw std::invalid_argument(std::string("unknown series '") + series + "'");
    }
  }

  static LieType make(char series, int rank) {
    series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    validate(series, rank);
    return {series, rank};
  }

  /// "C4", "g2", ... (case-insensitive).
  static LieType parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2) throw std::invalid_argument("bad Lie type '" + std::string(text) + "' (expected e.g. C4)");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad Lie type '" + std::string(text) + "' (expected e.g. C4)");
    if (s.size() > 4) throw std::invalid_argument("rank too large in '" + s + "'");
    return make(s[0], std::stoi(s.substr(1)));
  }

  std::string str() const { return std::string(1, series) + std::to_string(rank); }
  friend bool operator==(const LieType&, const LieType&) = default;
};

namespace detail {

/// Gram matrix of the simple roots, long roots of squared length 2.
inline std::vector<std::vector<Rational>> simple_root_gram(LieType t) {
  const int n = t.rank;
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
  auto link = [&](int i, int j, const Rational& v) {  // 1-based
    g[i - 1][j - 1] = v;
    g[j - 1][i - 1] = v;
  };
  const Rational m1(-1), half(1, 2);
  switch (t.series) {
    case 'A':
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, m1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 2;
      g[n - 1][n - 1] = 1;
      for (int i = 1; i < n; ++i) link(i, i + 1, m1);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 1;
      g[n - 1][n - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -half);
      link(n - 1, n, m1);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, m1);
      link(n - 2, n, m1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      link(1, 3, m1);
      link(2, 4, m1);
      for (int i = 3; i < n; ++i) link(i, i + 1, m1);
      break;
    case 'F':
      g[0][0] = 2;
      g[1][1] = 2;
      g[2][2] = 1;
      g[3][3] = 1;
      link(1, 2, m1);
      link(2, 3, m1);
      link(3, 4, -half);
      break;
    case 'G':
      g[0][0] = Rational(2, 3);
      g[1][1] = 2;
      link(1, 2, m1);
      break;
    default: throw std::invalid_argument("unknown series");
  }
  return g;
}

}  // namespace detail

class RootSystem {
 public:
  static constexpr RootIndex kNotRoot = -1;
  static constexpr RootIndex kZero = -2;

  explicit RootSystem(LieType type) : type_(type) {
    LieType::validate(type.series, type.rank);
    build();
  }

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_pos_; }

  const Coords& coords(RootIndex i) const { return roots_.at(i); }
  bool is_positive(RootIndex i) const { return i < num_pos_; }
  RootIndex neg(RootIndex i) const { return i < num_pos_ ? i + num_pos_ : i - num_pos_; }
  /// Index of positive root i itself, or of -i for a negative root.
  RootIndex positive_part(RootIndex i) const { return i < num_pos_ ? i : i - num_pos_; }
  int height(RootIndex i) const { return height_[i]; }
  RootIndex simple(int k) const { return k; }  // simple roots are the first `rank` indices

  std::optional<RootIndex> find(const Coords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  RootIndex index_of(const Coords& c) const {
    auto r = find(c);
    if (!r) throw std::invalid_argument("not a root of " + type_.str() + ": " + coords_str(c));
    return *r;
  }
  bool contains(const Coords& c) const { return index_.count(c) > 0; }

  /// Index of a+b, kZero if a+b = 0, kNotRoot otherwise.
  RootIndex sum(RootIndex a, RootIndex b) const { return add_[a * size() + b]; }
  /// Index of a-b with the same conventions as sum().
  RootIndex diff(RootIndex a, RootIndex b) const { return sum(a, neg(b)); }

  /// Killing-form pairing (a,b)_B = B(H_a, H_b).
  Rational killing(RootIndex a, RootIndex b) const { return Rational(ip6_[a * size() + b]) * unit_; }
  Rational killing(const Coords& a, const Coords& b) const { return symmetrized(a, b) * killing_scale_; }
  /// The symmetrized form with long roots of squared length 2.
  Rational symmetrized(RootIndex a, RootIndex b) const { return Rational(ip6_[a * size() + b], 6); }
  Rational symmetrized(const Coords& a, const Coords& b) const {
    Rational acc(0);
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (a[i] && b[j]) acc += gram_[i][j] * a[i] * b[j];
    return acc;
  }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  /// Cartan integer <alpha_i, alpha_j^vee>.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const Rational& killing_scale() const { return killing_scale_; }
  int dual_coxeter() const { return dual_coxeter_; }
  RootIndex highest_root() const { return num_pos_ - 1; }
  const std::vector<int>& marks() const { return roots_[highest_root()]; }

  /// Alpha-string through beta: p = max{k : b - k a in R}, q = max{k : b + k a in R}.
  std::pair<int, int> root_string(RootIndex a, RootIndex b) const {
    if (b == a || b == neg(a)) throw std::invalid_argument("root string through a multiple of the root itself");
    int p = 0, q = 0;
    for (RootIndex x = diff(b, a); x >= 0; x = diff(x, a)) ++p;
    for (RootIndex x = sum(b, a); x >= 0; x = sum(x, a)) ++q;
    return {p, q};
  }

  bool has_mark_at_least(int k) const {
    return std::any_of(marks().begin(), marks().end(), [k](int m) { return m >= k; });
  }

  std::string root_str(RootIndex i) const { return coords_str(coords(i)); }
  static std::string coords_str(const Coords& c) {
    std::string s = "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
    return s + ")";
  }

  /// Coordinates in the basis lambda_1..lambda_n of the C_n weight lattice
  /// (simple roots lambda_i - lambda_{i+1} and 2 lambda_n). C-series only.
  std::vector<int> c_series_lambda_coords(RootIndex i) const {
    if (type_.series != 'C') throw std::logic_error("lambda coordinates only defined for C_n");
    const auto& c = coords(i);
    const int n = rank();
    std::vector<int> out(n, 0);
    for (int k = 0; k < n - 1; ++k) {
      out[k] += c[k];
      out[k + 1] -= c[k];
    }
    out[n - 1] += 2 * c[n - 1];
    return out;
  }
  /// Human-readable lambda label, e.g. "l1-l2", "2l1", "-l1-l3". C-series only.
  std::string c_series_label(RootIndex i) const {
    auto v = c_series_lambda_coords(i);
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      std::string mag = (std::abs(v[k]) == 1 ? "" : std::to_string(std::abs(v[k]))) + "l" + std::to_string(k + 1);
      if (v[k] < 0) s += "-" + mag;
      else s += (s.empty() ? "" : "+") + mag;
    }
    return s;
  }

 private:
  void build() {
    const int n = rank();
    gram_ = detail::simple_root_gram(type_);
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v = 2 * gram_[i][j] / gram_[j][j];
        if (!is_integer(v)) throw std::logic_error("non-integral Cartan entry");
        cartan_[i][j] = numer(v).convert_to<int>();
      }

    // positive roots by height; b + alpha_i is a root iff q > 0 where p - q = <b, alpha_i^vee>
    std::vector<Coords> positives;
    std::map<Coords, int> known;
    std::vector<Coords> layer;
    for (int i = 0; i < n; ++i) {
      Coords e(n, 0);
      e[i] = 1;
      layer.push_back(e);
    }
    while (!layer.empty()) {
      std::sort(layer.begin(), layer.end(), std::greater<>());
      for (const auto& r : layer) {
        known.emplace(r, 0);
        positives.push_back(r);
      }
      std::vector<Coords> next;
      for (const auto& b : layer) {
        for (int i = 0; i < n; ++i) {
          int p = 0;
          Coords x = b;
          while (true) {
            x[i] -= 1;
            if (!known.count(x)) break;
            ++p;
          }
          int pairing = 0;
          for (int j = 0; j < n; ++j) pairing += b[j] * cartan_[j][i];
          int q = p - pairing;
          if (q > 0) {
            Coords y = b;
            y[i] += 1;
            if (std::find(next.begin(), next.end(), y) == next.end()) next.push_back(y);
          }
        }
      }
      layer = std::move(next);
    }

    num_pos_ = static_cast<int>(positives.size());
    roots_ = positives;
    for (const auto& r : positives) {
      Coords m = r;
      for (int& v : m) v = -v;
      roots_.push_back(m);
    }
    for (int i = 0; i < size(); ++i) index_.emplace(roots_[i], i);
    height_.resize(size());
    for (int i = 0; i < size(); ++i) {
      int h = 0;
      for (int v : roots_[i]) h += v;
      height_[i] = h;
    }

    const int N = size();
    add_.assign(static_cast<std::size_t>(N) * N, kNotRoot);
    Coords s(n);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        bool zero = true;
        for (int k = 0; k < n; ++k) {
          s[k] = roots_[a][k] + roots_[b][k];
          zero = zero && s[k] == 0;
        }
        if (zero) add_[a * N + b] = kZero;
        else if (auto it = index_.find(s); it != index_.end()) add_[a * N + b] = it->second;
      }

    std::vector<std::vector<int>> gram6(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram6[i][j] = numer(Rational(gram_[i][j] * 6)).convert_to<int>();
    ip6_.assign(static_cast<std::size_t>(N) * N, 0);
    for (int a = 0; a < N; ++a)
      for (int b = a; b < N; ++b) {
        long acc = 0;
        for (int i = 0; i < n; ++i)
          if (roots_[a][i])
            for (int j = 0; j < n; ++j) acc += long(roots_[a][i]) * gram6[i][j] * roots_[b][j];
        ip6_[a * N + b] = ip6_[b * N + a] = static_cast<int>(acc);
      }

    // h^vee = 1 + (rho, theta) with theta the highest root, long roots of length 2
    Rational rho_theta(0);
    for (int a = 0; a < num_pos_; ++a) rho_theta += symmetrized(a, highest_root());
    rho_theta /= 2;
    Rational hv = rho_theta + 1;
    if (!is_integer(hv)) throw std::logic_error("non-integral dual Coxeter number");
    dual_coxeter_ = numer(hv).convert_to<int>();
    killing_scale_ = Rational(1, 2 * dual_coxeter_);
    unit_ = killing_scale_ / 6;
  }

  LieType type_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Coords> roots_;
  std::map<Coords, RootIndex> index_;
  std::vector<int> height_;
  std::vector<RootIndex> add_;
  std::vector<int> ip6_;
  int num_pos_ = 0;
  int dual_coxeter_ = 0;
  Rational killing_scale_;
  Rational unit_;
};

/// Number of roots of an irreducible system, from the classical formulas.
inline int classical_root_count(LieType t) {
  const int n = t.rank;
  switch (t.series) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace flagcurv
