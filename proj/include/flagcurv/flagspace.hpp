#pragma once

// Flag manifolds G/K from a painted set of simple roots, their isotropy
// summands, invariant almost-complex structures and invariant metrics.

#include "flagcurv/linalg.hpp"
#include "flagcurv/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace flagcurv {

class FlagManifold {
 public:
  /// painted holds 0-based simple-root indices of Pi_K.
  FlagManifold(std::shared_ptr<const RootSystem> rs, std::vector<int> painted)
      : rs_(std::move(rs)), painted_(std::move(painted)) {
    std::sort(painted_.begin(), painted_.end());
    painted_.erase(std::unique(painted_.begin(), painted_.end()), painted_.end());
    for (int k : painted_)
      if (k < 0 || k >= rs_->rank()) throw std::invalid_argument("painted index out of range");
    build();
  }

  /// "C4 k=2,3,4" (1-based); a bare "A3" or "A3 k=" is the maximal flag.
  static FlagManifold parse(const std::string& text) {
    std::istringstream in(text);
    std::string type, rest;
    in >> type;
    std::getline(in, rest);
    auto rs = std::make_shared<const RootSystem>(LieType::parse(type));
    std::vector<int> painted;
    auto pos = rest.find("k=");
    if (pos != std::string::npos) {
      std::string list = rest.substr(pos + 2);
      std::stringstream ls(list);
      std::string item;
      while (std::getline(ls, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        int k = 0;
        try {
          k = std::stoi(item);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad painted index '" + item + "'");
        }
        if (k < 1 || k > rs->rank()) throw std::invalid_argument("painted index " + item + " out of range for " + type);
        painted.push_back(k - 1);
      }
    } else if (rest.find_first_not_of(" \t") != std::string::npos) {
      throw std::invalid_argument("flag must look like 'C4 k=2,3,4'");
    }
    return FlagManifold(rs, painted);
  }

  std::string str() const {
    std::string out = rs_->type().str();
    if (!painted_.empty()) out += " k=";
    for (std::size_t i = 0; i < painted_.size(); ++i) out += (i ? "," : "") + std::to_string(painted_[i] + 1);
    return out;
  }

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  const std::vector<int>& painted() const { return painted_; }
  std::vector<int> unpainted() const {
    std::vector<int> out;
    for (int k = 0; k < rs_->rank(); ++k)
      if (!std::binary_search(painted_.begin(), painted_.end(), k)) out.push_back(k);
    return out;
  }
  bool is_maximal() const { return painted_.empty(); }

  bool in_k(RootIndex a) const { return summand_[a] < 0; }
  bool in_m(RootIndex a) const { return a >= 0 && summand_[a] >= 0; }
  /// Summand index of a root of R_M (shared by a and -a); -1 on R_K.
  int summand_of(RootIndex a) const { return summand_[a]; }
  int num_summands() const { return static_cast<int>(summands_.size()); }
  /// Lie-positive roots of each summand, canonical order.
  const std::vector<std::vector<RootIndex>>& summands() const { return summands_; }
  /// Lie-positive roots of R_M in canonical order.
  const std::vector<RootIndex>& m_positive() const { return m_positive_; }
  int dim_m() const { return static_cast<int>(m_positive_.size()); }

 private:
  void build() {
    const RootSystem& rs = *rs_;
    auto free = unpainted();
    summand_.assign(rs.size(), -1);
    std::map<Coords, int> by_grade;
    for (int a = 0; a < rs.num_positive(); ++a) {
      Coords grade;
      for (int k : free) grade.push_back(rs.coords(a)[k]);
      if (std::all_of(grade.begin(), grade.end(), [](int c) { return c == 0; })) continue;
      auto [it, fresh] = by_grade.try_emplace(grade, static_cast<int>(summands_.size()));
      if (fresh) summands_.emplace_back();
      summands_[it->second].push_back(a);
      summand_[a] = summand_[rs.neg(a)] = it->second;
      m_positive_.push_back(a);
    }
  }

  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> painted_;
  std::vector<int> summand_;
  std::vector<std::vector<RootIndex>> summands_;
  std::vector<RootIndex> m_positive_;
};

/// Sign per summand; the first is +1 in canonical form.
struct AlmostComplexStructure {
  std::vector<int> signs;

  static AlmostComplexStructure parse(const std::string& text) {
    AlmostComplexStructure j;
    for (char c : text) {
      if (c == '+') j.signs.push_back(1);
      else if (c == '-') j.signs.push_back(-1);
      else if (c != ' ' && c != ',' && c != '(' && c != ')') throw std::invalid_argument("bad sign string '" + text + "'");
    }
    if (j.signs.empty()) throw std::invalid_argument("empty sign string");
    return j;
  }
  std::string str() const {
    std::string s;
    for (int v : signs) s += v > 0 ? '+' : '-';
    return s;
  }
  /// epsilon of a root of R_M.
  int eps(const FlagManifold& fm, RootIndex a) const {
    int s = signs.at(fm.summand_of(a));
    return fm.roots().is_positive(a) ? s : -s;
  }
  friend bool operator==(const AlmostComplexStructure&, const AlmostComplexStructure&) = default;
};

struct InvariantMetric {
  std::vector<Rational> weights;

  static InvariantMetric parse(const std::string& text) {
    InvariantMetric g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Rational v = parse_rational(item);
      if (v <= 0) throw std::invalid_argument("metric weights must be positive");
      g.weights.push_back(v);
    }
    if (g.weights.empty()) throw std::invalid_argument("empty metric");
    return g;
  }
  static InvariantMetric constant(int k, const Rational& v = Rational(1)) { return {std::vector<Rational>(k, v)}; }
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + to_string(weights[i]);
    return s;
  }
  const Rational& lambda(const FlagManifold& fm, RootIndex a) const { return weights.at(fm.summand_of(a)); }
};

inline void check_shape(const FlagManifold& fm, const AlmostComplexStructure& j) {
  if (static_cast<int>(j.signs.size()) != fm.num_summands())
    throw std::invalid_argument("almost-complex structure has " + std::to_string(j.signs.size()) + " signs, flag has " +
                                std::to_string(fm.num_summands()) + " summands");
}
inline void check_shape(const FlagManifold& fm, const InvariantMetric& g) {
  if (static_cast<int>(g.weights.size()) != fm.num_summands())
    throw std::invalid_argument("metric has " + std::to_string(g.weights.size()) + " weights, flag has " +
                                std::to_string(fm.num_summands()) + " summands");
}

/// All 2^(k-1) structures with first sign +; later summands vary fastest.
inline std::vector<AlmostComplexStructure> enumerate_acs(const FlagManifold& fm) {
  const int k = fm.num_summands();
  std::vector<AlmostComplexStructure> out;
  if (k == 0) return out;
  if (k > 31) throw std::length_error("too many summands to enumerate");
  const std::uint32_t count = 1u << (k - 1);
  for (std::uint32_t code = 0; code < count; ++code) {
    AlmostComplexStructure j;
    j.signs.assign(k, 1);
    for (int i = 1; i < k; ++i)
      if (code >> (k - 1 - i) & 1u) j.signs[i] = -1;
    out.push_back(std::move(j));
  }
  return out;
}

/// R_M^+ : roots of R_M with epsilon = +1, ordered by their positive part.
inline std::vector<RootIndex> rm_plus(const FlagManifold& fm, const AlmostComplexStructure& j) {
  check_shape(fm, j);
  std::vector<RootIndex> out;
  for (RootIndex a : fm.m_positive()) out.push_back(j.eps(fm, a) > 0 ? a : fm.roots().neg(a));
  return out;
}

inline bool is_integrable(const FlagManifold& fm, const AlmostComplexStructure& j) {
  auto plus = rm_plus(fm, j);
  const RootSystem& rs = fm.roots();
  for (RootIndex a : plus)
    for (RootIndex b : plus) {
      RootIndex s = rs.sum(a, b);
      if (s >= 0 && fm.in_m(s) && j.eps(fm, s) < 0) return false;
    }
  return true;
}

/// Linear relations among summand weights, rows over the k summand variables.
/// Kahler: eps_a l_a + eps_b l_b = eps_{a+b} l_{a+b} for a, b, a+b in R_M.
inline RationalMatrix kahler_relations(const FlagManifold& fm, const AlmostComplexStructure& j) {
  check_shape(fm, j);
  const RootSystem& rs = fm.roots();
  const int k = fm.num_summands();
  RationalMatrix rows;
  for (int a = 0; a < rs.size(); ++a) {
    if (!fm.in_m(a)) continue;
    for (int b = 0; b < rs.size(); ++b) {
      RootIndex s = rs.sum(a, b);
      if (!fm.in_m(b) || s < 0 || !fm.in_m(s)) continue;
      RationalVector row(k, Rational(0));
      row[fm.summand_of(a)] += j.eps(fm, a);
      row[fm.summand_of(b)] += j.eps(fm, b);
      row[fm.summand_of(s)] -= j.eps(fm, s);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Quasi-Kahler: l_a + l_b = l_{a+b} for a, b, a+b in R_M^+.
inline RationalMatrix quasi_kahler_relations(const FlagManifold& fm, const AlmostComplexStructure& j) {
  const RootSystem& rs = fm.roots();
  const int k = fm.num_summands();
  auto plus = rm_plus(fm, j);
  RationalMatrix rows;
  for (RootIndex a : plus)
    for (RootIndex b : plus) {
      RootIndex s = rs.sum(a, b);
      if (s < 0 || !fm.in_m(s) || j.eps(fm, s) < 0) continue;
      RationalVector row(k, Rational(0));
      row[fm.summand_of(a)] += 1;
      row[fm.summand_of(b)] += 1;
      row[fm.summand_of(s)] -= 1;
      rows.push_back(std::move(row));
    }
  return rows;
}

/// {l > 0 : A l = 0} described by a null-space basis plus a feasibility witness.
class MetricCone {
 public:
  MetricCone() = default;
  MetricCone(RationalMatrix relations, int k) : k_(k) {
    rows_ = std::move(relations);
    rref(rows_, k_);
    basis_ = null_space(rows_, k_);
    witness_ = positive_solution(rows_, k_);
  }
  static MetricCone empty_cone(int k) {
    MetricCone c;
    c.k_ = k;
    c.forced_empty_ = true;
    return c;
  }

  bool empty() const { return forced_empty_ || !witness_.has_value(); }
  int ambient_dimension() const { return k_; }
  int dimension() const { return empty() ? 0 : static_cast<int>(basis_.size()); }
  const RationalMatrix& relations() const { return rows_; }
  const RationalMatrix& basis() const { return basis_; }
  const std::optional<RationalVector>& witness() const { return witness_; }

  bool contains(const InvariantMetric& g) const {
    if (forced_empty_) return false;
    for (const auto& w : g.weights)
      if (w <= 0) return false;
    for (const auto& row : rows_) {
      Rational acc(0);
      for (int i = 0; i < k_; ++i) acc += row[i] * g.weights[i];
      if (acc != 0) return false;
    }
    return true;
  }
  /// True when the cone is exactly the open ray through v.
  bool is_ray_through(const RationalVector& v) const {
    return !empty() && dimension() == 1 && contains(InvariantMetric{v});
  }
  /// Two nonempty cones of this form agree iff their null spaces agree.
  friend bool operator==(const MetricCone& a, const MetricCone& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    return a.rows_ == b.rows_;
  }

  std::string str() const {
    if (empty()) return "empty";
    std::string out = "dim " + std::to_string(dimension()) + " span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      out += i ? "; (" : "(";
      // print each generator as a primitive integer vector
      BigInt den = 1, num = 0;
      for (const auto& v : basis_[i]) den = boost::multiprecision::lcm(den, denom(v));
      for (const auto& v : basis_[i]) num = boost::multiprecision::gcd(num, BigInt(numer(v) * (den / denom(v))));
      for (int c = 0; c < k_; ++c) out += (c ? "," : "") + to_string(basis_[i][c] * Rational(den) / Rational(num == 0 ? 1 : num));
      out += ")";
    }
    return out + "} with all weights > 0";
  }

 private:
  int k_ = 0;
  bool forced_empty_ = false;
  RationalMatrix rows_;
  RationalMatrix basis_;
  std::optional<RationalVector> witness_;
};

inline MetricCone kahler_metrics(const FlagManifold& fm, const AlmostComplexStructure& j) {
  if (!is_integrable(fm, j)) return MetricCone::empty_cone(fm.num_summands());
  return MetricCone(kahler_relations(fm, j), fm.num_summands());
}

inline MetricCone quasi_kahler_metrics(const FlagManifold& fm, const AlmostComplexStructure& j) {
  return MetricCone(quasi_kahler_relations(fm, j), fm.num_summands());
}

/// Closedness of the fundamental form: quasi-Kahler relations together with
/// the Kahler relations on every triple a + b = c in R_M. A relation that
/// forces a sum of positive weights to vanish leaves the cone empty.
inline MetricCone almost_kahler_metrics(const FlagManifold& fm, const AlmostComplexStructure& j) {
  RationalMatrix rows = quasi_kahler_relations(fm, j);
  for (auto& r : kahler_relations(fm, j)) rows.push_back(std::move(r));
  return MetricCone(std::move(rows), fm.num_summands());
}

inline bool is_kahler(const FlagManifold& fm, const AlmostComplexStructure& j, const InvariantMetric& g) {
  check_shape(fm, g);
  return is_integrable(fm, j) && MetricCone(kahler_relations(fm, j), fm.num_summands()).contains(g);
}

inline bool is_quasi_kahler(const FlagManifold& fm, const AlmostComplexStructure& j, const InvariantMetric& g) {
  check_shape(fm, g);
  for (const auto& row : quasi_kahler_relations(fm, j)) {
    Rational acc(0);
    for (int i = 0; i < fm.num_summands(); ++i) acc += row[i] * g.weights[i];
    if (acc != 0) return false;
  }
  return true;
}

/// No a, b in R_M with a + b in R_M, i.e. the constant metric is Kahler for
/// every invariant complex structure.
inline bool lambda_one_is_kahler(const FlagManifold& fm) {
  const RootSystem& rs = fm.roots();
  for (int a = 0; a < rs.size(); ++a) {
    if (!fm.in_m(a)) continue;
    for (int b = 0; b < rs.size(); ++b) {
      RootIndex s = rs.sum(a, b);
      if (fm.in_m(b) && s >= 0 && fm.in_m(s)) return false;
    }
  }
  return true;
}

}  // namespace flagcurv
