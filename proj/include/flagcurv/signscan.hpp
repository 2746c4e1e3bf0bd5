#pragma once

// Bitmask scans over invariant almost-complex structures. Integrability and
// the existence of a lemma certificate only depend on sign relations between
// summands, so both reduce to precomputed summand-level constraints.

#include "flagcurv/flagspace.hpp"

#include <cstdint>
#include <set>
#include <tuple>

namespace flagcurv {

/// Bit x of a sign mask is set when summand x carries +.
using SignMask = std::uint64_t;

inline SignMask to_mask(const AlmostComplexStructure& j) {
  SignMask m = 0;
  for (std::size_t x = 0; x < j.signs.size(); ++x)
    if (j.signs[x] > 0) m |= SignMask{1} << x;
  return m;
}

inline AlmostComplexStructure from_mask(SignMask m, int k) {
  AlmostComplexStructure j;
  for (int x = 0; x < k; ++x) j.signs.push_back((m >> x & 1) ? 1 : -1);
  return j;
}

class SignPatternIndex {
 public:
  explicit SignPatternIndex(const FlagManifold& fm) : k_(fm.num_summands()) {
    if (k_ > 63) throw std::length_error("too many summands for a sign mask");
    const RootSystem& rs = fm.roots();
    same_.assign(k_, 0);
    opposite_.assign(k_, 0);
    std::set<std::tuple<int, int, int, int>> rules;
    for (RootIndex p : fm.m_positive())
      for (RootIndex q : fm.m_positive()) {
        const int x = fm.summand_of(p), y = fm.summand_of(q);
        RootIndex s = rs.sum(p, q), d = rs.diff(p, q);
        // R_M^+ representatives with equal signs add to +-(p+q), opposite signs to +-(p-q)
        if (s >= 0 && fm.in_m(s)) {
          rules.insert({kSameSign, x, y, fm.summand_of(s)});
          if (p != q && d == RootSystem::kNotRoot) same_[x] |= SignMask{1} << y;
        }
        if (p != q && d >= 0 && fm.in_m(d)) {
          rules.insert({rs.is_positive(d) ? kOppositeFlip : kOppositeKeep, x, y, fm.summand_of(d)});
          if (s == RootSystem::kNotRoot) opposite_[x] |= SignMask{1} << y;
        }
      }
    rules_.assign(rules.begin(), rules.end());
  }

  int num_summands() const { return k_; }
  /// Number of canonical structures (first sign +).
  std::uint64_t count() const { return k_ == 0 ? 0 : std::uint64_t{1} << (k_ - 1); }
  /// The i-th canonical structure in enumerate_acs order.
  SignMask nth(std::uint64_t i) const {
    SignMask m = 1;
    for (int x = 1; x < k_; ++x)
      if (!(i >> (k_ - 1 - x) & 1)) m |= SignMask{1} << x;
    return m;
  }

  bool integrable(SignMask m) const {
    for (const auto& [kind, x, y, z] : rules_) {
      const bool sx = m >> x & 1, sy = m >> y & 1, sz = m >> z & 1;
      switch (kind) {
        case kSameSign:
          if (sx == sy && sz != sx) return false;
          break;
        case kOppositeFlip:
          if (sx != sy && sz != sx) return false;
          break;
        case kOppositeKeep:
          if (sx != sy && sz == sx) return false;
          break;
      }
    }
    return true;
  }

  bool has_certificate(SignMask m) const {
    const SignMask full = k_ == 64 ? ~SignMask{0} : (SignMask{1} << k_) - 1;
    for (int x = 0; x < k_; ++x) {
      const SignMask agree = (m >> x & 1) ? m : (~m & full);
      if (same_[x] & agree) return true;
      if (opposite_[x] & ~agree & full) return true;
    }
    return false;
  }

 private:
  // a, b in R_M^+ with a + b in R_M^-:
  //   equal signs on p, q and the summand of p+q carries the other sign;
  //   opposite signs and p-q positive with sign differing from p's summand;
  //   opposite signs and p-q negative with sign equal to p's summand.
  enum Kind { kSameSign, kOppositeFlip, kOppositeKeep };

  int k_;
  std::vector<SignMask> same_, opposite_;
  std::vector<std::tuple<int, int, int, int>> rules_;
};

}  // namespace flagcurv
