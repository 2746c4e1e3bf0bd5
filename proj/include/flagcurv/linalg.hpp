#pragma once

// Small exact linear algebra over Q: row reduction, null spaces and a
// Phase-I simplex for feasibility of {A x = 0, x >= 1}.

#include "flagcurv/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace flagcurv {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(RationalMatrix& a, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[row], a[p]);
    Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

/// Basis of {x : A x = 0}, one vector per free column.
inline RationalMatrix null_space(RationalMatrix a, int cols) {
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with A x = 0 and every x_i >= 1, or nothing. Because the cone
/// {A x = 0, x > 0} is invariant under positive scaling this decides whether
/// it is empty. Phase-I simplex with Bland's rule, exact.
inline std::optional<RationalVector> positive_solution(const RationalMatrix& a, int cols) {
  // substitute x = 1 + mu, mu >= 0: A mu = -A 1
  RationalMatrix eq = a;
  rref(eq, cols);
  const int m = static_cast<int>(eq.size());
  if (m == 0) return RationalVector(cols, Rational(1));
  RationalVector rhs(m, Rational(0));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < cols; ++c) rhs[r] -= eq[r][c];
    if (rhs[r] < 0) {
      for (auto& v : eq[r]) v = -v;
      rhs[r] = -rhs[r];
    }
  }
  // tableau columns: mu (cols) then artificials (m)
  const int n = cols + m;
  RationalMatrix t(m, RationalVector(n, Rational(0)));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < cols; ++c) t[r][c] = eq[r][c];
    t[r][cols + r] = 1;
  }
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = cols + r;
  // reduced cost of minimizing the sum of artificials
  auto reduced = [&](int j) {
    Rational d = j >= cols ? Rational(1) : Rational(0);
    for (int r = 0; r < m; ++r)
      if (basis[r] >= cols) d -= t[r][j];
    return d;
  };
  for (int iter = 0; iter < 10000; ++iter) {
    int enter = -1;
    for (int j = 0; j < n; ++j)
      if (reduced(j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = rhs[r] / t[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-I simplex unbounded");
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    rhs[leave] /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (int k = 0; k < n; ++k) t[r][k] -= f * t[leave][k];
      rhs[r] -= f * rhs[leave];
    }
    basis[leave] = enter;
  }
  RationalVector x(cols, Rational(1));
  for (int r = 0; r < m; ++r) {
    if (basis[r] >= cols) {
      if (rhs[r] != 0) return std::nullopt;
      continue;
    }
    x[basis[r]] += rhs[r];
  }
  return x;
}

}  // namespace flagcurv
