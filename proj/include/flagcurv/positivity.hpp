#pragma once

// Griffiths, Nakano and dual-Nakano positivity of the Chern curvature.

#include "flagcurv/curvature.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace flagcurv {

// ---------------------------------------------------------------------------
// Hermitian forms and PSD checks

/// Real symmetric matrix with exact entries (the curvature is real in the
/// root-vector basis, so Hermitian means symmetric here).
using SurdMatrix = std::vector<std::vector<Surd>>;

struct PsdResult {
  bool is_psd = false;
  bool is_pd = false;
  double min_eig = 0;
  bool exact = false;  // decided by exact elimination rather than floating point
  /// Direction with negative value when not PSD, kernel direction when PSD but singular.
  std::optional<std::vector<double>> witness;
  std::optional<RationalVector> exact_witness;
  /// Exact value of the form on exact_witness.
  std::optional<Rational> witness_value;
};

enum class PsdMode { ExactIfRational, Float };

namespace detail {

inline Eigen::MatrixXd to_eigen(const SurdMatrix& h) {
  const int n = static_cast<int>(h.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = h[i][j].to_double();
  return m;
}

inline double inf_norm(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Symmetric elimination over Q. Tracks, for each unreduced index r, a vector
/// w_r with S[r][s] = w_r^T A w_s so that failures yield exact witnesses.
inline PsdResult exact_psd(const RationalMatrix& a) {
  const int n = static_cast<int>(a.size());
  RationalMatrix s = a;
  RationalMatrix w(n, RationalVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  std::vector<bool> done(n, false);
  PsdResult out;
  out.exact = true;
  auto fail = [&](RationalVector v, Rational value) {
    out.is_psd = out.is_pd = false;
    out.exact_witness = std::move(v);
    out.witness_value = std::move(value);
    return out;
  };
  for (int step = 0; step < n; ++step) {
    int pivot = -1;
    for (int r = 0; r < n; ++r) {
      if (done[r]) continue;
      if (s[r][r] < 0) return fail(w[r], s[r][r]);
      if (pivot < 0 && s[r][r] > 0) pivot = r;
    }
    if (pivot < 0) {
      // every remaining diagonal is zero; any off-diagonal entry is fatal
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
          if (done[r] || done[c] || s[r][c] == 0) continue;
          RationalVector v = w[r];
          int sg = s[r][c] > 0 ? -1 : 1;
          for (int k = 0; k < n; ++k) v[k] += sg * w[c][k];
          return fail(std::move(v), 2 * sg * s[r][c]);
        }
      out.is_psd = true;
      out.is_pd = false;
      for (int r = 0; r < n; ++r)
        if (!done[r]) {
          out.exact_witness = w[r];
          out.witness_value = Rational(0);
          break;
        }
      return out;
    }
    done[pivot] = true;
    const Rational d = s[pivot][pivot];
    for (int r = 0; r < n; ++r) {
      if (done[r] || s[r][pivot] == 0) continue;
      Rational f = s[r][pivot] / d;
      for (int c = 0; c < n; ++c)
        if (!done[c]) s[r][c] -= f * s[pivot][c];
      for (int k = 0; k < n; ++k) w[r][k] -= f * w[pivot][k];
    }
  }
  out.is_psd = out.is_pd = true;
  return out;
}

}  // namespace detail

/// PSD / PD decision. Exact elimination is used whenever every entry is
/// rational and the mode allows it; the minimum eigenvalue is always reported
/// from a floating-point eigensolve.
inline PsdResult check_psd(const SurdMatrix& h, PsdMode mode = PsdMode::ExactIfRational) {
  const int n = static_cast<int>(h.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(h[i][j] == h[j][i])) throw std::logic_error("matrix is not Hermitian");
  Eigen::MatrixXd m = detail::to_eigen(h);
  PsdResult out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  if (n > 0) {
    es.compute(m);
    out.min_eig = es.eigenvalues()(0);
  }
  bool rational = true;
  for (const auto& row : h)
    for (const auto& v : row) rational = rational && v.is_rational();
  if (mode == PsdMode::ExactIfRational && rational) {
    RationalMatrix q(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q[i][j] = h[i][j].rational_value();
    PsdResult ex = detail::exact_psd(q);
    ex.min_eig = out.min_eig;
    if (ex.exact_witness) {
      std::vector<double> v;
      for (const auto& x : *ex.exact_witness) v.push_back(to_double(x));
      ex.witness = std::move(v);
    }
    return ex;
  }
  const double tol = 1e-9 * std::max(1.0, detail::inf_norm(m));
  out.exact = false;
  out.is_psd = n == 0 || out.min_eig >= -tol;
  out.is_pd = n == 0 || out.min_eig > tol;
  if (n > 0 && !out.is_pd) {
    Eigen::VectorXd v = es.eigenvectors().col(0);
    out.witness = std::vector<double>(v.data(), v.data() + n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Curvature matrices over R_M^+

/// Nonzero R_{i jbar k lbar} with i, j, k, l in R_M^+, indexed by position in rm_plus.
class HermitianCurvature {
 public:
  struct Term {
    int i, j, k, l;
    Surd value;
    double approx;
  };

  explicit HermitianCurvature(const CurvatureEngine& eng) : plus_(rm_plus(eng.flag(), eng.acs())) {
    const RootSystem& rs = eng.flag().roots();
    const int n = static_cast<int>(plus_.size());
    std::vector<int> pos(rs.size(), -1);
    for (int p = 0; p < n; ++p) pos[plus_[p]] = p;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          RootIndex e = detail::triple_sum(rs, plus_[i], rs.neg(plus_[j]), plus_[k]);
          if (e < 0 || pos[e] < 0) continue;
          Surd v = eng.hermitian_entry(plus_[i], plus_[j], plus_[k], e);
          if (v.is_zero()) continue;
          double d = v.to_double();
          terms_.push_back({i, j, k, pos[e], std::move(v), d});
        }
    for (const auto& t : terms_) scale_ = std::max(scale_, std::abs(t.approx));
  }

  const std::vector<RootIndex>& basis() const { return plus_; }
  int dim() const { return static_cast<int>(plus_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  double scale() const { return scale_; }

  Surd at(int i, int j, int k, int l) const {
    for (const auto& t : terms_)
      if (t.i == i && t.j == j && t.k == k && t.l == l) return t.value;
    return {};
  }

 private:
  std::vector<RootIndex> plus_;
  std::vector<Term> terms_;
  double scale_ = 0;
};

/// Rows (i,l), columns (j,k), entry R_{i jbar k lbar}; the quadratic form is
/// sum R_{i jbar k lbar} u^{il} conj(u^{jk}).
inline SurdMatrix dual_nakano_matrix(const HermitianCurvature& r) {
  const int n = r.dim();
  SurdMatrix m(n * n, std::vector<Surd>(n * n));
  for (const auto& t : r.terms()) m[t.i * n + t.l][t.j * n + t.k] += t.value;
  return m;
}

/// Rows (i,k), columns (j,l), entry R_{i jbar k lbar}.
inline SurdMatrix nakano_matrix(const HermitianCurvature& r) {
  const int n = r.dim();
  SurdMatrix m(n * n, std::vector<Surd>(n * n));
  for (const auto& t : r.terms()) m[t.i * n + t.k][t.j * n + t.l] += t.value;
  return m;
}

using ComplexVector = std::vector<std::complex<double>>;

/// sum R_{a bbar c dbar} u^a conj(u^b) v^c conj(v^d) over R_M^+ coordinates.
inline double griffiths_form(const HermitianCurvature& r, const ComplexVector& u, const ComplexVector& v) {
  std::complex<double> acc = 0;
  for (const auto& t : r.terms()) acc += t.approx * u[t.i] * std::conj(u[t.j]) * v[t.k] * std::conj(v[t.l]);
  return acc.real();
}

/// Exact evaluation for real rational directions.
inline Surd griffiths_form_exact(const HermitianCurvature& r, const RationalVector& u, const RationalVector& v) {
  Surd acc;
  for (const auto& t : r.terms()) {
    Rational c = u[t.i] * u[t.j] * v[t.k] * v[t.l];
    if (c != 0) acc += t.value * c;
  }
  return acc;
}

struct GriffithsWitness {
  ComplexVector u, v;
  double value = 0;
  std::optional<Surd> exact_value;
  std::optional<std::pair<RootIndex, RootIndex>> basis_pair;  // (alpha, gamma) for basis directions
};

/// Basis pairs exactly, then `samples` random complex rank-one directions.
/// Returns the most negative value below -tolerance, if any.
inline std::optional<GriffithsWitness> griffiths_falsify(const HermitianCurvature& r, int samples, std::uint64_t seed) {
  const int n = r.dim();
  const double tol = 1e-9 * std::max(1.0, r.scale());
  std::optional<GriffithsWitness> best;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      Surd v = r.at(a, a, c, c);
      if (v.sign() >= 0) continue;
      double d = v.to_double();
      if (!best || d < best->value) {
        GriffithsWitness w;
        w.u.assign(n, 0);
        w.v.assign(n, 0);
        w.u[a] = 1;
        w.v[c] = 1;
        w.value = d;
        w.exact_value = v;
        w.basis_pair = std::make_pair(r.basis()[a], r.basis()[c]);
        best = std::move(w);
      }
    }
  if (best) return best;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    ComplexVector u(n), v(n);
    double nu = 0, nv = 0;
    for (int i = 0; i < n; ++i) {
      u[i] = {gauss(rng), gauss(rng)};
      v[i] = {gauss(rng), gauss(rng)};
      nu += std::norm(u[i]);
      nv += std::norm(v[i]);
    }
    for (int i = 0; i < n; ++i) {
      u[i] /= std::sqrt(nu);
      v[i] /= std::sqrt(nv);
    }
    double val = griffiths_form(r, u, v);
    if (val < -tol && (!best || val < best->value)) best = GriffithsWitness{u, v, val, std::nullopt, std::nullopt};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Lemma certificates

struct LemmaCertificate {
  RootIndex alpha;
  RootIndex gamma;
};

/// alpha, gamma in R_M^+, alpha + gamma in R_M, alpha - gamma not a root.
inline bool is_valid_certificate(const FlagManifold& fm, const AlmostComplexStructure& j, RootIndex alpha, RootIndex gamma) {
  const RootSystem& rs = fm.roots();
  if (!fm.in_m(alpha) || !fm.in_m(gamma)) return false;
  if (j.eps(fm, alpha) < 0 || j.eps(fm, gamma) < 0) return false;
  RootIndex s = rs.sum(alpha, gamma);
  if (s < 0 || !fm.in_m(s)) return false;
  return rs.diff(alpha, gamma) == RootSystem::kNotRoot;
}

/// First pair in the order of rm_plus.
inline std::optional<LemmaCertificate> lemma_certificate(const FlagManifold& fm, const AlmostComplexStructure& j) {
  auto plus = rm_plus(fm, j);
  for (RootIndex a : plus)
    for (RootIndex c : plus)
      if (is_valid_certificate(fm, j, a, c)) return LemmaCertificate{a, c};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The projective-space family Sp(n)/Sp(n-1) x U(1)

/// (2n-1)x(2n-1) matrix of R_{a gbar g abar} in the order
/// (l1-l2, l1+l2, ..., l1-ln, l1+ln, 2l1), global factor 1/(2(n+1)) included.
inline RationalMatrix build_cpn_matrix(int n, const Rational& t) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (t <= 0) throw std::invalid_argument("t must be positive");
  const int size = 2 * n - 1;
  const Rational f = make_rational(1, 2 * (n + 1));
  RationalMatrix m(size, RationalVector(size, f / 2));
  for (int b = 0; b + 1 < size; b += 2) {
    m[b][b] = m[b + 1][b + 1] = f;
    m[b][b + 1] = m[b + 1][b] = f * (1 - 1 / t);
  }
  for (int i = 0; i + 1 < size; ++i) m[i][size - 1] = m[size - 1][i] = f;
  m[size - 1][size - 1] = f * 2 * t;
  return m;
}

/// Root order used by build_cpn_matrix for the flag C_n, painted {2..n}.
inline std::vector<RootIndex> cpn_root_order(const RootSystem& rs) {
  const int n = rs.rank();
  auto find = [&](const std::string& label) {
    for (int i = 0; i < rs.num_positive(); ++i)
      if (rs.c_series_label(i) == label) return i;
    throw std::logic_error("missing root " + label);
  };
  std::vector<RootIndex> out;
  for (int j = 2; j <= n; ++j) {
    out.push_back(find("l1-l" + std::to_string(j)));
    out.push_back(find("l1+l" + std::to_string(j)));
  }
  out.push_back(find("2l1"));
  return out;
}

inline FlagManifold projective_flag(int n) {
  std::vector<int> painted;
  for (int k = 1; k < n; ++k) painted.push_back(k);
  return FlagManifold(std::make_shared<const RootSystem>(LieType::make('C', n)), painted);
}

/// Diagonal-pair block {(a,a)} of the dual-Nakano matrix, rows in `order`.
inline RationalMatrix diagonal_pair_block(const HermitianCurvature& r, const std::vector<RootIndex>& order) {
  const int n = r.dim();
  std::vector<int> pos;
  for (RootIndex a : order) {
    auto it = std::find(r.basis().begin(), r.basis().end(), a);
    if (it == r.basis().end()) throw std::invalid_argument("root outside R_M^+");
    pos.push_back(static_cast<int>(it - r.basis().begin()));
  }
  SurdMatrix dn = dual_nakano_matrix(r);
  const int k = static_cast<int>(order.size());
  RationalMatrix out(k, RationalVector(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) out[x][y] = dn[pos[x] * n + pos[x]][pos[y] * n + pos[y]].rational_value();
  return out;
}

inline SurdMatrix to_surd(const RationalMatrix& m) {
  SurdMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& v : m[i]) out[i].push_back(Surd(v));
  return out;
}

// ---------------------------------------------------------------------------
// Classification

enum class VerdictKind {
  DualNakanoPositive,
  DualNakanoSemipositive,
  NakanoPositive,
  NakanoSemipositive,
  GriffithsViolated,
  GriffithsSampledNonnegative,
  Indeterminate,
};

inline const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::DualNakanoPositive: return "DUAL_NAKANO_POSITIVE";
    case VerdictKind::DualNakanoSemipositive: return "DUAL_NAKANO_SEMIPOSITIVE";
    case VerdictKind::NakanoPositive: return "NAKANO_POSITIVE";
    case VerdictKind::NakanoSemipositive: return "NAKANO_SEMIPOSITIVE";
    case VerdictKind::GriffithsViolated: return "GRIFFITHS_VIOLATED";
    case VerdictKind::GriffithsSampledNonnegative: return "GRIFFITHS_SAMPLED_NONNEGATIVE";
    case VerdictKind::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

struct ClassifyOptions {
  int samples = 10000;
  std::uint64_t seed = 20240601;
  bool nakano = true;
};

struct PositivityVerdict {
  VerdictKind kind = VerdictKind::Indeterminate;
  std::optional<GriffithsWitness> witness;
  std::optional<LemmaCertificate> certificate;
  std::optional<double> min_eig;           // dual-Nakano matrix
  std::optional<double> nakano_min_eig;
  bool quasi_kahler = false;
  bool exact = true;                       // every decision exact
  bool curvature_rational = true;
  std::vector<std::string> notes;
};

inline PositivityVerdict classify(const ChevalleyTable& ct, const FlagManifold& fm, const AlmostComplexStructure& j,
                                  const InvariantMetric& g, const ClassifyOptions& opts = {}) {
  CurvatureEngine eng(ct, fm, j, g);
  HermitianCurvature r(eng);
  const RootSystem& rs = fm.roots();
  PositivityVerdict out;
  for (const auto& t : r.terms()) out.curvature_rational = out.curvature_rational && t.value.is_rational();

  // (1) exact diagonal scan, cross-checked against the closed form
  const int n = r.dim();
  std::optional<GriffithsWitness> diag;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      RootIndex ra = r.basis()[a], rc = r.basis()[c];
      Rational v = curvature_diag_oracle(eng, ra, rc).first;
      if (!(Surd(v) == eng.entry(ra, rs.neg(ra), rc, rs.neg(rc))))
        throw std::logic_error("curvature engine disagrees with closed form");
      if (v < 0 && (!diag || to_double(v) < diag->value)) {
        GriffithsWitness w;
        w.u.assign(n, 0);
        w.v.assign(n, 0);
        w.u[a] = 1;
        w.v[c] = 1;
        w.value = to_double(v);
        w.exact_value = Surd(v);
        w.basis_pair = std::make_pair(ra, rc);
        diag = std::move(w);
      }
    }

  // (2) lemma certificate on quasi-Kahler metrics
  out.quasi_kahler = is_quasi_kahler(fm, j, g);
  if (out.quasi_kahler) out.certificate = lemma_certificate(fm, j);
  if (out.certificate && !diag) throw std::logic_error("lemma certificate without negative diagonal");

  if (diag) {
    out.kind = VerdictKind::GriffithsViolated;
    out.witness = std::move(diag);
    return out;
  }

  // (3) matrix criteria
  PsdResult dn = check_psd(dual_nakano_matrix(r));
  out.min_eig = dn.min_eig;
  out.exact = out.exact && dn.exact;
  std::optional<PsdResult> nk;
  if (opts.nakano) {
    nk = check_psd(nakano_matrix(r));
    out.nakano_min_eig = nk->min_eig;
    out.exact = out.exact && nk->exact;
  }

  // (4) sampling falsifier
  auto sampled = griffiths_falsify(r, opts.samples, opts.seed);
  if (sampled) {
    if (dn.is_psd || (nk && nk->is_psd)) throw std::logic_error("Griffiths witness contradicts a PSD certificate");
    out.kind = VerdictKind::GriffithsViolated;
    out.witness = std::move(sampled);
    out.exact = out.exact && out.witness->exact_value.has_value();
    return out;
  }
  if (dn.is_psd) {
    out.kind = dn.is_pd ? VerdictKind::DualNakanoPositive : VerdictKind::DualNakanoSemipositive;
  } else if (nk && nk->is_psd) {
    out.kind = nk->is_pd ? VerdictKind::NakanoPositive : VerdictKind::NakanoSemipositive;
  } else if (opts.samples > 0) {
    out.kind = VerdictKind::GriffithsSampledNonnegative;
    out.notes.push_back("no Griffiths witness in " + std::to_string(opts.samples) + " samples, seed " + std::to_string(opts.seed));
  } else {
    out.kind = VerdictKind::Indeterminate;
  }
  return out;
}

}  // namespace flagcurv
