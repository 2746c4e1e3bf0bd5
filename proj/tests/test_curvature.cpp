#include "flagcurv/curvature.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagcurv;

namespace {

struct SpFlag {
  int n;
  std::shared_ptr<const RootSystem> rs;
  ChevalleyTable ct;
  FlagManifold fm;

  explicit SpFlag(int n_)
      : n(n_), rs(std::make_shared<const RootSystem>(LieType::make('C', n_))), ct(rs), fm(rs, painted(n_)) {}

  static std::vector<int> painted(int n) {
    std::vector<int> p;
    for (int k = 1; k < n; ++k) p.push_back(k);
    return p;
  }
  RootIndex root(const std::string& label) const {
    for (int i = 0; i < rs->num_positive(); ++i)
      if (rs->c_series_label(i) == label) return i;
    throw std::runtime_error("missing root " + label);
  }
  RootIndex minus(int j) const { return root("l1-l" + std::to_string(j)); }
  RootIndex plus(int j) const { return root("l1+l" + std::to_string(j)); }
  RootIndex two() const { return root("2l1"); }
  RootIndex neg(RootIndex a) const { return rs->neg(a); }
};

Rational exact(const Surd& s) { return s.rational_value(); }

}  // namespace

TEST(Curvature, ConnectionSignPatterns) {
  SpFlag sp(3);
  auto pp = AlmostComplexStructure::parse("++");
  InvariantMetric g{{Rational(1), make_rational(3, 2)}};
  CurvatureEngine eng(sp.ct, sp.fm, pp, g);
  // all signs +: m * lambda_b / lambda_{a+b}
  RootIndex a = sp.minus(2), b = sp.plus(2);
  EXPECT_EQ(eng.connection(a, b), sp.ct.m(a, b) * (Rational(1) / make_rational(3, 2)));
  EXPECT_TRUE(eng.connection(a, sp.neg(a)).is_zero());
  // eps_a = eps_b = +1, eps_{a+b} = -1 kills the coefficient
  auto pm = AlmostComplexStructure::parse("+-");
  CurvatureEngine eng2(sp.ct, sp.fm, pm, g);
  EXPECT_TRUE(eng2.connection(a, b).is_zero());
  EXPECT_EQ(chern_coefficient(sp.ct, sp.fm, pp, g, a, b), eng.connection(a, b));
}

TEST(Curvature, ProjectiveSpaceTables) {
  for (int n = 2; n <= 4; ++n) {
    SpFlag sp(n);
    const Rational base = make_rational(1, n + 1);
    for (auto t : {make_rational(1, 2), Rational(1), make_rational(3, 2), Rational(2)}) {
      CurvatureEngine eng(sp.ct, sp.fm, AlmostComplexStructure::parse("++"), InvariantMetric{{Rational(1), t}});
      auto R = [&](RootIndex i, RootIndex j, RootIndex k, RootIndex l) { return exact(eng.hermitian_entry(i, j, k, l)); };
      auto m2 = [&](RootIndex a, RootIndex b) { return sp.ct.m2(a, b); };
      RootIndex L = sp.two();
      EXPECT_EQ(R(L, L, L, L), t / (n + 1));
      for (int j = 2; j <= n; ++j) {
        RootIndex mj = sp.minus(j), pj = sp.plus(j);
        // diagonal block
        EXPECT_EQ(R(L, L, mj, mj), m2(L, sp.neg(mj)));
        EXPECT_EQ(R(L, L, pj, pj), m2(L, sp.neg(pj)));
        EXPECT_EQ(R(mj, mj, L, L), m2(mj, sp.neg(L)) * (t - 1));
        EXPECT_EQ(R(mj, mj, pj, pj), m2(mj, sp.neg(pj)) + m2(mj, pj) * (1 / t - 1));
        EXPECT_EQ(R(pj, pj, L, L), m2(pj, sp.neg(L)) * (t - 1));
        EXPECT_EQ(R(pj, pj, mj, mj), m2(pj, sp.neg(mj)) + m2(pj, mj) * (1 / t - 1));
        EXPECT_EQ(R(mj, mj, mj, mj), base / 2);
        EXPECT_EQ(R(pj, pj, pj, pj), base / 2);
        // second block
        EXPECT_EQ(R(mj, L, L, mj), base / 2);
        EXPECT_EQ(R(pj, L, L, pj), base / 2);
        EXPECT_EQ(R(L, mj, mj, L), base / 2);
        EXPECT_EQ(R(L, pj, pj, L), base / 2);
        EXPECT_EQ(R(pj, mj, mj, pj), base / 2 * (1 - 1 / t));
        EXPECT_EQ(R(mj, pj, pj, mj), base / 2 * (1 - 1 / t));
        EXPECT_EQ(R(pj, mj, mj, pj), -m2(mj, pj) / t + m2(mj, sp.neg(pj)));
        for (int k = 2; k <= n; ++k) {
          if (k == j) continue;
          RootIndex mk = sp.minus(k), pk = sp.plus(k);
          EXPECT_EQ(R(mj, mj, mk, mk), m2(mj, sp.neg(mk)));
          EXPECT_EQ(R(mj, mj, pk, pk), m2(mj, sp.neg(pk)));
          EXPECT_EQ(R(pj, pj, pk, pk), m2(pj, sp.neg(pk)));
          EXPECT_EQ(R(pj, pj, mk, mk), m2(pj, sp.neg(mk)));
          EXPECT_EQ(R(mk, mj, mj, mk), base / 4);
          EXPECT_EQ(R(pk, mj, mj, pk), base / 4);
          EXPECT_EQ(R(pk, pj, pj, pk), base / 4);
          EXPECT_EQ(R(mk, pj, pj, mk), base / 4);
        }
      }
    }
  }
}

TEST(Curvature, TensorStructuralProperties) {
  for (const char* flag_text : {"C3 k=2,3", "G2 k=1", "G2 k=2", "A3", "B3 k=2"}) {
    auto fm = FlagManifold::parse(flag_text);
    ChevalleyTable ct(fm.root_system());
    std::mt19937_64 rng(5);
    for (const auto& j : enumerate_acs(fm)) {
      InvariantMetric g;
      for (int i = 0; i < fm.num_summands(); ++i) g.weights.push_back(make_rational(1 + rng() % 5, 1 + rng() % 3));
      CurvatureEngine eng(ct, fm, j, g);
      CurvatureTensor R(eng);
      const RootSystem& rs = fm.roots();
      for (const auto& [k, v] : R.entries()) {
        // zero-sum support
        Coords s(rs.rank(), 0);
        for (RootIndex r : k)
          for (int i = 0; i < rs.rank(); ++i) s[i] += rs.coords(r)[i];
        ASSERT_TRUE(std::all_of(s.begin(), s.end(), [](int c) { return c == 0; }));
        ASSERT_EQ(R.at(k[1], k[0], k[2], k[3]), -v) << flag_text;
      }
      // conjugation symmetry R_{a bbar c dbar} = R_{b abar d cbar}
      for (RootIndex a : fm.m_positive())
        for (RootIndex b : fm.m_positive())
          for (RootIndex c : fm.m_positive())
            for (RootIndex d : fm.m_positive())
              ASSERT_EQ(R.hermitian(a, b, c, d), R.hermitian(b, a, d, c)) << flag_text << " " << j.str();
      // entries off the zero-sum locus vanish
      EXPECT_TRUE(eng.entry(fm.m_positive()[0], fm.m_positive()[0], fm.m_positive()[0], fm.m_positive()[0]).is_zero());
    }
  }
}

TEST(Curvature, OracleMatchesEngine) {
  for (const char* flag_text : {"C3 k=2,3", "G2 k=1", "G2 k=2", "G2", "A3", "B3", "C3 k=1", "B2", "A2"}) {
    auto fm = FlagManifold::parse(flag_text);
    ChevalleyTable ct(fm.root_system());
    std::mt19937_64 rng(9);
    for (const auto& j : enumerate_acs(fm)) {
      InvariantMetric g;
      for (int i = 0; i < fm.num_summands(); ++i) g.weights.push_back(make_rational(1 + rng() % 7, 1 + rng() % 4));
      CurvatureEngine eng(ct, fm, j, g);
      auto plus = rm_plus(fm, j);
      const RootSystem& rs = fm.roots();
      for (RootIndex a : plus)
        for (RootIndex c : plus) {
          auto [first, second] = curvature_diag_oracle(eng, a, c);
          ASSERT_EQ(eng.entry(a, rs.neg(a), c, rs.neg(c)), Surd(first)) << flag_text << " " << j.str();
          ASSERT_EQ(eng.entry(c, rs.neg(a), a, rs.neg(c)), Surd(second)) << flag_text << " " << j.str();
        }
    }
  }
}

TEST(Curvature, OracleProjectiveValues) {
  SpFlag sp(3);
  auto t = make_rational(3, 2);
  CurvatureEngine eng(sp.ct, sp.fm, AlmostComplexStructure::parse("++"), InvariantMetric{{Rational(1), t}});
  auto [v, w] = curvature_diag_oracle(eng, sp.minus(2), sp.two());
  EXPECT_EQ(v, sp.ct.m2(sp.minus(2), sp.neg(sp.two())) * (t - 1));
  EXPECT_EQ(curvature_diag_oracle(eng, sp.two(), sp.two()).first, t / 4);
  (void)w;
}

TEST(Curvature, LemmaNegativeDiagonal) {
  // quasi-Kahler, alpha+gamma in R_M with eps = -1, alpha-gamma not a root
  SpFlag sp(3);
  auto j = AlmostComplexStructure::parse("+-");
  InvariantMetric g{{Rational(1), Rational(3)}};
  CurvatureEngine eng(sp.ct, sp.fm, j, g);
  RootIndex a = sp.minus(2), c = sp.neg(sp.two());
  ASSERT_EQ(eng.eps(sp.rs->sum(a, c)), -1);
  ASSERT_EQ(sp.rs->diff(a, c), RootSystem::kNotRoot);
  auto [v, w] = curvature_diag_oracle(eng, a, c);
  EXPECT_EQ(v, -sp.ct.m2(a, c) * g.weights[1]);  // lambda_gamma, gamma = -2 l1
  EXPECT_LT(v, 0);
  (void)w;
}

TEST(Curvature, CsvDump) {
  SpFlag sp(2);
  CurvatureEngine eng(sp.ct, sp.fm, AlmostComplexStructure::parse("++"), InvariantMetric{{Rational(1), Rational(2)}});
  CurvatureTensor R(eng);
  EXPECT_TRUE(R.all_rational());
  std::string csv = R.dump_csv();
  EXPECT_EQ(csv.rfind("alpha,beta,gamma,delta,exact,value\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), R.size() + 1);
}
