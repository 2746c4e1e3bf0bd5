#include "flagcurv/flagspace.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace flagcurv;

namespace {

FlagManifold flag(const std::string& s) { return FlagManifold::parse(s); }

std::vector<FlagManifold> all_flags(const std::string& type) {
  auto rs = std::make_shared<const RootSystem>(LieType::parse(type));
  std::vector<FlagManifold> out;
  const int n = rs->rank();
  for (int mask = 0; mask < (1 << n) - 1; ++mask) {
    std::vector<int> painted;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) painted.push_back(k);
    out.emplace_back(rs, painted);
  }
  return out;
}

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A4", "B4", "C4", "D4", "F4"};

}  // namespace

TEST(FlagManifold, ParsesAndPrints) {
  auto fm = flag("C4 k=2,3,4");
  EXPECT_EQ(fm.str(), "C4 k=2,3,4");
  EXPECT_EQ(fm.painted(), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(flag("A3").is_maximal());
  EXPECT_THROW(flag("C4 k=5"), std::invalid_argument);
  EXPECT_THROW(flag("C4 k=x"), std::invalid_argument);
  EXPECT_THROW(flag("Q4 k=1"), std::invalid_argument);
}

TEST(FlagManifold, SummandCountsOfNamedFlags) {
  for (int n = 2; n <= 6; ++n) {
    auto fm = flag("C" + std::to_string(n) + " k=" + [&] {
      std::string s;
      for (int i = 2; i <= n; ++i) s += (i > 2 ? "," : "") + std::to_string(i);
      return s;
    }());
    ASSERT_EQ(fm.num_summands(), 2);
    // {l1 +- lj} then {2 l1}
    EXPECT_EQ(fm.summands()[0].size(), static_cast<std::size_t>(2 * (n - 1)));
    ASSERT_EQ(fm.summands()[1].size(), 1u);
    EXPECT_EQ(fm.roots().c_series_label(fm.summands()[1][0]), "2l1");
    EXPECT_EQ(enumerate_acs(fm).size(), 2u);
  }
  auto g2a = flag("G2 k=1");
  ASSERT_EQ(g2a.num_summands(), 2);
  std::set<Coords> first;
  for (auto r : g2a.summands()[0]) first.insert(g2a.roots().coords(r));
  EXPECT_EQ(first, (std::set<Coords>{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  EXPECT_EQ(g2a.roots().coords(g2a.summands()[1][0]), (Coords{3, 2}));
  auto g2b = flag("G2 k=2");
  EXPECT_EQ(g2b.num_summands(), 3);
  EXPECT_EQ(enumerate_acs(g2b).size(), 4u);
  EXPECT_EQ(flag("F4 k=2,3,4").num_summands(), 2);
  EXPECT_EQ(flag("F4 k=1,2,4").num_summands(), 4);
  EXPECT_EQ(enumerate_acs(flag("F4 k=1,2,4")).size(), 8u);
  EXPECT_EQ(flag("A3 k=1,2").num_summands(), 1);
  EXPECT_EQ(enumerate_acs(flag("A3 k=1,2")).size(), 1u);
}

TEST(FlagManifold, SummandsMatchUnionFind) {
  for (const auto& t : kSmallTypes)
    for (const auto& fm : all_flags(t)) {
      const RootSystem& rs = fm.roots();
      std::vector<int> parent(rs.num_positive());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      auto in_span_k = [&](const Coords& c) {
        for (int k = 0; k < rs.rank(); ++k)
          if (c[k] != 0 && !std::binary_search(fm.painted().begin(), fm.painted().end(), k)) return false;
        return true;
      };
      for (int a = 0; a < rs.num_positive(); ++a)
        for (int b = 0; b < rs.num_positive(); ++b) {
          if (in_span_k(rs.coords(a)) || in_span_k(rs.coords(b))) continue;
          Coords d(rs.rank());
          for (int k = 0; k < rs.rank(); ++k) d[k] = rs.coords(a)[k] - rs.coords(b)[k];
          if (in_span_k(d)) parent[find(a)] = find(b);
        }
      for (int a = 0; a < rs.num_positive(); ++a) {
        ASSERT_EQ(fm.in_k(a), in_span_k(rs.coords(a)));
        for (int b = 0; b < rs.num_positive(); ++b) {
          if (fm.in_k(a) || fm.in_k(b)) continue;
          ASSERT_EQ(find(a) == find(b), fm.summand_of(a) == fm.summand_of(b)) << fm.str();
        }
      }
      if (fm.is_maximal()) EXPECT_EQ(fm.num_summands(), rs.num_positive());
    }
}

TEST(AlmostComplex, ParseAndEnumerate) {
  EXPECT_EQ(AlmostComplexStructure::parse("+-").signs, (std::vector<int>{1, -1}));
  EXPECT_THROW(AlmostComplexStructure::parse("+x"), std::invalid_argument);
  auto list = enumerate_acs(flag("G2 k=2"));
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[0].str(), "+++");
  EXPECT_EQ(list[1].str(), "++-");
  EXPECT_EQ(list[3].str(), "+--");
}

TEST(AlmostComplex, Integrability) {
  auto sp = flag("C3 k=2,3");
  EXPECT_TRUE(is_integrable(sp, AlmostComplexStructure::parse("++")));
  EXPECT_FALSE(is_integrable(sp, AlmostComplexStructure::parse("+-")));
  EXPECT_TRUE(is_integrable(flag("G2 k=2"), AlmostComplexStructure::parse("+++")));
}

TEST(Metrics, SpFlagCones) {
  for (int n = 2; n <= 5; ++n) {
    std::string k;
    for (int i = 2; i <= n; ++i) k += (i > 2 ? "," : "") + std::to_string(i);
    auto sp = flag("C" + std::to_string(n) + " k=" + k);
    auto pp = AlmostComplexStructure::parse("++"), pm = AlmostComplexStructure::parse("+-");
    auto kc = kahler_metrics(sp, pp);
    EXPECT_TRUE(kc.is_ray_through({Rational(1), Rational(2)})) << kc.str();
    EXPECT_TRUE(kahler_metrics(sp, pm).empty());
    // no Kahler relation solution for (+,-) even ignoring integrability
    EXPECT_TRUE(MetricCone(kahler_relations(sp, pm), 2).empty());
    auto qk = quasi_kahler_metrics(sp, pm);
    EXPECT_EQ(qk.dimension(), 2);
    for (auto t : {make_rational(1, 3), Rational(1), Rational(7)}) {
      EXPECT_TRUE(is_quasi_kahler(sp, pm, InvariantMetric{{Rational(1), t}}));
      EXPECT_EQ(is_quasi_kahler(sp, pp, InvariantMetric{{Rational(1), t}}), t == 2);
      EXPECT_EQ(is_kahler(sp, pp, InvariantMetric{{Rational(1), t}}), false);
    }
    EXPECT_TRUE(is_kahler(sp, pp, InvariantMetric::parse("1,2")));
  }
}

TEST(Metrics, MaximalA2QuasiKahler) {
  auto fm = flag("A2");
  auto j = AlmostComplexStructure::parse("+++");
  EXPECT_TRUE(is_quasi_kahler(fm, j, InvariantMetric::parse("1,1,2")));
  EXPECT_FALSE(is_quasi_kahler(fm, j, InvariantMetric::parse("1,1,1")));
}

TEST(Metrics, KahlerImpliesQuasiKahlerAndIntegrable) {
  for (const auto& t : {"A3", "B3", "C3", "G2"})
    for (const auto& fm : all_flags(t))
      for (const auto& j : enumerate_acs(fm)) {
        auto kc = kahler_metrics(fm, j);
        if (!kc.empty()) {
          InvariantMetric g{*kc.witness()};
          EXPECT_TRUE(is_kahler(fm, j, g));
          EXPECT_TRUE(is_quasi_kahler(fm, j, g));
          EXPECT_TRUE(is_integrable(fm, j));
        }
      }
}

TEST(Metrics, EveryFlagHasAKahlerStructure) {
  for (const auto& t : kSmallTypes)
    for (const auto& fm : all_flags(t)) {
      if (fm.num_summands() > 10) continue;
      bool any = false;
      for (const auto& j : enumerate_acs(fm)) any = any || !kahler_metrics(fm, j).empty();
      EXPECT_TRUE(any) << fm.str();
    }
}

TEST(Metrics, AlmostKahlerConeEqualsKahlerCone) {
  for (const auto& t : {"A3", "B3", "C3", "G2", "B2"})
    for (const auto& fm : all_flags(t))
      for (const auto& j : enumerate_acs(fm)) EXPECT_TRUE(almost_kahler_metrics(fm, j) == kahler_metrics(fm, j)) << fm.str() << " " << j.str();
}

TEST(Metrics, LambdaOneKahler) {
  EXPECT_TRUE(lambda_one_is_kahler(flag("A3 k=1,2")));
  EXPECT_FALSE(lambda_one_is_kahler(flag("C4 k=2,3,4")));
  EXPECT_TRUE(lambda_one_is_kahler(flag("D4 k=2,3,4")));
}

TEST(Metrics, ParseMetric) {
  auto g = InvariantMetric::parse("1,3/2");
  EXPECT_EQ(g.weights[1], make_rational(3, 2));
  EXPECT_THROW(InvariantMetric::parse("1,-2"), std::invalid_argument);
  EXPECT_THROW(InvariantMetric::parse("1,0"), std::invalid_argument);
}

TEST(LinAlg, PositiveSolution) {
  RationalMatrix a = {{Rational(1), Rational(1), Rational(-1)}};
  auto x = positive_solution(a, 3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], (*x)[2]);
  RationalMatrix b = {{Rational(1), Rational(1), Rational(1)}};
  EXPECT_FALSE(positive_solution(b, 3).has_value());
  EXPECT_EQ(null_space(a, 3).size(), 2u);
}

#include "flagcurv/positivity.hpp"
#include "flagcurv/signscan.hpp"

TEST(SignScan, AgreesWithDirectPredicates) {
  for (const auto& t : {"A3", "B3", "C3", "G2", "A4", "B2", "D4"})
    for (const auto& fm : all_flags(t)) {
      SignPatternIndex idx(fm);
      auto list = enumerate_acs(fm);
      ASSERT_EQ(idx.count(), list.size());
      for (std::size_t i = 0; i < list.size(); ++i) {
        SignMask m = idx.nth(i);
        ASSERT_EQ(from_mask(m, fm.num_summands()), list[i]);
        ASSERT_EQ(to_mask(list[i]), m);
        ASSERT_EQ(idx.integrable(m), is_integrable(fm, list[i])) << fm.str() << " " << list[i].str();
        ASSERT_EQ(idx.has_certificate(m), lemma_certificate(fm, list[i]).has_value()) << fm.str() << " " << list[i].str();
      }
    }
}
