#include "flagcurv/rootsys.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace flagcurv;

namespace {

std::vector<LieType> types_up_to(int max_rank) {
  std::vector<LieType> out;
  for (char s : std::string("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r) {
      try {
        out.push_back(LieType::make(s, r));
      } catch (const std::invalid_argument&) {
      }
    }
  return out;
}

// highest root found by scanning for the maximal height, independent of the build order
Coords brute_force_highest(const RootSystem& rs) {
  Coords best;
  int h = -1;
  for (int i = 0; i < rs.size(); ++i) {
    int s = 0;
    for (int c : rs.coords(i)) s += c;
    if (s > h) {
      h = s;
      best = rs.coords(i);
    }
  }
  return best;
}

}  // namespace

TEST(LieType, ParsesAndValidates) {
  EXPECT_EQ(LieType::parse("c4"), LieType::make('C', 4));
  EXPECT_EQ(LieType::parse("G2").str(), "G2");
  EXPECT_THROW(LieType::parse("X9"), std::invalid_argument);
  EXPECT_THROW(LieType::parse("B1"), std::invalid_argument);
  EXPECT_THROW(LieType::parse("E9"), std::invalid_argument);
  EXPECT_THROW(LieType::parse("F3"), std::invalid_argument);
  EXPECT_THROW(LieType::parse("D2"), std::invalid_argument);
}

TEST(RootSystem, CountsMatchClassicalFormulas) {
  for (const auto& t : types_up_to(8)) {
    RootSystem rs(t);
    EXPECT_EQ(rs.size(), classical_root_count(t)) << t.str();
    EXPECT_EQ(rs.size(), 2 * rs.num_positive());
  }
  EXPECT_EQ(RootSystem(LieType::make('G', 2)).size(), 12);
  EXPECT_EQ(RootSystem(LieType::make('F', 4)).size(), 48);
  EXPECT_EQ(RootSystem(LieType::make('E', 8)).size(), 240);
}

TEST(RootSystem, G2RootList) {
  RootSystem rs(LieType::make('G', 2));
  std::set<Coords> expect = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  std::set<Coords> got;
  for (int i = 0; i < rs.num_positive(); ++i) got.insert(rs.coords(i));
  EXPECT_EQ(got, expect);
  EXPECT_EQ(rs.marks(), (Coords{3, 2}));
}

TEST(RootSystem, F4HighestRoot) {
  RootSystem rs(LieType::make('F', 4));
  EXPECT_EQ(rs.marks(), (Coords{2, 3, 4, 2}));
}

TEST(RootSystem, MarksAgreeWithBruteForce) {
  for (const auto& t : types_up_to(8)) {
    RootSystem rs(t);
    EXPECT_EQ(rs.marks(), brute_force_highest(rs)) << t.str();
  }
  RootSystem c5(LieType::make('C', 5));
  EXPECT_EQ(c5.marks(), (Coords{2, 2, 2, 2, 1}));
  RootSystem a5(LieType::make('A', 5));
  EXPECT_EQ(a5.marks(), (Coords{1, 1, 1, 1, 1}));
}

TEST(RootSystem, DualCoxeterNumbers) {
  auto h = [](const char* s) { return RootSystem(LieType::parse(s)).dual_coxeter(); };
  EXPECT_EQ(h("A4"), 5);
  EXPECT_EQ(h("B4"), 7);
  EXPECT_EQ(h("C4"), 5);
  EXPECT_EQ(h("D5"), 8);
  EXPECT_EQ(h("E6"), 12);
  EXPECT_EQ(h("E7"), 18);
  EXPECT_EQ(h("E8"), 30);
  EXPECT_EQ(h("F4"), 9);
  EXPECT_EQ(h("G2"), 4);
}

TEST(RootSystem, KillingCasimirIdentity) {
  for (const auto& t : types_up_to(6)) {
    RootSystem rs(t);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        Rational s(0);
        for (int g = 0; g < rs.size(); ++g) s += rs.killing(g, a) * rs.killing(g, b);
        ASSERT_EQ(s, rs.killing(a, b)) << t.str();
      }
  }
}

TEST(RootSystem, ReflectionClosed) {
  for (const auto& t : types_up_to(6)) {
    RootSystem rs(t);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        Rational c = 2 * rs.symmetrized(b, a) / rs.symmetrized(a, a);
        ASSERT_TRUE(is_integer(c));
        int k = numer(c).convert_to<int>();
        Coords r = rs.coords(b);
        for (int i = 0; i < rs.rank(); ++i) r[i] -= k * rs.coords(a)[i];
        ASSERT_TRUE(rs.contains(r)) << t.str();
      }
  }
}

TEST(RootSystem, RootStringsMatchCartanIntegers) {
  for (const auto& t : types_up_to(5)) {
    RootSystem rs(t);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        if (b == a || b == rs.neg(a)) {
          EXPECT_THROW(rs.root_string(a, b), std::invalid_argument);
          continue;
        }
        auto [p, q] = rs.root_string(a, b);
        ASSERT_EQ(Rational(p - q), 2 * rs.killing(b, a) / rs.killing(a, a)) << t.str();
      }
  }
}

TEST(RootSystem, SpecificRootStrings) {
  RootSystem g2(LieType::make('G', 2));
  EXPECT_EQ(g2.root_string(0, 1), std::make_pair(0, 3));
  RootSystem a2(LieType::make('A', 2));
  EXPECT_EQ(a2.root_string(0, 1), std::make_pair(0, 1));
  // C_n: 2 l1 through -l1 + l_j
  for (int n = 2; n <= 5; ++n) {
    RootSystem c(LieType::make('C', n));
    int two_l1 = -1, l1_minus_l2 = -1;
    for (int i = 0; i < c.num_positive(); ++i) {
      if (c.c_series_label(i) == "2l1") two_l1 = i;
      if (c.c_series_label(i) == "l1-l2") l1_minus_l2 = i;
    }
    ASSERT_GE(two_l1, 0);
    ASSERT_GE(l1_minus_l2, 0);
    EXPECT_EQ(c.root_string(two_l1, c.neg(l1_minus_l2)), std::make_pair(0, 1));
  }
}

TEST(RootSystem, CSeriesKillingNorms) {
  for (int n = 2; n <= 6; ++n) {
    RootSystem c(LieType::make('C', n));
    for (int i = 0; i < c.num_positive(); ++i) {
      std::string label = c.c_series_label(i);
      if (label == "2l1") {
        EXPECT_EQ(c.killing(i, i), make_rational(1, n + 1));
      }
      if (label.rfind("l1-", 0) == 0) {
        EXPECT_EQ(c.killing(i, i), make_rational(1, 2 * (n + 1)));
      }
    }
  }
}

TEST(RootSystem, CSeriesLabelsCoverPattern) {
  RootSystem c3(LieType::make('C', 3));
  std::set<std::string> labels;
  for (int i = 0; i < c3.num_positive(); ++i) labels.insert(c3.c_series_label(i));
  std::set<std::string> expect = {"l1-l2", "l1-l3", "l2-l3", "l1+l2", "l1+l3", "l2+l3", "2l1", "2l2", "2l3"};
  EXPECT_EQ(labels, expect);
  EXPECT_EQ(c3.size(), 18);
}

TEST(RootSystem, SimplyLacedNormsEqual) {
  RootSystem a2(LieType::make('A', 2));
  for (int i = 0; i < a2.size(); ++i) EXPECT_EQ(a2.killing(i, i), a2.killing(0, 0));
}

TEST(RootSystem, PositiveOrderIsByHeight) {
  for (const auto& t : types_up_to(6)) {
    RootSystem rs(t);
    for (int i = 0; i + 1 < rs.num_positive(); ++i) ASSERT_LE(rs.height(i), rs.height(i + 1));
    for (int k = 0; k < rs.rank(); ++k) EXPECT_EQ(rs.height(rs.simple(k)), 1);
  }
}

TEST(RootSystem, HasMarkAtLeast) {
  EXPECT_FALSE(RootSystem(LieType::make('A', 5)).has_mark_at_least(3));
  EXPECT_TRUE(RootSystem(LieType::make('G', 2)).has_mark_at_least(3));
  EXPECT_TRUE(RootSystem(LieType::make('F', 4)).has_mark_at_least(3));
  EXPECT_FALSE(RootSystem(LieType::make('C', 4)).has_mark_at_least(3));
}
