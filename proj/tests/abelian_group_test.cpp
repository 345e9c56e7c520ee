#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wittkit/abelian_group.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/rational_mod1.hpp"

using namespace wittkit;

TEST(RationalMod1, ReducesIntoUnitInterval) {
  EXPECT_EQ(RationalMod1(5, 4), RationalMod1(1, 4));
  EXPECT_EQ(RationalMod1(-1, 4), RationalMod1(3, 4));
  EXPECT_EQ(RationalMod1(4, 16).to_string(), "1/4");
  EXPECT_EQ(RationalMod1(3, 3).to_string(), "0");
  EXPECT_EQ(RationalMod1::parse("-3/8"), RationalMod1(5, 8));
  EXPECT_THROW(RationalMod1(1, 0), UserError);
}

TEST(RationalMod1, GroupAxiomsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 60);
  for (int trial = 0; trial < 2000; ++trial) {
    const RationalMod1 a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a + RationalMod1(), a);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * 3, a + a + a);
    EXPECT_EQ(a * a.order(), RationalMod1());
    // Matches exact rational arithmetic.
    const auto exact = oracle::frac_mod1(oracle::to_q(a) + oracle::to_q(b));
    EXPECT_EQ(oracle::to_q(a + b), exact);
  }
}

TEST(FinAbGroup, EnumeratesLexicographically) {
  EXPECT_EQ(enumerate_elements(FinAbGroup()).size(), 1u);
  const auto v = enumerate_elements(FinAbGroup({2, 2}));
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0].coords, (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(v[1].coords, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(v[2].coords, (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(v[3].coords, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(enumerate_elements(FinAbGroup({6})).size(), 6u);
  EXPECT_THROW(FinAbGroup({1}), UserError);
}

TEST(FinAbGroup, IndexRoundTripAndArithmetic) {
  const FinAbGroup g({4, 6, 3});
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    const Element x = g.element_at(i);
    EXPECT_EQ(g.index_of(x), i);
    EXPECT_EQ(g.add(x, g.neg(x)), g.identity());
    EXPECT_EQ(g.scale(x, g.element_order(x)), g.identity());
  }
}

TEST(FinAbGroup, InvariantFactors) {
  EXPECT_EQ(FinAbGroup({2, 3}).invariant_factors(), (std::vector<std::int64_t>{6}));
  EXPECT_EQ(FinAbGroup({4, 2, 6}).invariant_factors(), (std::vector<std::int64_t>{2, 2, 12}));
  EXPECT_TRUE(FinAbGroup().invariant_factors().empty());
}

TEST(Subgroups, ClosureExamples) {
  const FinAbGroup z4({4});
  EXPECT_TRUE(subgroup_closure(z4, {}).is_trivial());
  const Element two{{2}};
  EXPECT_EQ(subgroup_closure(z4, std::span(&two, 1)).indices(), (std::vector<std::uint64_t>{0, 2}));
  const FinAbGroup v({2, 2});
  const std::vector<Element> gens{{{1, 0}}, {{0, 1}}};
  EXPECT_EQ(subgroup_closure(v, gens).size(), 4u);
}

TEST(Subgroups, CountsMatchSubsetScan) {
  EXPECT_EQ(all_subgroups(FinAbGroup({2})).size(), 2u);
  EXPECT_EQ(all_subgroups(FinAbGroup({2, 2})).size(), 5u);
  EXPECT_EQ(all_subgroups(FinAbGroup({4})).size(), 3u);
  for (const std::vector<std::int64_t>& orders : std::vector<std::vector<std::int64_t>>{
           {2, 2, 2}, {2, 4}, {8}, {3, 3}, {2, 6}, {2, 2, 2, 2}, {4, 4}, {16}, {2, 8}}) {
    const FinAbGroup g(orders);
    const auto subs = all_subgroups(g);
    EXPECT_EQ(subs.size(), oracle::count_subgroups(orders)) << g.to_string();
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
    for (const Subgroup& s : subs) EXPECT_EQ(subgroup_closure(g, s.generators()), s);
  }
}

TEST(Subgroups, FromIndicesRejectsNonSubgroups) {
  const FinAbGroup g({4});
  EXPECT_THROW(subgroup_from_indices(g, {0, 1}), UserError);
  EXPECT_EQ(subgroup_from_indices(g, {2, 0}).size(), 2u);
}

TEST(Subgroups, AbelianGroupsOfOrder) {
  EXPECT_EQ(abelian_groups_of_order(8).size(), 3u);
  EXPECT_EQ(abelian_groups_of_order(16).size(), 5u);
  EXPECT_EQ(abelian_groups_of_order(36).size(), 4u);
  EXPECT_EQ(abelian_groups_of_order(1).size(), 1u);
}

TEST(Caps, ElementCapIsEnforced) {
  const auto saved = element_cap();
  set_element_cap(100);
  EXPECT_THROW(enumerate_elements(FinAbGroup({11, 11})), CapExceeded);
  set_element_cap(saved);
  EXPECT_THROW(all_subgroups(FinAbGroup({8193})), CapExceeded);
}
