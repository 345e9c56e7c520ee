#include <gtest/gtest.h>

#include "wittkit/corpus.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/etale.hpp"

using namespace wittkit;

TEST(Etale, Examples) {
  const auto plus = PreMetricGroup::cyclic(2, 1, 4);
  const auto minus = PreMetricGroup::cyclic(2, 3, 4);
  const auto algs = enumerate_etale(plus, minus);
  ASSERT_EQ(algs.size(), 2u);
  EXPECT_TRUE(algs[0].algebra.is_trivial());
  EXPECT_EQ(algs[1].algebra.indices(), (std::vector<std::uint64_t>{0, 3}));
  EXPECT_TRUE(check_prdim(algs[1]));
  EXPECT_EQ(algs[1].datum.b1.size(), 2u);
  EXPECT_EQ(algs[1].datum.h1.size() * algs[1].datum.h2.size(), 1u);

  EXPECT_EQ(enumerate_etale(plus, plus).size(), 1u);
}

TEST(Etale, TrivialSecondFactor) {
  for (const PreMetricGroup& c : forms_up_to_order(16, true)) {
    const auto algs = enumerate_etale(c, PreMetricGroup());
    const auto iso = isotropic_subgroups(c);
    ASSERT_EQ(algs.size(), iso.size());
    for (std::size_t i = 0; i < iso.size(); ++i) EXPECT_EQ(algs[i].algebra.indices(), iso[i].indices());
  }
}

TEST(Etale, DataIsConsistent) {
  const auto forms = forms_up_to_order(4, true);
  for (const auto& a : forms) {
    for (const auto& b : forms) {
      for (const EtaleAlgebra& alg : enumerate_etale(a, b)) {
        const auto& d = alg.datum;
        EXPECT_TRUE(check_prdim(alg));
        EXPECT_EQ(d.phi.size(), d.b1.size());
        EXPECT_EQ(d.b1.size(), d.b2.size());
        for (const auto& [x, y] : d.phi) EXPECT_EQ(d.condensed1.q(x) + d.condensed2.q(y), RationalMod1());
      }
    }
  }
}

TEST(Etale, CapIsEnforced) {
  const auto big = direct_power(PreMetricGroup::cyclic(2, 1, 4), 7);
  EXPECT_THROW(enumerate_etale(big, big), CapExceeded);
}

TEST(Et0, Correspondence) {
  for (const PreMetricGroup& c : forms_up_to_order(16, true)) {
    for (const Subgroup& h : isotropic_subgroups(c)) EXPECT_TRUE(check_et0(c, h)) << c.to_string();
  }
  const auto z2 = PreMetricGroup::cyclic(2, 1, 4);
  EXPECT_THROW(check_et0(z2, all_subgroups(z2.group()).back()), NotIsotropic);
}
