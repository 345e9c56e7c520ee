#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/sl2.hpp"

using namespace wittkit;

namespace {

// Fusion multiplicity from the Verlinde formula with the sl(2)_k S-matrix.
int verlinde(int k, int i, int j, int m) {
  const double n = k + 2;
  auto s = [&](int a, int b) { return std::sqrt(2 / n) * std::sin((a + 1) * (b + 1) * std::numbers::pi / n); };
  double total = 0;
  for (int a = 0; a <= k; ++a) total += s(i, a) * s(j, a) * s(m, a) / s(0, a);
  return static_cast<int>(std::lround(total));
}

}  // namespace

TEST(Sl2, FusionExamples) {
  EXPECT_EQ(sl2::fusion(2, 1, 1), (std::vector<int>{0, 2}));
  EXPECT_EQ(sl2::fusion(4, 2, 2), (std::vector<int>{0, 2, 4}));
  for (int j = 0; j <= 5; ++j) EXPECT_EQ(sl2::fusion(5, 0, j), (std::vector<int>{j}));
  EXPECT_THROW(sl2::fusion(2, 3, 0), LabelOutOfRange);
}

TEST(Sl2, FusionMatchesVerlinde) {
  for (int k = 1; k <= 10; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) {
        const auto f = sl2::fusion(k, i, j);
        for (int m = 0; m <= k; ++m)
          EXPECT_EQ(std::count(f.begin(), f.end(), m), verlinde(k, i, j, m)) << k << " " << i << " " << j;
      }
}

TEST(Sl2, Twists) {
  EXPECT_EQ(sl2::twist(2, 1), RationalMod1(3, 16));
  EXPECT_EQ(sl2::twist(7, 0), RationalMod1());
  EXPECT_EQ(sl2::twist(2, 2), RationalMod1(1, 2));
  for (int k = 1; k <= 60; ++k) {
    for (int j = 0; j <= k; ++j) {
      const oracle::Q h(j * (j + 2), 4 * (k + 2));
      EXPECT_EQ(oracle::to_q(sl2::twist(k, j)), oracle::frac_mod1(h));
      // theta_{k-j} = theta_j theta_k (-1)^j.
      const RationalMod1 rel = sl2::twist(k, k - j) - sl2::twist(k, j) - sl2::twist(k, k) + RationalMod1(j, 2);
      EXPECT_TRUE(rel.is_zero()) << k << " " << j;
    }
  }
  EXPECT_THROW(sl2::twist(3, 4), LabelOutOfRange);
}

TEST(Sl2, Monodromy) {
  EXPECT_EQ(sl2::monodromy_eigenvalue(8, 8, 2, 2), RationalMod1());
  EXPECT_EQ(sl2::monodromy_eigenvalue(8, 8, 1, 1), RationalMod1(1, 2));
  for (int j = 0; j <= 6; ++j) EXPECT_EQ(sl2::monodromy_eigenvalue(6, 0, j, 0), RationalMod1());
  EXPECT_THROW(sl2::monodromy_eigenvalue(4, 1, 1, 2), InvalidChannel);
}

TEST(Sl2, Dimensions) {
  EXPECT_NEAR(sl2::fpdim_object(2, 1), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(sl2::fpdim_object(9, 0), 1.0, 1e-12);
  EXPECT_NEAR(sl2::fpdim_category(1), 2.0, 1e-12);
  for (int k = 1; k <= 100; ++k) {
    double sum = 0;
    for (int j = 0; j <= k; ++j) sum += sl2::fpdim_object(k, j) * sl2::fpdim_object(k, j);
    EXPECT_NEAR(sl2::fpdim_category(k), sum, 1e-9 * sum);
    // d_1 d_j = d_{j-1} + d_{j+1}.
    for (int j = 1; j < k; ++j)
      EXPECT_NEAR(sl2::fpdim_object(k, 1) * sl2::fpdim_object(k, j),
                  sl2::fpdim_object(k, j - 1) + sl2::fpdim_object(k, j + 1), 1e-9);
  }
}

TEST(Sl2, CentralCharge) {
  EXPECT_EQ(sl2::central_charge_additive(1), boost::rational<std::int64_t>(1));
  EXPECT_EQ(sl2::central_charge(1), RationalMod1(1, 8));
  EXPECT_EQ(sl2::central_charge_additive(2), boost::rational<std::int64_t>(3, 2));
  EXPECT_EQ(sl2::central_charge(2), RationalMod1(3, 16));
  for (int k = 1; k <= 100; ++k) {
    const auto c = sl2::central_charge_additive(k);
    EXPECT_EQ(oracle::to_q(sl2::central_charge(k)), oracle::frac_mod1(c / 8));
  }
}

TEST(Sl2, ClassifyLevel) {
  EXPECT_EQ(sl2::classify_level(3), sl2::PointedPart::Nondegenerate);
  EXPECT_EQ(sl2::classify_level(8), sl2::PointedPart::Tannakian);
  EXPECT_EQ(sl2::classify_level(6), sl2::PointedPart::Super);
  for (int k = 1; k <= 1000; ++k) {
    const auto theta = sl2::twist(k, k);
    const auto p = sl2::classify_level(k);
    if (theta == RationalMod1()) {
      EXPECT_EQ(p, sl2::PointedPart::Tannakian);
    } else if (theta == RationalMod1(1, 2)) {
      EXPECT_EQ(p, sl2::PointedPart::Super);
    } else {
      EXPECT_EQ(p, sl2::PointedPart::Nondegenerate);
    }
  }
}

TEST(Sl2, PointedPartForm) {
  EXPECT_EQ(sl2::pointed_part_form(1), PreMetricGroup::cyclic(2, 1, 4));
  EXPECT_EQ(sl2::pointed_part_form(3), PreMetricGroup::cyclic(2, 3, 4));
  EXPECT_EQ(sl2::pointed_part_form(5), PreMetricGroup::cyclic(2, 1, 4));
  EXPECT_THROW(sl2::pointed_part_form(4), EvenLevel);
}

TEST(Sl2, LocalModules) {
  const auto m4 = sl2::local_modules(4);
  EXPECT_EQ(m4.simples.size(), 3u);
  const auto m8 = sl2::local_modules(8);
  EXPECT_EQ(m8.simples.size(), 4u);
  for (int k = 4; k <= 40; k += 4) {
    const auto m = sl2::local_modules(k);
    EXPECT_NEAR(m.dim_sq_sum, sl2::fpdim_category(k) / 4, 1e-9 * m.dim_sq_sum);
    // Count local orbits directly: j even is local (h_{k-j} - h_k - h_j = -j/2 mod 1).
    std::size_t expected = 0;
    for (int j = 0; j < k / 2; j += 2) ++expected;
    expected += 2;
    EXPECT_EQ(m.simples.size(), expected);
    for (const auto& s : m.simples) {
      if (s.name.front() == '{') continue;
      EXPECT_NEAR(s.dim, sl2::fpdim_object(k, k / 2) / 2, 1e-12);
    }
  }
  EXPECT_THROW(sl2::local_modules(6), LevelNotMultipleOf4);
}

TEST(Sl2, DataTable) {
  const auto d = sl2::Sl2Data::make(2);
  ASSERT_EQ(d.twists.size(), 3u);
  EXPECT_EQ(d.twists[1], RationalMod1(3, 16));
  EXPECT_EQ(d.central_charge, RationalMod1(3, 16));
}
