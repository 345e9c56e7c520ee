#include "wittkit/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wittkit/errors.hpp"

namespace wittkit::sl2 {

namespace {

void require_level(int k) {
  if (k < 1) throw UserError("level must be positive, got " + std::to_string(k));
}

void require_label(int k, int j) {
  require_level(k);
  if (j < 0 || j > k) {
    throw LabelOutOfRange("label " + std::to_string(j) + " outside 0.." + std::to_string(k));
  }
}

}  // namespace

std::vector<int> fusion(int k, int i, int j) {
  require_label(k, i);
  require_label(k, j);
  std::vector<int> out;
  for (int s = std::min(i, j); s >= std::max(0, i + j - k); --s) out.push_back(i + j - 2 * s);
  return out;
}

RationalMod1 twist(int k, int j) {
  require_label(k, j);
  return RationalMod1(static_cast<std::int64_t>(j) * (j + 2), 4 * static_cast<std::int64_t>(k + 2));
}

RationalMod1 monodromy_eigenvalue(int k, int t, int j, int s) {
  require_label(k, t);
  require_label(k, j);
  if (s < std::max(0, t + j - k) || s > std::min(t, j)) {
    throw InvalidChannel("[" + std::to_string(t + j - 2 * s) + "] is not a channel of [" + std::to_string(t) +
                         "] x [" + std::to_string(j) + "] at level " + std::to_string(k));
  }
  return twist(k, t + j - 2 * s) - twist(k, t) - twist(k, j);
}

double fpdim_object(int k, int j) {
  require_label(k, j);
  const double step = std::numbers::pi / (k + 2);
  return std::sin((j + 1) * step) / std::sin(step);
}

double fpdim_category(int k) {
  require_level(k);
  const double s = std::sin(std::numbers::pi / (k + 2));
  return (k + 2) / (2.0 * s * s);
}

RationalMod1 central_charge(int k) {
  require_level(k);
  return RationalMod1(3 * static_cast<std::int64_t>(k), 8 * static_cast<std::int64_t>(k + 2));
}

boost::rational<std::int64_t> central_charge_additive(int k) {
  require_level(k);
  constexpr std::int64_t dim_g = 3;
  constexpr std::int64_t dual_coxeter = 2;
  const boost::rational<std::int64_t> c(k * dim_g, k + dual_coxeter);
  const boost::rational<std::int64_t> xi = c / std::int64_t{8};
  if (RationalMod1(xi.numerator(), xi.denominator()) != central_charge(k)) {
    throw InternalError("central charge mismatch at level " + std::to_string(k));
  }
  return c;
}

std::string to_string(PointedPart p) {
  switch (p) {
    case PointedPart::Nondegenerate:
      return "nondegenerate";
    case PointedPart::Tannakian:
      return "tannakian";
    case PointedPart::Super:
      return "super";
  }
  return "?";
}

PointedPart classify_level(int k) {
  require_level(k);
  PointedPart by_residue = PointedPart::Nondegenerate;
  if (k % 4 == 0) by_residue = PointedPart::Tannakian;
  if (k % 4 == 2) by_residue = PointedPart::Super;

  // theta_[k] = k/4 mod 1: +-1/4 nondegenerate, 0 Tannakian, 1/2 super.
  const RationalMod1 theta = twist(k, k);
  PointedPart by_twist = PointedPart::Nondegenerate;
  if (theta.is_zero()) by_twist = PointedPart::Tannakian;
  if (theta == RationalMod1(1, 2)) by_twist = PointedPart::Super;
  if (theta.den() != 4 && by_twist == PointedPart::Nondegenerate) {
    throw InternalError("theta_[k] = " + theta.to_string() + " is not a fourth root of unity");
  }
  if (by_residue != by_twist) throw InternalError("level classification disagrees with theta_[k]");
  return by_residue;
}

PreMetricGroup pointed_part_form(int k) {
  require_level(k);
  if (k % 2 == 0) throw EvenLevel("pointed part is degenerate at even level " + std::to_string(k));
  return PreMetricGroup::build(FinAbGroup({2}), {twist(k, k)});
}

Sl2Data Sl2Data::make(int k) {
  require_level(k);
  Sl2Data d;
  d.level = k;
  for (int j = 0; j <= k; ++j) {
    d.twists.push_back(twist(k, j));
    d.fpdims.push_back(fpdim_object(k, j));
  }
  d.central_charge = sl2::central_charge(k);
  d.fpdim_category = sl2::fpdim_category(k);
  return d;
}

LocalModuleSet local_modules(int k) {
  require_level(k);
  if (k % 4 != 0) throw LevelNotMultipleOf4("regular algebra [0]+[k] is not etale at level " + std::to_string(k));
  LocalModuleSet out;
  out.level = k;
  const int half = k / 2;
  for (int j = 0; j <= half; ++j) {
    LocalModuleSet::Orbit orbit{j, k - j, false, j == half};
    // [k] x [j] = [k-j], channel s = j.
    orbit.local = monodromy_eigenvalue(k, k, j, j).is_zero();
    out.orbits.push_back(orbit);
    if (!orbit.local) continue;
    if (orbit.fixed_point) {
      const double dim = fpdim_object(k, j) / 2.0;
      out.simples.push_back({"(" + std::to_string(j) + ",+)", dim, twist(k, j)});
      out.simples.push_back({"(" + std::to_string(j) + ",-)", dim, twist(k, j)});
    } else {
      out.simples.push_back({"{" + std::to_string(j) + "," + std::to_string(k - j) + "}", fpdim_object(k, j),
                             twist(k, j)});
    }
  }
  for (const auto& s : out.simples) out.dim_sq_sum += s.dim * s.dim;
  const double expected = fpdim_category(k) / 4.0;
  if (std::abs(out.dim_sq_sum - expected) > 1e-9 * std::max(1.0, expected)) {
    throw InternalError("local module dimensions do not add up at level " + std::to_string(k));
  }
  return out;
}

}  // namespace wittkit::sl2
