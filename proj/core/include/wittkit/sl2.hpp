#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wittkit/metric_group.hpp"
#include "wittkit/rational_mod1.hpp"

namespace wittkit::sl2 {

/// Simple objects of C(sl(2), k) are the labels 0..k.
std::vector<int> fusion(int k, int i, int j);

/// Conformal weight h_j = j(j+2) / (4(k+2)) mod 1; theta_j = exp(2 pi i h_j).
RationalMod1 twist(int k, int j);

/// Exponent of the monodromy eigenvalue of [t] and [j] on the channel
/// [t+j-2s]: h_{t+j-2s} - h_t - h_j mod 1. Throws InvalidChannel.
RationalMod1 monodromy_eigenvalue(int k, int t, int j, int s);

/// sin((j+1) pi/(k+2)) / sin(pi/(k+2)).
double fpdim_object(int k, int j);
/// (k+2) / (2 sin^2(pi/(k+2))).
double fpdim_category(int k);

/// Multiplicative central charge exponent 3k / (8(k+2)) mod 1.
RationalMod1 central_charge(int k);

/// Additive central charge k dim(g) / (k + h^v) for g = sl(2): 3k/(k+2).
/// Checks that c/8 mod 1 agrees with central_charge(k).
boost::rational<std::int64_t> central_charge_additive(int k);

enum class PointedPart {
  /// k odd: Z/2 with q(1) = +-1/4.
  Nondegenerate,
  /// k = 0 mod 4: Rep(Z/2).
  Tannakian,
  /// k = 2 mod 4: sVec.
  Super,
};

std::string to_string(PointedPart p);

/// By k mod 4, cross-checked against theta_[k].
PointedPart classify_level(int k);

/// (Z/2, q(1) = k/4 mod 1) for odd k. Throws EvenLevel.
PreMetricGroup pointed_part_form(int k);

struct Sl2Data {
  int level = 0;
  std::vector<RationalMod1> twists;
  std::vector<double> fpdims;
  RationalMod1 central_charge;
  double fpdim_category = 0.0;

  static Sl2Data make(int k);
};

struct LocalModuleSet {
  struct Orbit {
    int label = 0;
    int partner = 0;  // k - label
    bool local = false;
    bool fixed_point = false;
  };
  struct Simple {
    std::string name;  // "{j,k-j}" or "(k/2,+)" / "(k/2,-)"
    double dim = 0.0;
    RationalMod1 twist;
  };

  int level = 0;
  std::vector<Orbit> orbits;
  std::vector<Simple> simples;
  double dim_sq_sum = 0.0;
};

/// Simple local modules over A = [0] + [k] for k = 0 mod 4. Throws
/// LevelNotMultipleOf4; throws InternalError if the dimensions do not add
/// up to FPdim(C) / 4.
LocalModuleSet local_modules(int k);

}  // namespace wittkit::sl2
