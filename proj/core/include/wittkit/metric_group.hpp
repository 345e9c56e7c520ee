#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/abelian_group.hpp"
#include "wittkit/rational_mod1.hpp"

namespace wittkit {

enum class Degeneracy {
  Nondegenerate,
  /// Radical {0, d} with q(d) = 1/2: the pointed model of sVec.
  SlightlyDegenerate,
  Degenerate,
};

std::string to_string(Degeneracy d);

/// A finite abelian group A with a quadratic form q: A -> Q/Z; the pointed
/// braided fusion category C(A, q).
///
/// The form is given on generators: q(e_i) and b(e_i, e_j) for i < j, and is
/// extended by q(sum x_i e_i) = sum x_i^2 q(e_i) + sum_{i<j} x_i x_j b(e_i, e_j).
/// Construction evaluates the form on every element and rejects data that is
/// not a quadratic form on the group.
class PreMetricGroup {
 public:
  /// Trivial group with the zero form.
  PreMetricGroup();

  /// b_upper lists b(e_i, e_j) for i < j in row-major order.
  /// Throws IllFormed, CapExceeded, or UserError on size mismatches.
  static PreMetricGroup build(FinAbGroup group, std::vector<RationalMod1> q_diag,
                              std::vector<RationalMod1> b_upper = {});

  /// Convenience: cyclic group Z/n with q(1) = num/den.
  static PreMetricGroup cyclic(std::int64_t n, std::int64_t num, std::int64_t den);

  const FinAbGroup& group() const noexcept { return group_; }
  std::uint64_t order() const noexcept { return group_.order(); }
  const std::vector<RationalMod1>& q_diag() const noexcept { return q_diag_; }
  /// b(e_i, e_j) for i < j, row-major.
  std::vector<RationalMod1> b_upper() const;
  /// b(e_i, e_j) for any i, j; the diagonal is 2 q(e_i).
  RationalMod1 b_generators(std::size_t i, std::size_t j) const;

  RationalMod1 q(const Element& x) const;
  RationalMod1 q_at(std::uint64_t index) const;
  /// q(x) == 0 without building a fraction.
  bool q_vanishes_at(std::uint64_t index) const noexcept { return q_num_[index] == 0; }

  /// Common denominator of every value of q and b.
  std::int64_t denominator() const noexcept { return den_; }
  /// Numerator of q at an element index, over denominator().
  std::int64_t q_numerator(std::uint64_t index) const noexcept { return q_num_[index]; }
  /// Numerator of b(x, y) over denominator().
  std::int64_t bilinear_numerator(const Element& x, const Element& y) const;

  Degeneracy degeneracy() const noexcept { return degeneracy_; }
  bool is_nondegenerate() const noexcept { return degeneracy_ == Degeneracy::Nondegenerate; }

  std::string to_string() const;

  /// Same group and same generator data.
  friend bool operator==(const PreMetricGroup& a, const PreMetricGroup& b) {
    return a.group_ == b.group_ && a.q_diag_ == b.q_diag_ && a.b_full_ == b.b_full_;
  }

 private:
  FinAbGroup group_;
  std::vector<RationalMod1> q_diag_;
  // Symmetric k x k, diagonal 2 q(e_i).
  std::vector<std::vector<RationalMod1>> b_full_;
  std::int64_t den_ = 1;
  std::vector<std::vector<std::int64_t>> b_num_;
  std::vector<std::int64_t> q_num_;
  Degeneracy degeneracy_ = Degeneracy::Nondegenerate;
};

/// Gauss sum sum_x exp(2 pi i q(x)), evaluated in double precision.
struct GaussSumValue {
  double magnitude_sq = 0.0;
  /// Raw argument in turns, in [0, 1).
  double argument_turns = 0.0;
  /// Argument snapped to a multiple of 1/8. Always set for nondegenerate
  /// forms; unset when the sum vanishes or does not snap.
  std::optional<RationalMod1> argument;
};

RationalMod1 bilinear(const PreMetricGroup& c, const Element& x, const Element& y);

/// {x : b(x, y) = 0 for all y}.
Subgroup radical(const PreMetricGroup& c);

/// {x : b(x, h) = 0 for all h in H}.
Subgroup orthogonal_complement(const PreMetricGroup& c, const Subgroup& h);

/// Throws SnapFailed if c is nondegenerate and the argument is not within
/// 1e-6 of a multiple of 1/8.
GaussSumValue gauss_sum(const PreMetricGroup& c);

/// Orthogonal direct sum (C1 boxtimes C2).
PreMetricGroup direct_sum(const PreMetricGroup& a, const PreMetricGroup& b);
/// n-fold orthogonal sum; n == 0 gives the trivial form.
PreMetricGroup direct_power(const PreMetricGroup& a, int n);
/// q -> -q.
PreMetricGroup reverse(const PreMetricGroup& c);

bool is_isotropic(const PreMetricGroup& c, const Subgroup& h);

/// All subgroups on which q vanishes, sorted by element lists. Order <= 4096.
std::vector<Subgroup> isotropic_subgroups(const PreMetricGroup& c);

/// Result of condensing by an isotropic subgroup H: the form on H^perp / H.
struct Condensation {
  PreMetricGroup result;
  Subgroup perp;
  /// Images of the quotient's standard generators in the ambient group
  /// (lexicographically minimal coset representatives).
  std::vector<Element> generator_lifts;
  /// For each ambient element index: quotient element index, or kNotInPerp.
  std::vector<std::uint64_t> projection;

  static constexpr std::uint64_t kNotInPerp = ~std::uint64_t{0};
};

/// H^perp / H with the induced form. Throws NotIsotropic.
PreMetricGroup condense(const PreMetricGroup& c, const Subgroup& h);
Condensation condense_with_projection(const PreMetricGroup& c, const Subgroup& h);

/// Every quadratic form on g (degenerate ones included), in a fixed order.
/// Generator values range over q(e_i) in (1/2n_i)Z and b(e_i,e_j) in
/// (1/gcd(n_i,n_j))Z, which covers all forms.
std::vector<PreMetricGroup> enumerate_forms(const FinAbGroup& g);

}  // namespace wittkit
