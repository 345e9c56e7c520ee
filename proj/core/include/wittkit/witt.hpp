#pragma once

#include <optional>
#include <vector>

#include "wittkit/metric_group.hpp"

namespace wittkit {

/// Default bound for order searches; twice the largest finite order (32)
/// that occurs in the Witt group.
inline constexpr int kDefaultMaxOrder = 64;

/// Repeatedly condenses by a cyclic isotropic subgroup <x> until none is
/// left. x is chosen minimal by (element order, lexicographic coordinates).
/// Throws Degenerate for degenerate input. Results are memoized.
PreMetricGroup anisotropic_kernel(const PreMetricGroup& c);

/// Nonzero elements with q(x) = 0.
bool has_isotropic_vector(const PreMetricGroup& c);

/// A nondegenerate pre-metric group up to Witt equivalence.
class WittClassHandle {
 public:
  /// Trivial class.
  WittClassHandle();
  explicit WittClassHandle(PreMetricGroup representative);

  const PreMetricGroup& representative() const noexcept { return rep_; }
  const PreMetricGroup& aniso() const noexcept { return aniso_; }
  bool is_trivial() const noexcept { return aniso_.group().is_trivial(); }

 private:
  PreMetricGroup rep_;
  PreMetricGroup aniso_;
};

/// Class of the orthogonal sum.
WittClassHandle witt_add(const WittClassHandle& x, const WittClassHandle& y);
/// Class of the reverse.
WittClassHandle witt_negate(const WittClassHandle& x);
/// n * x; negative n uses the reverse.
WittClassHandle witt_multiple(const WittClassHandle& x, int n);

/// x == y in W_pt: the anisotropic kernel of x + reverse(y) is trivial.
bool witt_equal(const WittClassHandle& x, const WittClassHandle& y);

/// Least n in [1, max_n] with n * x trivial, or nullopt.
std::optional<int> witt_order(const WittClassHandle& x, int max_n = kDefaultMaxOrder);

/// Witt classes of the nondegenerate forms of order 4 carrying some u with
/// q(u) = 1/2: the pointed part of the Ising subgroup. Checked on first use
/// to be cyclic of order 8; cached afterwards.
const std::vector<WittClassHandle>& ising_pointed_subgroup();

/// Equality modulo the Ising pointed subgroup: x - y lies in it.
bool switt_equal(const WittClassHandle& x, const WittClassHandle& y);

/// Least n in [1, max_n] with switt_equal(n * x, 0), or nullopt.
std::optional<int> switt_order(const WittClassHandle& x, int max_n = kDefaultMaxOrder);

}  // namespace wittkit
