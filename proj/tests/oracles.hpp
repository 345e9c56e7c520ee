#pragma once

// Brute-force reference implementations used to check the library. None of
// these call into the code paths they are checking.

#include <boost/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

#include "wittkit/metric_group.hpp"
#include "wittkit/smith.hpp"

namespace oracle {

using Q = boost::rational<std::int64_t>;

inline Q frac_mod1(Q x) {
  const std::int64_t fl = x.numerator() >= 0 ? x.numerator() / x.denominator()
                                              : -((-x.numerator() + x.denominator() - 1) / x.denominator());
  return x - fl;
}

inline Q to_q(const wittkit::RationalMod1& r) { return Q(r.num(), r.den()); }

// q(x) = sum x_i^2 q_i + sum_{i<j} x_i x_j b_ij, reduced mod 1.
inline Q q_value(const wittkit::PreMetricGroup& c, const std::vector<std::int64_t>& x) {
  Q total = 0;
  const std::size_t k = x.size();
  for (std::size_t i = 0; i < k; ++i) total += frac_mod1(Q(x[i] * x[i]) * to_q(c.q_diag()[i]));
  const auto b = c.b_upper();
  std::size_t pos = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) total += frac_mod1(Q(x[i] * x[j]) * to_q(b[pos++]));
  return frac_mod1(total);
}

// Every coordinate vector of the group, first coordinate most significant.
inline std::vector<std::vector<std::int64_t>> all_coords(const std::vector<std::int64_t>& orders) {
  std::vector<std::vector<std::int64_t>> out{{}};
  for (std::int64_t n : orders) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : out)
      for (std::int64_t v = 0; v < n; ++v) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

inline std::complex<double> gauss_sum(const wittkit::PreMetricGroup& c) {
  std::complex<double> s = 0;
  for (const auto& x : all_coords(c.group().factor_orders())) {
    const Q v = q_value(c, x);
    const double t = 2 * std::numbers::pi * boost::rational_cast<double>(v);
    s += std::complex<double>(std::cos(t), std::sin(t));
  }
  return s;
}

// Index arithmetic in Z/n1 x ... x Z/nk without the library.
struct Arith {
  std::vector<std::int64_t> orders;
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (auto n : orders) s *= static_cast<std::uint64_t>(n);
    return s;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, mult = 1;
    for (std::size_t i = orders.size(); i-- > 0;) {
      const auto n = static_cast<std::uint64_t>(orders[i]);
      r += ((a % n + b % n) % n) * mult;
      a /= n;
      b /= n;
      mult *= n;
    }
    return r;
  }
};

// Number of subsets containing 0 closed under addition. Order <= 16.
inline std::size_t count_subgroups(const std::vector<std::int64_t>& orders,
                                   const std::function<bool(std::uint64_t)>& keep = {}) {
  const Arith a{orders};
  const std::uint64_t n = a.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    const std::uint64_t set = (mask << 1) | 1;
    bool closed = true;
    for (std::uint64_t x = 0; x < n && closed; ++x) {
      if (!(set >> x & 1)) continue;
      if (keep && !keep(x)) closed = false;
      for (std::uint64_t y = 0; y < n && closed; ++y)
        if ((set >> y & 1) && !(set >> a.add(x, y) & 1)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

// Witt-trivial iff some isotropic subgroup has |H|^2 = |A| (nondegenerate c).
// Depth-first search over isotropic subgroups grown one element at a time.
inline bool has_lagrangian(const wittkit::PreMetricGroup& c) {
  const Arith a{c.group().factor_orders()};
  const std::uint64_t n = a.size();
  // Necessary: |A| is a square and the Gauss sum is a positive real.
  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (root * root != n) return false;
  const std::complex<double> gs = oracle::gauss_sum(c);
  if (std::abs(gs.imag()) > 1e-6 || gs.real() < 0) return false;
  const auto coords = all_coords(a.orders);
  std::vector<char> iso(n);
  for (std::uint64_t x = 0; x < n; ++x) iso[x] = q_value(c, coords[x]).numerator() == 0;
  std::set<std::vector<char>> seen;
  std::function<bool(const std::vector<char>&, std::uint64_t)> grow = [&](const std::vector<char>& h,
                                                                         std::uint64_t size) {
    if (size * size == n) return true;
    if (size * size > n || !seen.insert(h).second) return false;
    for (std::uint64_t x = 1; x < n; ++x) {
      if (h[x] || !iso[x]) continue;
      std::vector<char> next = h;
      std::vector<std::uint64_t> members;
      for (std::uint64_t y = 0; y < n; ++y)
        if (h[y]) members.push_back(y);
      bool ok = true;
      // Close under adding multiples of x.
      for (std::size_t i = 0; i < members.size() && ok; ++i) {
        for (std::uint64_t m = x; m != 0; m = a.add(m, x)) {
          const std::uint64_t z = a.add(members[i], m);
          if (!iso[z]) {
            ok = false;
            break;
          }
          if (!next[z]) {
            next[z] = 1;
            members.push_back(z);
          }
        }
      }
      if (!ok) continue;
      if (grow(next, members.size())) return true;
    }
    return false;
  };
  std::vector<char> start(n, 0);
  start[0] = 1;
  return grow(start, 1);
}

// Exact determinant by Bareiss elimination in 128-bit arithmetic.
inline __int128 determinant(const wittkit::IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

}  // namespace oracle
