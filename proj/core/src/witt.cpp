#include "wittkit/witt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

using FormKey = std::tuple<std::vector<std::int64_t>, std::vector<RationalMod1>, std::vector<RationalMod1>>;

FormKey key_of(const PreMetricGroup& c) { return {c.group().factor_orders(), c.q_diag(), c.b_upper()}; }

class KernelMemo {
 public:
  std::optional<PreMetricGroup> find(const FormKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void store(FormKey key, const PreMetricGroup& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<FormKey, PreMetricGroup> table_;
};

KernelMemo& memo() {
  static KernelMemo instance;
  return instance;
}

// Minimal nonzero isotropic element by (order, index), if any.
std::optional<Element> pick_isotropic(const PreMetricGroup& c) {
  const auto& g = c.group();
  std::optional<Element> best;
  std::int64_t best_order = 0;
  for (std::uint64_t idx = 1; idx < g.order(); ++idx) {
    if (!c.q_vanishes_at(idx)) continue;
    Element x = g.element_at(idx);
    const std::int64_t ord = g.element_order(x);
    if (!best || ord < best_order) {
      best = std::move(x);
      best_order = ord;
      if (ord == 2) break;  // nothing smaller, and indices increase
    }
  }
  return best;
}

}  // namespace

bool has_isotropic_vector(const PreMetricGroup& c) {
  for (std::uint64_t idx = 1; idx < c.order(); ++idx) {
    if (c.q_vanishes_at(idx)) return true;
  }
  return false;
}

PreMetricGroup anisotropic_kernel(const PreMetricGroup& c) {
  if (!c.is_nondegenerate()) throw Degenerate("anisotropic_kernel: form is " + to_string(c.degeneracy()));
  FormKey key = key_of(c);
  if (auto hit = memo().find(key)) return *hit;

  PreMetricGroup current = c;
  while (auto x = pick_isotropic(current)) {
    const Element gens[] = {*x};
    const Subgroup h = subgroup_closure(current.group(), gens);
    current = condense(current, h);
  }
  memo().store(std::move(key), current);
  return current;
}

WittClassHandle::WittClassHandle() = default;

WittClassHandle::WittClassHandle(PreMetricGroup representative)
    : rep_(std::move(representative)), aniso_(anisotropic_kernel(rep_)) {}

WittClassHandle witt_add(const WittClassHandle& x, const WittClassHandle& y) {
  return WittClassHandle(direct_sum(x.aniso(), y.aniso()));
}

WittClassHandle witt_negate(const WittClassHandle& x) { return WittClassHandle(reverse(x.aniso())); }

WittClassHandle witt_multiple(const WittClassHandle& x, int n) {
  const WittClassHandle step = n < 0 ? witt_negate(x) : x;
  WittClassHandle acc;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) acc = witt_add(acc, step);
  return acc;
}

bool witt_equal(const WittClassHandle& x, const WittClassHandle& y) {
  // Representatives may be replaced by their kernels: both lie in the class.
  return anisotropic_kernel(direct_sum(x.aniso(), reverse(y.aniso()))).group().is_trivial();
}

std::optional<int> witt_order(const WittClassHandle& x, int max_n) {
  WittClassHandle acc;
  for (int n = 1; n <= max_n; ++n) {
    acc = witt_add(acc, x);
    if (acc.is_trivial()) return n;
  }
  return std::nullopt;
}

namespace {

std::vector<WittClassHandle> compute_ising_pointed() {
  std::vector<PreMetricGroup> candidates = enumerate_forms(FinAbGroup({4}));
  for (auto& f : enumerate_forms(FinAbGroup({2, 2}))) candidates.push_back(std::move(f));

  const RationalMod1 half(1, 2);
  std::vector<WittClassHandle> classes;
  for (const auto& form : candidates) {
    if (!form.is_nondegenerate()) continue;
    bool has_half = false;
    for (std::uint64_t idx = 0; idx < form.order() && !has_half; ++idx) has_half = form.q_at(idx) == half;
    if (!has_half) continue;
    WittClassHandle cls(form);
    const bool seen = std::any_of(classes.begin(), classes.end(),
                                  [&](const WittClassHandle& other) { return witt_equal(cls, other); });
    if (!seen) classes.push_back(std::move(cls));
  }

  // Must be a cyclic group of order 8 under orthogonal sum.
  if (classes.size() != 8) {
    throw InternalError("Ising pointed subgroup has " + std::to_string(classes.size()) + " classes, expected 8");
  }
  auto member = [&](const WittClassHandle& c) {
    return std::any_of(classes.begin(), classes.end(), [&](const WittClassHandle& m) { return witt_equal(c, m); });
  };
  bool cyclic = false;
  for (const auto& gen : classes) {
    if (witt_order(gen, 8) != 8) continue;
    WittClassHandle acc;
    bool closed = true;
    for (int i = 0; i < 8 && closed; ++i) {
      closed = member(acc);
      acc = witt_add(acc, gen);
    }
    if (closed) {
      cyclic = true;
      break;
    }
  }
  if (!cyclic) throw InternalError("Ising pointed subgroup is not cyclic of order 8");
  return classes;
}

}  // namespace

const std::vector<WittClassHandle>& ising_pointed_subgroup() {
  static const std::vector<WittClassHandle> classes = compute_ising_pointed();
  return classes;
}

bool switt_equal(const WittClassHandle& x, const WittClassHandle& y) {
  const WittClassHandle diff = witt_add(x, witt_negate(y));
  const auto& sub = ising_pointed_subgroup();
  return std::any_of(sub.begin(), sub.end(), [&](const WittClassHandle& m) { return witt_equal(diff, m); });
}

std::optional<int> switt_order(const WittClassHandle& x, int max_n) {
  const WittClassHandle zero;
  WittClassHandle acc;
  for (int n = 1; n <= max_n; ++n) {
    acc = witt_add(acc, x);
    if (switt_equal(acc, zero)) return n;
  }
  return std::nullopt;
}

}  // namespace wittkit
