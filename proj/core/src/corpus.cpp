#include "wittkit/corpus.hpp"

#include <numeric>

#include "wittkit/errors.hpp"

namespace wittkit {

std::vector<PreMetricGroup> forms_up_to_order(std::int64_t max_order, bool nondegenerate_only) {
  std::vector<PreMetricGroup> out;
  out.emplace_back();  // trivial group
  for (std::int64_t n = 2; n <= max_order; ++n) {
    for (const auto& factors : abelian_groups_of_order(n)) {
      for (auto& form : enumerate_forms(FinAbGroup(factors))) {
        if (!nondegenerate_only || form.is_nondegenerate()) out.push_back(std::move(form));
      }
    }
  }
  return out;
}

PreMetricGroup random_form(const FinAbGroup& g, std::mt19937_64& rng) {
  const auto& n = g.factor_orders();
  const std::size_t k = n.size();
  while (true) {
    std::vector<RationalMod1> q;
    std::vector<RationalMod1> b;
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::int64_t> pick(0, 2 * n[i] - 1);
      q.emplace_back(pick(rng), 2 * n[i]);
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::int64_t d = std::gcd(n[i], n[j]);
        std::uniform_int_distribution<std::int64_t> pick(0, d - 1);
        b.emplace_back(pick(rng), d);
      }
    }
    try {
      return PreMetricGroup::build(g, std::move(q), std::move(b));
    } catch (const IllFormed&) {
    }
  }
}

std::optional<PreMetricGroup> random_nondegenerate_form(const FinAbGroup& g, std::mt19937_64& rng, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    PreMetricGroup c = random_form(g, rng);
    if (c.is_nondegenerate()) return c;
  }
  return std::nullopt;
}

}  // namespace wittkit
