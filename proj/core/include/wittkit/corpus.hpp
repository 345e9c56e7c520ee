#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wittkit/metric_group.hpp"

namespace wittkit {

/// Every form on every group of order <= max_order, with groups taken in
/// invariant-factor form and listed by increasing order.
std::vector<PreMetricGroup> forms_up_to_order(std::int64_t max_order, bool nondegenerate_only);

/// Uniformly chosen generator data, retried until it defines a form.
PreMetricGroup random_form(const FinAbGroup& g, std::mt19937_64& rng);

/// Random nondegenerate form, or nullopt if none turned up within the
/// given number of attempts.
std::optional<PreMetricGroup> random_nondegenerate_form(const FinAbGroup& g, std::mt19937_64& rng, int attempts = 500);

}  // namespace wittkit
