#pragma once

#include <iosfwd>
#include <string>

#include "wittkit/metric_group.hpp"

namespace wittkit {

/// Metric-group text format, one item per line, '#' starts a comment:
///
///   group n1 n2 ... nk
///   q a1/b1 ... ak/bk
///   b c12/d12 c13/d13 ...      (upper triangle, row-major; omitted when k <= 1)
///
/// Fractions are reduced mod 1. Syntax errors throw ParseError with the
/// 1-based line and column; data that is not a quadratic form throws IllFormed.
PreMetricGroup parse_metric_group(std::istream& in);
PreMetricGroup parse_metric_group(const std::string& text);
PreMetricGroup read_metric_group_file(const std::string& path);

std::string format_metric_group(const PreMetricGroup& c);

}  // namespace wittkit
