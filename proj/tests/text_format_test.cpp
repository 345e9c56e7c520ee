#include <gtest/gtest.h>

#include <random>

#include "wittkit/corpus.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/text_format.hpp"

using namespace wittkit;

namespace {

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_metric_group(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(TextFormat, ParsesWithComments) {
  const auto c = parse_metric_group("# comment\n\ngroup 2 2   # trailing\nq 0 0\nb 1/2\n");
  EXPECT_EQ(c.group().factor_orders(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_TRUE(c.is_nondegenerate());
  EXPECT_EQ(parse_metric_group("group 2\nq 5/4\n"), PreMetricGroup::cyclic(2, 1, 4));
  EXPECT_EQ(parse_metric_group("group 3\nq -1/3\n"), PreMetricGroup::cyclic(3, 2, 3));
}

TEST(TextFormat, RoundTrip) {
  std::mt19937_64 rng(5);
  for (const std::vector<std::int64_t>& o :
       std::vector<std::vector<std::int64_t>>{{}, {2}, {6}, {2, 2}, {2, 4, 4}, {3, 9}}) {
    const PreMetricGroup c = o.empty() ? PreMetricGroup() : random_form(FinAbGroup(o), rng);
    EXPECT_EQ(parse_metric_group(format_metric_group(c)), c) << format_metric_group(c);
  }
}

TEST(TextFormat, ErrorsCarryPositions) {
  expect_parse_error("grup 2\n", 1, 1);
  expect_parse_error("group 2 x\nq 0 0\n", 1, 9);
  expect_parse_error("group 2\nq 1/0\n", 2, 3);
  expect_parse_error("# header\ngroup 2\nq 1/4 1/4\n", 3, 7);
  expect_parse_error("group 2 2\nq 0 0\n", 3, 1);  // missing b line
  expect_parse_error("group 2\n", 2, 1);  // missing q line
  expect_parse_error("group 1\nq 0\n", 1, 7);
}

TEST(TextFormat, IllFormedData) {
  EXPECT_THROW(parse_metric_group("group 2\nq 1/3\n"), IllFormed);
  EXPECT_THROW(read_metric_group_file("/nonexistent/file.mg"), UserError);
}
