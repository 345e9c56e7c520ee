#include "wittkit/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t parse_order(const Line& line, const Token& tok) {
  std::int64_t v = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError(line.number, tok.column, "expected an integer, got '" + tok.text + "'");
  if (v < 2) throw ParseError(line.number, tok.column, "cyclic factor order must be >= 2");
  return v;
}

RationalMod1 parse_fraction(const Line& line, const Token& tok) {
  try {
    return RationalMod1::parse(tok.text);
  } catch (const UserError&) {
    throw ParseError(line.number, tok.column, "expected a fraction a/b, got '" + tok.text + "'");
  }
}

const Line& expect_keyword(const std::vector<Line>& lines, std::size_t at, const char* keyword,
                           std::size_t last_line) {
  if (at >= lines.size()) throw ParseError(last_line + 1, 1, std::string("missing '") + keyword + "' line");
  const Line& line = lines[at];
  if (line.tokens.front().text != keyword) {
    throw ParseError(line.number, line.tokens.front().column,
                     std::string("expected '") + keyword + "', got '" + line.tokens.front().text + "'");
  }
  return line;
}

}  // namespace

PreMetricGroup parse_metric_group(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  const Line& group_line = expect_keyword(lines, 0, "group", 0);
  std::vector<std::int64_t> orders;
  for (std::size_t i = 1; i < group_line.tokens.size(); ++i) orders.push_back(parse_order(group_line, group_line.tokens[i]));
  const std::size_t k = orders.size();

  const Line& q_line = expect_keyword(lines, 1, "q", group_line.number);
  if (q_line.tokens.size() - 1 != k) {
    const std::size_t col = q_line.tokens.size() > k + 1 ? q_line.tokens[k + 1].column : q_line.tokens.back().column;
    throw ParseError(q_line.number, col,
                     "expected " + std::to_string(k) + " values of q, got " + std::to_string(q_line.tokens.size() - 1));
  }
  std::vector<RationalMod1> q;
  for (std::size_t i = 1; i < q_line.tokens.size(); ++i) q.push_back(parse_fraction(q_line, q_line.tokens[i]));

  const std::size_t pairs = k * (k > 0 ? k - 1 : 0) / 2;
  std::vector<RationalMod1> b;
  std::size_t next = 2;
  if (k >= 2 || (lines.size() > 2 && lines[2].tokens.front().text == "b")) {
    const Line& b_line = expect_keyword(lines, 2, "b", q_line.number);
    if (b_line.tokens.size() - 1 != pairs) {
      const std::size_t col =
          b_line.tokens.size() > pairs + 1 ? b_line.tokens[pairs + 1].column : b_line.tokens.back().column;
      throw ParseError(b_line.number, col,
                       "expected " + std::to_string(pairs) + " pairings, got " + std::to_string(b_line.tokens.size() - 1));
    }
    for (std::size_t i = 1; i < b_line.tokens.size(); ++i) b.push_back(parse_fraction(b_line, b_line.tokens[i]));
    next = 3;
  }
  if (next < lines.size()) {
    throw ParseError(lines[next].number, lines[next].tokens.front().column, "unexpected trailing content");
  }
  return PreMetricGroup::build(FinAbGroup(std::move(orders)), std::move(q), std::move(b));
}

PreMetricGroup parse_metric_group(const std::string& text) {
  std::istringstream in(text);
  return parse_metric_group(in);
}

PreMetricGroup read_metric_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot open '" + path + "'");
  return parse_metric_group(in);
}

std::string format_metric_group(const PreMetricGroup& c) {
  std::ostringstream os;
  os << "group";
  for (std::int64_t n : c.group().factor_orders()) os << " " << n;
  os << "\nq";
  for (const auto& r : c.q_diag()) os << " " << r;
  os << "\n";
  if (c.group().rank() >= 2) {
    os << "b";
    for (const auto& r : c.b_upper()) os << " " << r;
    os << "\n";
  }
  return os.str();
}

}  // namespace wittkit
