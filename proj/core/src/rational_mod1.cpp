#include "wittkit/rational_mod1.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "wittkit/checked.hpp"
#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

void reduce(checked::Wide num, checked::Wide den, std::int64_t& out_num, std::int64_t& out_den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = checked::mod(num, den);
  const checked::Wide g = checked::gcd(num, den);
  out_num = checked::narrow(num / g);
  out_den = checked::narrow(den / g);
}

}  // namespace

RationalMod1::RationalMod1(std::int64_t num, std::int64_t den) {
  if (den == 0) throw UserError("zero denominator");
  reduce(num, den, num_, den_);
}

RationalMod1 RationalMod1::operator-() const {
  RationalMod1 r;
  reduce(-static_cast<checked::Wide>(num_), den_, r.num_, r.den_);
  return r;
}

RationalMod1& RationalMod1::operator+=(const RationalMod1& other) {
  const checked::Wide g = std::gcd(den_, other.den_);
  const checked::Wide den = checked::mul(den_ / g, other.den_);
  const checked::Wide num = checked::add(checked::mul(num_, other.den_ / g),
                                         checked::mul(other.num_, den_ / g));
  reduce(num, den, num_, den_);
  return *this;
}

RationalMod1& RationalMod1::operator-=(const RationalMod1& other) { return *this += -other; }

RationalMod1& RationalMod1::operator*=(std::int64_t n) {
  // Reduce n modulo den first; the result only depends on n mod den.
  const checked::Wide m = checked::mod(n, den_);
  reduce(checked::mul(num_, m), den_, num_, den_);
  return *this;
}

std::strong_ordering operator<=>(const RationalMod1& a, const RationalMod1& b) {
  const checked::Wide lhs = static_cast<checked::Wide>(a.num_) * b.den_;
  const checked::Wide rhs = static_cast<checked::Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RationalMod1::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalMod1 RationalMod1::parse(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || ptr != last) {
      throw UserError("not a fraction: '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  const auto slash = view.find('/');
  if (slash == std::string_view::npos) return RationalMod1(parse_int(view), 1);
  const std::int64_t den = parse_int(view.substr(slash + 1));
  if (den == 0) throw UserError("zero denominator in '" + text + "'");
  return RationalMod1(parse_int(view.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const RationalMod1& r) { return os << r.to_string(); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  return checked::narrow(checked::mul(a / g, b));
}

}  // namespace wittkit
