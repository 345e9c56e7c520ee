#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace wittkit {

/// An element of Q/Z stored as the reduced fraction num/den with
/// 0 <= num < den. This is the exponent of a root of unity: the value
/// x stands for exp(2 pi i x).
class RationalMod1 {
 public:
  constexpr RationalMod1() = default;

  /// Reduces num/den into [0, 1). Throws UserError if den == 0.
  RationalMod1(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Order of the element in Q/Z, i.e. the denominator.
  std::int64_t order() const noexcept { return den_; }

  RationalMod1 operator-() const;
  RationalMod1& operator+=(const RationalMod1& other);
  RationalMod1& operator-=(const RationalMod1& other);
  RationalMod1& operator*=(std::int64_t n);

  friend RationalMod1 operator+(RationalMod1 a, const RationalMod1& b) { return a += b; }
  friend RationalMod1 operator-(RationalMod1 a, const RationalMod1& b) { return a -= b; }
  friend RationalMod1 operator*(RationalMod1 a, std::int64_t n) { return a *= n; }
  friend RationalMod1 operator*(std::int64_t n, RationalMod1 a) { return a *= n; }

  friend bool operator==(const RationalMod1&, const RationalMod1&) = default;
  /// Orders by value in [0, 1).
  friend std::strong_ordering operator<=>(const RationalMod1& a, const RationalMod1& b);

  /// "a/b", or "0" for zero.
  std::string to_string() const;

  /// Parses "a/b" or "a" (either may be negative) and reduces mod 1.
  static RationalMod1 parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RationalMod1& r);

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace wittkit
