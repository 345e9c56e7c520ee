#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wittkit/abelian_group.hpp"

namespace wittkit {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::int64_t> row(std::size_t r) const;
  void append_row(std::span<const std::int64_t> values);

  /// Overflow-checked product.
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// u * source * v == d, with u and v unimodular and the diagonal of d a
/// non-negative divisibility chain (zeros last).
struct SnfResult {
  IntMatrix source;
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inverse;

  std::vector<std::int64_t> diagonal() const;
  std::size_t rank() const;
};

/// Smith normal form. Pivots are minimal nonzero absolute values, ties broken
/// by row-major position. Intermediate arithmetic is 128-bit and checked;
/// throws Overflow if anything escapes 64 bits.
SnfResult smith_normal_form(const IntMatrix& m);

/// Cyclic decomposition of a subquotient Upper / Lower of a finite abelian
/// group, where Upper and Lower are the subgroups generated by the given
/// elements and Lower is contained in Upper.
struct QuotientBasis {
  /// Orders of the cyclic factors (all >= 2), in divisibility order.
  std::vector<std::int64_t> orders;
  /// Elements of the ambient group projecting onto the cyclic generators.
  std::vector<Element> generators;
};

QuotientBasis subquotient_basis(const FinAbGroup& g, std::span<const Element> upper,
                                std::span<const Element> lower);

}  // namespace wittkit
