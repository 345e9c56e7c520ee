#include "wittkit/smith.hpp"

#include <algorithm>
#include <sstream>

#include "wittkit/checked.hpp"
#include "wittkit/errors.hpp"

namespace wittkit {

using checked::Wide;

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UserError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::append_row(std::span<const std::int64_t> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw UserError("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw UserError("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Wide acc = 0;
      for (std::size_t t = 0; t < a.cols_; ++t) acc = checked::add(acc, checked::mul(a(i, t), b(t, j)));
      out(i, j) = checked::narrow(acc);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::int64_t> SnfResult::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SnfResult::rank() const {
  const auto diag = diagonal();
  return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](std::int64_t x) { return x != 0; }));
}

namespace {

class WideMatrix {
 public:
  WideMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  explicit WideMatrix(const IntMatrix& m) : WideMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) = m(i, j);
  }
  static WideMatrix identity(std::size_t n) {
    WideMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Wide& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Wide at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, Wide factor) {
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) = checked::add(at(dst, j), checked::mul(factor, at(src, j)));
  }
  void add_col(std::size_t dst, std::size_t src, Wide factor) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) = checked::add(at(i, dst), checked::mul(factor, at(i, src)));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
  }

  IntMatrix narrow() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = checked::narrow(at(i, j));
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Wide> data_;
};

// Tracks a = u * source * v together with v^-1 while applying elementary
// operations to a.
struct Reducer {
  WideMatrix a;
  WideMatrix u;
  WideMatrix v;
  WideMatrix vinv;

  explicit Reducer(const IntMatrix& m)
      : a(m), u(WideMatrix::identity(m.rows())), v(WideMatrix::identity(m.cols())),
        vinv(WideMatrix::identity(m.cols())) {}

  void add_row(std::size_t dst, std::size_t src, Wide f) {
    a.add_row(dst, src, f);
    u.add_row(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, Wide f) {
    a.add_col(dst, src, f);
    v.add_col(dst, src, f);
    // (v E)^-1 = E^-1 v^-1, E^-1 subtracts f * row dst from row src.
    vinv.add_row(src, dst, -f);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
    vinv.swap_rows(x, y);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    u.negate_row(r);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool finished = false;
    while (true) {
      // Pivot: minimal nonzero |entry| in the trailing block, first in row-major order.
      std::size_t pi = rows;
      std::size_t pj = cols;
      Wide best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const Wide x = checked::abs(r.a.at(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) {
        finished = true;
        break;
      }
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
      const Wide p = r.a.at(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Wide q = r.a.at(i, t) / p;
        if (q != 0) r.add_row(i, t, -q);
        if (r.a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Wide q = r.a.at(t, j) / p;
        if (q != 0) r.add_col(j, t, -q);
        if (r.a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; the pivot must divide the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (r.a.at(i, j) % p != 0) {
            r.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (finished) break;
    if (r.a.at(t, t) < 0) r.negate_row(t);
  }

  SnfResult out;
  out.source = m;
  out.d = r.a.narrow();
  out.u = r.u.narrow();
  out.v = r.v.narrow();
  out.v_inverse = r.vinv.narrow();
  return out;
}

QuotientBasis subquotient_basis(const FinAbGroup& g, std::span<const Element> upper,
                                std::span<const Element> lower) {
  const std::size_t k = g.rank();
  QuotientBasis out;
  if (k == 0) return out;

  // Lattices in Z^k: generators plus the relations n_i e_i.
  auto lattice = [&](std::span<const Element> gens) {
    IntMatrix m(0, k);
    for (const Element& x : gens) m.append_row(x.coords);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int64_t> row(k, 0);
      row[i] = g.factor_orders()[i];
      m.append_row(row);
    }
    return m;
  };

  // Basis of the upper lattice: rows of diag(d) * v^-1.
  const SnfResult up = smith_normal_form(lattice(upper));
  const auto dup = up.diagonal();
  IntMatrix basis(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (dup[i] == 0) throw InternalError("upper lattice is not of full rank");
    for (std::size_t j = 0; j < k; ++j) {
      basis(i, j) = checked::narrow(checked::mul(dup[i], up.v_inverse(i, j)));
    }
  }

  // Coordinates of the lower lattice in that basis: c = (x v) / d.
  const IntMatrix low = lattice(lower);
  const IntMatrix xv = low * up.v;
  IntMatrix rel(low.rows(), k);
  for (std::size_t r = 0; r < low.rows(); ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      if (xv(r, i) % dup[i] != 0) throw UserError("subquotient_basis: lower subgroup is not contained in upper");
      rel(r, i) = xv(r, i) / dup[i];
    }
  }

  const SnfResult q = smith_normal_form(rel);
  const auto dq = q.diagonal();
  const IntMatrix new_basis = q.v_inverse * basis;
  for (std::size_t i = 0; i < k; ++i) {
    if (dq[i] == 0) throw InternalError("subquotient is infinite");
    if (dq[i] == 1) continue;
    out.orders.push_back(dq[i]);
    out.generators.push_back(g.make(new_basis.row(i)));
  }
  return out;
}

}  // namespace wittkit
