#include "wittkit/presentation.hpp"

#include <numeric>

#include "wittkit/checked.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/sl2.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

GroupStructure analyze(const AbelianPresentation& p) {
  const std::size_t n = p.generator_names.size();
  if (p.relations.rows() > 0 && p.relations.cols() != n) {
    throw UserError("relation rows must have one entry per generator");
  }
  GroupStructure s;
  if (p.relations.rows() == 0) {
    s.free_rank = n;
    s.coordinate_map = IntMatrix::identity(n);
    s.moduli.assign(n, 0);
    return s;
  }
  const SnfResult snf = smith_normal_form(p.relations);
  const auto diag = snf.diagonal();
  s.coordinate_map = snf.v;
  s.moduli.assign(n, 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    s.moduli[i] = diag[i];
    if (diag[i] > 1) s.invariant_factors.push_back(diag[i]);
  }
  s.free_rank = n - snf.rank();
  return s;
}

std::optional<std::int64_t> element_order(const GroupStructure& s, const std::vector<std::int64_t>& vector) {
  const std::size_t n = s.moduli.size();
  if (vector.size() != n) throw UserError("vector length does not match generator count");
  IntMatrix row(0, n);
  row.append_row(vector);
  const IntMatrix y = row * s.coordinate_map;
  std::int64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = s.moduli[i];
    const std::int64_t yi = y(0, i);
    if (d == 0) {
      if (yi != 0) return std::nullopt;
      continue;
    }
    const std::int64_t local = d / std::gcd(d, static_cast<std::int64_t>(checked::mod(yi, d)));
    order = checked::narrow(checked::mul(order / std::gcd(order, local), local));
  }
  return order;
}

std::optional<std::int64_t> element_order(const AbelianPresentation& p, const std::vector<std::int64_t>& vector) {
  return element_order(analyze(p), vector);
}

AbelianPresentation sl2_witt_presentation(int max_level) {
  if (max_level < 1) throw UserError("max level must be >= 1");
  AbelianPresentation p;
  const auto n = static_cast<std::size_t>(max_level);
  for (int k = 1; k <= max_level; ++k) p.generator_names.push_back("x" + std::to_string(k));
  p.relations = IntMatrix(0, n);

  struct Term {
    int level;
    std::int64_t coeff;
  };
  const std::vector<std::vector<Term>> relations = {
      {{1, 8}},                    // [C1]^8 = 1
      {{2, 16}},                   // [C2]^16 = 1
      {{4, 4}},                    // [C4]^4 = 1
      {{6, 2}, {2, -3}},           // [C6]^2 = [C2]^3
      {{10, 1}, {2, -7}},          // [C10] = [C2]^7
      {{8, 1}, {3, 2}, {1, -2}},   // [C8] = [C3]^-2 [C1]^2
      {{28, 1}, {3, -1}, {1, 1}},  // [C28] = [C3] [C1]^-1
  };
  for (const auto& rel : relations) {
    bool fits = true;
    for (const Term& t : rel) fits = fits && t.level <= max_level;
    if (!fits) continue;
    std::vector<std::int64_t> row(n, 0);
    for (const Term& t : rel) row[static_cast<std::size_t>(t.level - 1)] += t.coeff;
    p.relations.append_row(row);
  }
  return p;
}

std::string format_relation(const AbelianPresentation& p, std::size_t row) {
  std::string out;
  for (std::size_t j = 0; j < p.relations.cols(); ++j) {
    const std::int64_t e = p.relations(row, j);
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += p.generator_names[j];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return (out.empty() ? std::string("1") : out) + " = 1";
}

bool pointed_part_consistency(int l) {
  if (l < 0) throw UserError("l must be non-negative");
  const PreMetricGroup lhs = sl2::pointed_part_form(2 * l + 1);
  const int copies = l % 2 == 0 ? 1 : 7;  // (-1)^l mod 8
  const PreMetricGroup rhs = direct_power(sl2::pointed_part_form(1), copies);
  // Brute force on the full difference rather than on cached kernels.
  return anisotropic_kernel(direct_sum(lhs, reverse(rhs))).group().is_trivial();
}

}  // namespace wittkit
