#include "wittkit/metric_group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "wittkit/checked.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/smith.hpp"

namespace wittkit {

using checked::Wide;

namespace {

std::int64_t mod_add(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(checked::mod(static_cast<Wide>(a) + b, m));
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(checked::mod(static_cast<Wide>(a) * b, m));
}

std::int64_t numerator_over(const RationalMod1& r, std::int64_t den) { return r.num() * (den / r.den()); }

}  // namespace

std::string to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::Nondegenerate:
      return "nondegenerate";
    case Degeneracy::SlightlyDegenerate:
      return "slightly-degenerate";
    case Degeneracy::Degenerate:
      return "degenerate";
  }
  return "?";
}

PreMetricGroup::PreMetricGroup() : q_num_{0} {}

PreMetricGroup PreMetricGroup::cyclic(std::int64_t n, std::int64_t num, std::int64_t den) {
  return build(FinAbGroup({n}), {RationalMod1(num, den)});
}

PreMetricGroup PreMetricGroup::build(FinAbGroup group, std::vector<RationalMod1> q_diag,
                                     std::vector<RationalMod1> b_upper) {
  const std::size_t k = group.rank();
  if (q_diag.size() != k) {
    throw UserError("expected " + std::to_string(k) + " values of q on generators, got " +
                    std::to_string(q_diag.size()));
  }
  const std::size_t pairs = k * (k - (k > 0 ? 1 : 0)) / 2;
  if (b_upper.empty()) b_upper.assign(pairs, RationalMod1());
  if (b_upper.size() != pairs) {
    throw UserError("expected " + std::to_string(pairs) + " pairings b(e_i,e_j), got " +
                    std::to_string(b_upper.size()));
  }
  if (group.order() > element_cap()) {
    throw CapExceeded("group order " + std::to_string(group.order()) + " exceeds cap " +
                      std::to_string(element_cap()));
  }

  PreMetricGroup c;
  c.group_ = std::move(group);
  c.q_diag_ = std::move(q_diag);
  c.b_full_.assign(k, std::vector<RationalMod1>(k));
  {
    std::size_t t = 0;
    for (std::size_t i = 0; i < k; ++i) {
      c.b_full_[i][i] = c.q_diag_[i] * 2;
      for (std::size_t j = i + 1; j < k; ++j, ++t) {
        c.b_full_[i][j] = b_upper[t];
        c.b_full_[j][i] = b_upper[t];
      }
    }
  }

  std::int64_t den = 1;
  for (const auto& r : c.q_diag_) den = lcm_checked(den, r.den());
  for (const auto& r : b_upper) den = lcm_checked(den, r.den());
  c.den_ = den;

  const auto& n = c.group_.factor_orders();
  std::vector<std::int64_t> qn(k);
  c.b_num_.assign(k, std::vector<std::int64_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    qn[i] = numerator_over(c.q_diag_[i], den);
    for (std::size_t j = 0; j < k; ++j) c.b_num_[i][j] = numerator_over(c.b_full_[i][j], den);
  }

  // Descent conditions: n_j b(e_i, e_j) = 0 and n_i^2 q(e_i) = 0.
  for (std::size_t i = 0; i < k; ++i) {
    if (mod_mul(mod_mul(n[i], n[i], den), qn[i], den) != 0) {
      throw IllFormed("n^2 q(e_" + std::to_string(i + 1) + ") != 0 for q(e_" + std::to_string(i + 1) +
                      ") = " + c.q_diag_[i].to_string() + " on Z/" + std::to_string(n[i]));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (mod_mul(n[j], c.b_num_[i][j], den) != 0) {
        throw IllFormed("pairing b(e_" + std::to_string(i + 1) + ",e_" + std::to_string(j + 1) + ") = " +
                        c.b_full_[i][j].to_string() + " is not killed by the order of e_" + std::to_string(j + 1));
      }
    }
  }

  // Fill the table in odometer order while tracking L_i(x) = b(x, e_i).
  const std::uint64_t order = c.group_.order();
  std::vector<std::uint64_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::uint64_t>(n[i]);

  c.q_num_.assign(order, 0);
  std::vector<std::int64_t> x(k, 0);
  std::vector<std::int64_t> lin(k, 0);
  std::vector<std::uint64_t> radical_indices;
  auto on_radical = [&] { return std::all_of(lin.begin(), lin.end(), [](std::int64_t v) { return v == 0; }); };

  for (std::uint64_t idx = 0; idx < order; ++idx) {
    if (idx > 0) {
      // Advance the odometer.
      std::size_t p = k;
      for (std::size_t j = k; j-- > 0;) {
        if (x[j] == n[j] - 1) {
          x[j] = 0;
          for (std::size_t i = 0; i < k; ++i) lin[i] = mod_add(lin[i], -mod_mul(n[j] - 1, c.b_num_[i][j], den), den);
        } else {
          ++x[j];
          for (std::size_t i = 0; i < k; ++i) lin[i] = mod_add(lin[i], c.b_num_[i][j], den);
          p = j;
          break;
        }
      }
      // q(z + e_p) = q(z) + q(e_p) + b(z, e_p), with b(z, e_p) = L_p(x) - 2 q(e_p).
      const std::int64_t qz = c.q_num_[idx - stride[p]];
      c.q_num_[idx] = mod_add(mod_add(qz, -qn[p], den), lin[p], den);
    }
    if (on_radical()) radical_indices.push_back(idx);
  }

  // Polarization on every element and generator, plus q(-x) = q(x).
  std::fill(x.begin(), x.end(), 0);
  std::fill(lin.begin(), lin.end(), 0);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    if (idx > 0) {
      for (std::size_t j = k; j-- > 0;) {
        if (x[j] == n[j] - 1) {
          x[j] = 0;
          for (std::size_t i = 0; i < k; ++i) lin[i] = mod_add(lin[i], -mod_mul(n[j] - 1, c.b_num_[i][j], den), den);
        } else {
          ++x[j];
          for (std::size_t i = 0; i < k; ++i) lin[i] = mod_add(lin[i], c.b_num_[i][j], den);
          break;
        }
      }
    }
    std::uint64_t neg = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t shifted =
          x[i] == n[i] - 1 ? idx - static_cast<std::uint64_t>(n[i] - 1) * stride[i] : idx + stride[i];
      const std::int64_t lhs = mod_add(mod_add(c.q_num_[shifted], -c.q_num_[idx], den), -qn[i], den);
      if (lhs != lin[i]) {
        throw IllFormed("q(x+e_" + std::to_string(i + 1) + ") - q(x) - q(e_" + std::to_string(i + 1) +
                        ") != b(x,e_" + std::to_string(i + 1) + ") at x = " + Element{x}.to_string());
      }
      neg += static_cast<std::uint64_t>(x[i] == 0 ? 0 : n[i] - x[i]) * stride[i];
    }
    if (c.q_num_[neg] != c.q_num_[idx]) throw IllFormed("q(-x) != q(x) at x = " + Element{x}.to_string());
  }

  if (radical_indices.size() == 1) {
    c.degeneracy_ = Degeneracy::Nondegenerate;
  } else if (radical_indices.size() == 2 && c.q_at(radical_indices[1]) == RationalMod1(1, 2)) {
    c.degeneracy_ = Degeneracy::SlightlyDegenerate;
  } else {
    c.degeneracy_ = Degeneracy::Degenerate;
  }
  return c;
}

std::vector<RationalMod1> PreMetricGroup::b_upper() const {
  std::vector<RationalMod1> out;
  for (std::size_t i = 0; i < b_full_.size(); ++i)
    for (std::size_t j = i + 1; j < b_full_.size(); ++j) out.push_back(b_full_[i][j]);
  return out;
}

RationalMod1 PreMetricGroup::b_generators(std::size_t i, std::size_t j) const { return b_full_.at(i).at(j); }

RationalMod1 PreMetricGroup::q(const Element& x) const {
  if (!group_.contains(x)) throw UserError("element " + x.to_string() + " is not in " + group_.to_string());
  return q_at(group_.index_of(x));
}

RationalMod1 PreMetricGroup::q_at(std::uint64_t index) const { return RationalMod1(q_num_.at(index), den_); }

std::int64_t PreMetricGroup::bilinear_numerator(const Element& x, const Element& y) const {
  Wide acc = 0;
  for (std::size_t i = 0; i < b_num_.size(); ++i) {
    if (x.coords[i] == 0) continue;
    Wide row = 0;
    for (std::size_t j = 0; j < b_num_.size(); ++j) row += static_cast<Wide>(y.coords[j]) * b_num_[i][j];
    acc = checked::mod(acc + checked::mod(row, den_) * x.coords[i], den_);
  }
  return static_cast<std::int64_t>(acc);
}

std::string PreMetricGroup::to_string() const {
  std::ostringstream os;
  os << group_.to_string() << " q=(";
  for (std::size_t i = 0; i < q_diag_.size(); ++i) os << (i ? "," : "") << q_diag_[i];
  os << ")";
  const auto b = b_upper();
  if (!b.empty()) {
    os << " b=(";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
  }
  return os.str();
}

RationalMod1 bilinear(const PreMetricGroup& c, const Element& x, const Element& y) {
  const auto& g = c.group();
  if (!g.contains(x) || !g.contains(y)) throw UserError("bilinear: element not in group");
  return RationalMod1(c.bilinear_numerator(x, y), c.denominator());
}

namespace {

// Elements orthogonal to every given element, as sorted indices.
std::vector<std::uint64_t> orthogonal_indices(const PreMetricGroup& c, std::span<const Element> against) {
  const auto& g = c.group();
  const std::size_t k = g.rank();
  const std::int64_t den = c.denominator();
  // w[h][j] = b(e_j, h) numerators.
  std::vector<std::vector<std::int64_t>> w;
  for (const Element& h : against) {
    std::vector<std::int64_t> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = c.bilinear_numerator(g.generator(j), h);
    if (std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) w.push_back(std::move(row));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
    const Element x = g.element_at(idx);
    bool orth = true;
    for (const auto& row : w) {
      Wide acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += static_cast<Wide>(x.coords[j]) * row[j];
      if (checked::mod(acc, den) != 0) {
        orth = false;
        break;
      }
    }
    if (orth) out.push_back(idx);
  }
  return out;
}

}  // namespace

Subgroup radical(const PreMetricGroup& c) {
  const auto& g = c.group();
  std::vector<Element> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
  return subgroup_from_indices(g, orthogonal_indices(c, gens));
}

Subgroup orthogonal_complement(const PreMetricGroup& c, const Subgroup& h) {
  if (!(h.group() == c.group())) throw UserError("orthogonal_complement: subgroup of a different group");
  return subgroup_from_indices(c.group(), orthogonal_indices(c, h.generators()));
}

GaussSumValue gauss_sum(const PreMetricGroup& c) {
  const std::int64_t den = c.denominator();
  std::map<std::int64_t, std::uint64_t> histogram;
  for (std::uint64_t idx = 0; idx < c.order(); ++idx) ++histogram[c.q_numerator(idx)];
  double re = 0.0;
  double im = 0.0;
  for (const auto& [num, count] : histogram) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    re += static_cast<double>(count) * std::cos(angle);
    im += static_cast<double>(count) * std::sin(angle);
  }
  GaussSumValue out;
  out.magnitude_sq = re * re + im * im;
  if (out.magnitude_sq < 1e-9) {
    if (c.is_nondegenerate()) throw SnapFailed("Gauss sum of a nondegenerate form vanished");
    return out;
  }
  double turns = std::atan2(im, re) / (2.0 * std::numbers::pi);
  if (turns < 0) turns += 1.0;
  out.argument_turns = turns;
  const double eighths = std::round(turns * 8.0);
  if (std::abs(turns - eighths / 8.0) < 1e-6) {
    out.argument = RationalMod1(static_cast<std::int64_t>(eighths), 8);
  } else if (c.is_nondegenerate()) {
    throw SnapFailed("Gauss sum argument " + std::to_string(turns) + " is not a multiple of 1/8");
  }
  return out;
}

PreMetricGroup direct_sum(const PreMetricGroup& a, const PreMetricGroup& b) {
  std::vector<std::int64_t> orders = a.group().factor_orders();
  orders.insert(orders.end(), b.group().factor_orders().begin(), b.group().factor_orders().end());
  std::vector<RationalMod1> q = a.q_diag();
  q.insert(q.end(), b.q_diag().begin(), b.q_diag().end());
  const std::size_t ka = a.group().rank();
  const std::size_t k = orders.size();
  std::vector<RationalMod1> bu;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (j < ka) {
        bu.push_back(a.b_generators(i, j));
      } else if (i >= ka) {
        bu.push_back(b.b_generators(i - ka, j - ka));
      } else {
        bu.emplace_back();
      }
    }
  }
  checked::Wide order = checked::mul(a.order(), b.order());
  if (order > static_cast<checked::Wide>(element_cap())) {
    throw CapExceeded("direct sum of order " + std::to_string(static_cast<std::uint64_t>(a.order() * b.order())) +
                      " exceeds cap " + std::to_string(element_cap()));
  }
  return PreMetricGroup::build(FinAbGroup(std::move(orders)), std::move(q), std::move(bu));
}

PreMetricGroup direct_power(const PreMetricGroup& a, int n) {
  if (n < 0) return direct_power(reverse(a), -n);
  PreMetricGroup out;
  for (int i = 0; i < n; ++i) out = direct_sum(out, a);
  return out;
}

PreMetricGroup reverse(const PreMetricGroup& c) {
  std::vector<RationalMod1> q;
  for (const auto& r : c.q_diag()) q.push_back(-r);
  std::vector<RationalMod1> b;
  for (const auto& r : c.b_upper()) b.push_back(-r);
  return PreMetricGroup::build(c.group(), std::move(q), std::move(b));
}

bool is_isotropic(const PreMetricGroup& c, const Subgroup& h) {
  if (!(h.group() == c.group())) return false;
  return std::all_of(h.indices().begin(), h.indices().end(),
                     [&](std::uint64_t idx) { return c.q_vanishes_at(idx); });
}

std::vector<Subgroup> isotropic_subgroups(const PreMetricGroup& c) {
  const auto& g = c.group();
  if (g.order() > kSubgroupEnumerationCap) {
    throw CapExceeded("isotropic_subgroups: group order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(kSubgroupEnumerationCap));
  }
  // An isotropic subgroup is generated by pairwise orthogonal isotropic
  // elements, so joins of isotropic cyclic subgroups reach all of them.
  const auto& n = g.factor_orders();
  auto add_idx = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    std::uint64_t mult = 1;
    for (std::size_t i = n.size(); i-- > 0;) {
      const auto m = static_cast<std::uint64_t>(n[i]);
      r += ((a % m + b % m) % m) * mult;
      a /= m;
      b /= m;
      mult *= m;
    }
    return r;
  };

  struct Cyclic {
    Element gen;
    std::uint64_t index;
    std::vector<std::uint64_t> multiples;
  };
  std::vector<Cyclic> cyclics;
  {
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t idx = 1; idx < g.order(); ++idx) {
      if (!c.q_vanishes_at(idx)) continue;
      std::vector<std::uint64_t> multiples{0};
      for (std::uint64_t y = idx; y != 0; y = add_idx(y, idx)) multiples.push_back(y);
      std::sort(multiples.begin(), multiples.end());
      if (seen.insert(multiples).second) cyclics.push_back({g.element_at(idx), idx, std::move(multiples)});
    }
  }

  std::map<std::vector<std::uint64_t>, std::vector<Element>> found{{{0}, {}}};
  std::vector<decltype(found)::const_iterator> frontier{found.begin()};
  std::vector<char> mark(g.order(), 0);
  while (!frontier.empty()) {
    std::vector<decltype(found)::const_iterator> next;
    for (const auto& node : frontier) {
      const auto& [indices, gens] = *node;
      for (const Cyclic& cy : cyclics) {
        if (std::binary_search(indices.begin(), indices.end(), cy.index)) continue;
        const bool orthogonal = std::all_of(gens.begin(), gens.end(),
                                            [&](const Element& s) { return c.bilinear_numerator(s, cy.gen) == 0; });
        if (!orthogonal) continue;
        std::vector<std::uint64_t> joined;
        for (std::uint64_t s : indices) {
          for (std::uint64_t m : cy.multiples) {
            const std::uint64_t y = add_idx(s, m);
            if (!mark[y]) {
              mark[y] = 1;
              joined.push_back(y);
            }
          }
        }
        for (std::uint64_t y : joined) mark[y] = 0;
        std::sort(joined.begin(), joined.end());
        if (found.count(joined)) continue;
        std::vector<Element> grown = gens;
        grown.push_back(cy.gen);
        next.push_back(found.emplace(std::move(joined), std::move(grown)).first);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [indices, gens] : found) out.emplace_back(g, gens, indices);
  return out;
}

namespace {

Condensation condense_impl(const PreMetricGroup& c, const Subgroup& h, bool with_projection) {
  if (!is_isotropic(c, h)) throw NotIsotropic("condense: q does not vanish on the subgroup");
  const auto& g = c.group();
  Subgroup perp = orthogonal_complement(c, h);
  const QuotientBasis basis = subquotient_basis(g, perp.generators(), h.generators());

  std::vector<Element> lifts;
  for (const Element& gen : basis.generators) {
    std::uint64_t best = ~std::uint64_t{0};
    for (std::uint64_t hi : h.indices()) best = std::min(best, g.index_of(g.add(gen, g.element_at(hi))));
    lifts.push_back(g.element_at(best));
  }
  std::vector<RationalMod1> q;
  std::vector<RationalMod1> b;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    q.push_back(c.q(lifts[i]));
    for (std::size_t j = i + 1; j < lifts.size(); ++j) b.push_back(bilinear(c, lifts[i], lifts[j]));
  }
  PreMetricGroup result = PreMetricGroup::build(FinAbGroup(basis.orders), std::move(q), std::move(b));

  if (result.order() * h.size() != perp.size()) throw InternalError("condense: |H^perp / H| mismatch");
  if (c.is_nondegenerate() && result.order() * h.size() * h.size() != c.order()) {
    throw InternalError("condense: |A| / |H|^2 mismatch for a nondegenerate form");
  }

  Condensation out{std::move(result), std::move(perp), std::move(lifts), {}};
  if (with_projection) {
    const auto& qg = out.result.group();
    out.projection.assign(g.order(), Condensation::kNotInPerp);
    std::uint64_t assigned = 0;
    for (std::uint64_t qi = 0; qi < qg.order(); ++qi) {
      const Element coords = qg.element_at(qi);
      Element rep = g.identity();
      for (std::size_t i = 0; i < coords.coords.size(); ++i) {
        rep = g.add(rep, g.scale(out.generator_lifts[i], coords.coords[i]));
      }
      for (std::uint64_t hi : h.indices()) {
        auto& slot = out.projection[g.index_of(g.add(rep, g.element_at(hi)))];
        if (slot != Condensation::kNotInPerp) throw InternalError("condense: cosets overlap");
        slot = qi;
        ++assigned;
      }
    }
    if (assigned != out.perp.size()) throw InternalError("condense: cosets do not cover H^perp");
  }
  return out;
}

}  // namespace

PreMetricGroup condense(const PreMetricGroup& c, const Subgroup& h) { return condense_impl(c, h, false).result; }

Condensation condense_with_projection(const PreMetricGroup& c, const Subgroup& h) {
  return condense_impl(c, h, true);
}

std::vector<PreMetricGroup> enumerate_forms(const FinAbGroup& g) {
  const auto& n = g.factor_orders();
  const std::size_t k = n.size();
  // Denominators for each free slot: q(e_i) in (1/2n_i)Z, b(e_i,e_j) in (1/gcd)Z.
  std::vector<std::int64_t> dens;
  for (std::size_t i = 0; i < k; ++i) dens.push_back(2 * n[i]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) dens.push_back(std::gcd(n[i], n[j]));

  std::vector<PreMetricGroup> out;
  std::vector<std::int64_t> slot(dens.size(), 0);
  while (true) {
    std::vector<RationalMod1> q;
    std::vector<RationalMod1> b;
    for (std::size_t s = 0; s < dens.size(); ++s) (s < k ? q : b).emplace_back(slot[s], dens[s]);
    try {
      out.push_back(PreMetricGroup::build(g, std::move(q), std::move(b)));
    } catch (const IllFormed&) {
    }
    std::size_t s = dens.size();
    while (s > 0 && ++slot[s - 1] == dens[s - 1]) slot[--s] = 0;
    if (s == 0) break;
  }
  return out;
}

}  // namespace wittkit
