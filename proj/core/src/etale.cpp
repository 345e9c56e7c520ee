#include "wittkit/etale.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

// Subgroup of a factor cut out by H on the block [offset, offset + rank).
Subgroup factor_intersection(const FinAbGroup& product, const Subgroup& h, const FinAbGroup& factor,
                             std::size_t offset) {
  std::vector<std::uint64_t> indices;
  for (const Element& x : h.elements()) {
    bool inside = true;
    for (std::size_t i = 0; i < product.rank() && inside; ++i) {
      const bool in_block = i >= offset && i < offset + factor.rank();
      if (!in_block && x.coords[i] != 0) inside = false;
    }
    if (!inside) continue;
    Element y{{x.coords.begin() + static_cast<std::ptrdiff_t>(offset),
               x.coords.begin() + static_cast<std::ptrdiff_t>(offset + factor.rank())}};
    indices.push_back(factor.index_of(y));
  }
  return subgroup_from_indices(factor, std::move(indices));
}

[[noreturn]] void violation(const Subgroup& h, const std::string& why) {
  std::string elems;
  for (const Element& x : h.elements()) elems += x.to_string();
  throw TheoremViolation("isotropic subgroup {" + elems + "} does not decompose: " + why);
}

}  // namespace

std::vector<EtaleAlgebra> enumerate_etale(const PreMetricGroup& c1, const PreMetricGroup& c2) {
  if (c1.order() * c2.order() > kSubgroupEnumerationCap) {
    throw CapExceeded("enumerate_etale: |A1||A2| = " + std::to_string(c1.order() * c2.order()) + " exceeds " +
                      std::to_string(kSubgroupEnumerationCap));
  }
  const PreMetricGroup product = direct_sum(c1, c2);
  const FinAbGroup& pg = product.group();
  const FinAbGroup& g1 = c1.group();
  const FinAbGroup& g2 = c2.group();
  const std::size_t k1 = g1.rank();

  // Many H share the same factor intersections.
  std::map<std::vector<std::uint64_t>, Condensation> cache1;
  std::map<std::vector<std::uint64_t>, Condensation> cache2;
  auto condensed = [](auto& cache, const PreMetricGroup& c, const Subgroup& s) -> const Condensation& {
    auto it = cache.find(s.indices());
    if (it == cache.end()) it = cache.emplace(s.indices(), condense_with_projection(c, s)).first;
    return it->second;
  };

  std::vector<EtaleAlgebra> out;
  for (Subgroup& h : isotropic_subgroups(product)) {
    Subgroup h1 = factor_intersection(pg, h, g1, 0);
    Subgroup h2 = factor_intersection(pg, h, g2, k1);
    if (!is_isotropic(c1, h1) || !is_isotropic(c2, h2)) violation(h, "factor intersection is not isotropic");

    const Condensation& cond1 = condensed(cache1, c1, h1);
    const Condensation& cond2 = condensed(cache2, c2, h2);
    const FinAbGroup& q1 = cond1.result.group();
    const FinAbGroup& q2 = cond2.result.group();

    std::map<std::uint64_t, std::uint64_t> forward;
    std::map<std::uint64_t, std::uint64_t> backward;
    for (const Element& x : h.elements()) {
      const Element a{{x.coords.begin(), x.coords.begin() + static_cast<std::ptrdiff_t>(k1)}};
      const Element b{{x.coords.begin() + static_cast<std::ptrdiff_t>(k1), x.coords.end()}};
      const std::uint64_t pa = cond1.projection[g1.index_of(a)];
      const std::uint64_t pb = cond2.projection[g2.index_of(b)];
      if (pa == Condensation::kNotInPerp || pb == Condensation::kNotInPerp) {
        violation(h, "projection leaves H1^perp x H2^perp");
      }
      auto [fit, fnew] = forward.emplace(pa, pb);
      if (!fnew && fit->second != pb) violation(h, "residual meets the second factor");
      auto [bit, bnew] = backward.emplace(pb, pa);
      if (!bnew && bit->second != pa) violation(h, "residual meets the first factor");
    }
    if (forward.size() * h1.size() * h2.size() != h.size()) violation(h, "residual has the wrong size");

    std::vector<std::uint64_t> dom;
    std::vector<std::uint64_t> cod;
    for (const auto& [a, b] : forward) {
      dom.push_back(a);
      cod.push_back(b);
    }
    Subgroup b1 = [&] {
      try {
        return subgroup_from_indices(q1, dom);
      } catch (const UserError&) {
        violation(h, "projection to the first factor is not a subgroup");
      }
    }();
    Subgroup b2 = [&] {
      try {
        return subgroup_from_indices(q2, cod);
      } catch (const UserError&) {
        violation(h, "projection to the second factor is not a subgroup");
      }
    }();

    // phi is additive and q2(phi x) = -q1(x).
    std::vector<std::pair<Element, Element>> phi;
    for (const auto& [a, b] : forward) {
      const Element xa = q1.element_at(a);
      const Element xb = q2.element_at(b);
      if (cond1.result.q(xa) + cond2.result.q(xb) != RationalMod1()) violation(h, "phi is not an anti-isometry");
      phi.emplace_back(xa, xb);
    }
    for (const auto& [a, fa] : forward) {
      for (const auto& [b, fb] : forward) {
        const std::uint64_t sum = q1.index_of(q1.add(q1.element_at(a), q1.element_at(b)));
        const std::uint64_t image = q2.index_of(q2.add(q2.element_at(fa), q2.element_at(fb)));
        auto it = forward.find(sum);
        if (it == forward.end() || it->second != image) violation(h, "phi is not a homomorphism");
      }
    }

    EtaleDatum datum{std::move(h1), std::move(h2), cond1.result, cond2.result,
                     std::move(b1), std::move(b2), std::move(phi)};
    out.push_back(EtaleAlgebra{std::move(h), std::move(datum)});
  }
  return out;
}

bool check_prdim(const EtaleAlgebra& algebra) {
  const auto& d = algebra.datum;
  return algebra.algebra.size() == d.h1.size() * d.h2.size() * d.b1.size();
}

bool check_et0(const PreMetricGroup& c, const Subgroup& h) {
  if (!is_isotropic(c, h)) throw NotIsotropic("check_et0: subgroup is not isotropic");
  const Condensation cond = condense_with_projection(c, h);

  std::set<std::vector<std::uint64_t>> images;
  std::size_t over = 0;
  for (const Subgroup& k : isotropic_subgroups(c)) {
    if (!k.contains(h)) continue;
    ++over;
    std::vector<std::uint64_t> image;
    for (std::uint64_t idx : k.indices()) {
      const std::uint64_t p = cond.projection[idx];
      if (p == Condensation::kNotInPerp) return false;
      image.push_back(p);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() * h.size() != k.size()) return false;
    if (!images.insert(std::move(image)).second) return false;  // not injective
  }

  std::set<std::vector<std::uint64_t>> targets;
  for (const Subgroup& s : isotropic_subgroups(cond.result)) targets.insert(s.indices());
  return over == targets.size() && images == targets;
}

}  // namespace wittkit
