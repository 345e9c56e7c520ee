#include "wittkit/abelian_group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#include "wittkit/checked.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/smith.hpp"

namespace wittkit {

namespace {

std::atomic<std::uint64_t> g_element_cap{kDefaultElementCap};

void require_within_cap(const FinAbGroup& g, std::uint64_t cap, const char* what) {
  if (g.order() > cap) {
    throw CapExceeded(std::string(what) + ": group order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(cap));
  }
}

// Grows a subgroup one generator at a time, tracking membership in a bitmap
// over the ambient group.
class SpanBuilder {
 public:
  explicit SpanBuilder(const FinAbGroup& g) : group_(g), member_(g.order(), 0) {
    member_[0] = 1;
    elements_.push_back(0);
  }

  bool contains(std::uint64_t index) const { return member_[index] != 0; }

  // Returns false when g is already in the span.
  bool add_generator(const Element& gen) {
    const std::uint64_t gi = group_.index_of(gen);
    if (contains(gi)) return false;
    std::vector<std::uint64_t> base = elements_;
    Element step = gen;
    while (!contains(group_.index_of(step))) {
      for (std::uint64_t s : base) {
        const std::uint64_t idx = group_.index_of(group_.add(group_.element_at(s), step));
        member_[idx] = 1;
        elements_.push_back(idx);
      }
      step = group_.add(step, gen);
    }
    generators_.push_back(gen);
    return true;
  }

  std::vector<Element> generators() const { return generators_; }

  std::vector<std::uint64_t> sorted_elements() const {
    std::vector<std::uint64_t> out = elements_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const FinAbGroup& group_;
  std::vector<char> member_;
  std::vector<std::uint64_t> elements_;
  std::vector<Element> generators_;
};

// Join of a subgroup (sorted indices) with the cyclic subgroup of gen.
std::vector<std::uint64_t> join_cyclic(const FinAbGroup& g, const std::vector<std::uint64_t>& sub,
                                       const Element& gen) {
  auto in_sub = [&](const Element& x) {
    return std::binary_search(sub.begin(), sub.end(), g.index_of(x));
  };
  std::vector<std::uint64_t> out = sub;
  Element step = gen;
  while (!in_sub(step)) {
    for (std::uint64_t s : sub) out.push_back(g.index_of(g.add(g.element_at(s), step)));
    step = g.add(step, gen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t element_cap() noexcept { return g_element_cap.load(std::memory_order_relaxed); }
void set_element_cap(std::uint64_t cap) noexcept { g_element_cap.store(cap, std::memory_order_relaxed); }

std::string Element::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

FinAbGroup::FinAbGroup(std::vector<std::int64_t> factor_orders) : orders_(std::move(factor_orders)) {
  checked::Wide order = 1;
  for (std::int64_t n : orders_) {
    if (n < 2) throw UserError("cyclic factor orders must be >= 2, got " + std::to_string(n));
    order = checked::mul(order, n);
  }
  order_ = static_cast<std::uint64_t>(checked::narrow(order));
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * static_cast<std::uint64_t>(orders_[i]);
  }
}

Element FinAbGroup::generator(std::size_t i) const {
  Element e = identity();
  e.coords.at(i) = 1;
  return e;
}

Element FinAbGroup::make(std::vector<std::int64_t> coords) const {
  if (coords.size() != orders_.size()) throw UserError("element has wrong number of coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked::narrow(checked::mod(coords[i], orders_[i]));
  return Element{std::move(coords)};
}

bool FinAbGroup::contains(const Element& x) const noexcept {
  if (x.coords.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= orders_[i]) return false;
  }
  return true;
}

Element FinAbGroup::add(const Element& x, const Element& y) const {
  Element r = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r.coords[i] += y.coords[i];
    if (r.coords[i] >= orders_[i]) r.coords[i] -= orders_[i];
  }
  return r;
}

Element FinAbGroup::neg(const Element& x) const {
  Element r = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (r.coords[i] != 0) r.coords[i] = orders_[i] - r.coords[i];
  }
  return r;
}

Element FinAbGroup::sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

Element FinAbGroup::scale(const Element& x, std::int64_t n) const {
  Element r = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r.coords[i] = checked::narrow(checked::mod(checked::mul(x.coords[i], n), orders_[i]));
  }
  return r;
}

std::int64_t FinAbGroup::element_order(const Element& x) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::int64_t local = orders_[i] / std::gcd(orders_[i], x.coords[i]);
    ord = std::lcm(ord, local);
  }
  return ord;
}

std::uint64_t FinAbGroup::index_of(const Element& x) const noexcept {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx += strides_[i] * static_cast<std::uint64_t>(x.coords[i]);
  return idx;
}

Element FinAbGroup::element_at(std::uint64_t index) const {
  Element e = identity();
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e.coords[i] = static_cast<std::int64_t>(index / strides_[i]);
    index %= strides_[i];
  }
  return e;
}

std::vector<std::int64_t> FinAbGroup::invariant_factors() const {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(generator(i));
  return subquotient_basis(*this, gens, {}).orders;
}

std::string FinAbGroup::to_string() const {
  if (orders_.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(orders_[i]);
  }
  return out;
}

Subgroup::Subgroup(FinAbGroup group, std::vector<Element> generators, std::vector<std::uint64_t> sorted_indices)
    : group_(std::move(group)), generators_(std::move(generators)), indices_(std::move(sorted_indices)) {}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(indices_.size());
  for (std::uint64_t i : indices_) out.push_back(group_.element_at(i));
  return out;
}

bool Subgroup::contains_index(std::uint64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool Subgroup::contains(const Element& x) const { return group_.contains(x) && contains_index(group_.index_of(x)); }

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end());
}

std::vector<Element> enumerate_elements(const FinAbGroup& g) {
  require_within_cap(g, element_cap(), "enumerate_elements");
  std::vector<Element> out;
  out.reserve(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

Subgroup subgroup_closure(const FinAbGroup& g, std::span<const Element> gens) {
  require_within_cap(g, element_cap(), "subgroup_closure");
  std::vector<std::uint64_t> current{0};
  std::vector<Element> used;
  for (const Element& x : gens) {
    if (!g.contains(x)) throw UserError("generator " + x.to_string() + " is not in " + g.to_string());
    if (std::binary_search(current.begin(), current.end(), g.index_of(x))) continue;
    current = join_cyclic(g, current, x);
    used.push_back(x);
  }
  return Subgroup(g, std::move(used), std::move(current));
}

Subgroup subgroup_from_indices(const FinAbGroup& g, std::vector<std::uint64_t> indices) {
  require_within_cap(g, element_cap(), "subgroup_from_indices");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  SpanBuilder span(g);
  for (std::uint64_t idx : indices) {
    if (idx >= g.order()) throw UserError("element index out of range");
    if (!span.contains(idx)) span.add_generator(g.element_at(idx));
  }
  std::vector<std::uint64_t> spanned = span.sorted_elements();
  if (spanned != indices) throw UserError("element set is not a subgroup");
  return Subgroup(g, span.generators(), std::move(spanned));
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& g) {
  require_within_cap(g, kSubgroupEnumerationCap, "all_subgroups");
  // Every subgroup is a join of cyclic subgroups, so a breadth-first search
  // over joins with the distinct cyclic subgroups reaches all of them.
  std::vector<Element> cyclic_gens;
  {
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t i = 1; i < g.order(); ++i) {
      const Element x = g.element_at(i);
      if (seen.insert(join_cyclic(g, {0}, x)).second) cyclic_gens.push_back(x);
    }
  }
  std::set<std::vector<std::uint64_t>> found{{0}};
  std::vector<std::vector<std::uint64_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& sub : frontier) {
      for (const Element& x : cyclic_gens) {
        if (std::binary_search(sub.begin(), sub.end(), g.index_of(x))) continue;
        auto joined = join_cyclic(g, sub, x);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& indices : found) out.push_back(subgroup_from_indices(g, indices));
  return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!(a.group() == b.group())) throw UserError("intersect: subgroups of different groups");
  std::vector<std::uint64_t> common;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                        std::back_inserter(common));
  return subgroup_from_indices(a.group(), std::move(common));
}

namespace {

void chains(std::int64_t remaining, std::int64_t prev, std::vector<std::int64_t>& current,
            std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 1) {
    out.push_back(current);
    return;
  }
  for (std::int64_t d = prev; d <= remaining; d += prev) {
    if (d < 2 || remaining % d != 0) continue;
    const std::int64_t rest = remaining / d;
    if (rest != 1 && rest % d != 0) continue;
    current.push_back(d);
    chains(rest, d, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n) {
  if (n < 1) throw UserError("group order must be positive");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current;
  chains(n, 1, current, out);
  return out;
}

}  // namespace wittkit
