#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wittkit {

inline constexpr std::uint64_t kDefaultElementCap = std::uint64_t{1} << 20;

/// Largest group order the enumerating operations accept. Defaults to
/// kDefaultElementCap. Process-wide.
std::uint64_t element_cap() noexcept;
void set_element_cap(std::uint64_t cap) noexcept;

/// Groups above this order are refused by subgroup enumeration.
inline constexpr std::uint64_t kSubgroupEnumerationCap = 4096;

/// Coordinates of a group element with respect to the cyclic factors.
struct Element {
  std::vector<std::int64_t> coords;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

  std::string to_string() const;
};

/// Z/n1 x ... x Z/nk. The factor list is kept as given; two groups
/// compare equal only when the lists agree.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Every factor must be >= 2. Throws UserError otherwise and Overflow if
  /// the order does not fit in 63 bits.
  explicit FinAbGroup(std::vector<std::int64_t> factor_orders);

  const std::vector<std::int64_t>& factor_orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return orders_.empty(); }

  Element identity() const { return Element{std::vector<std::int64_t>(orders_.size(), 0)}; }
  /// i-th standard generator.
  Element generator(std::size_t i) const;
  /// Reduces arbitrary integer coordinates into canonical range.
  Element make(std::vector<std::int64_t> coords) const;
  bool contains(const Element& x) const noexcept;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element scale(const Element& x, std::int64_t n) const;
  std::int64_t element_order(const Element& x) const;

  /// Position of x in lexicographic order (first coordinate most significant).
  std::uint64_t index_of(const Element& x) const noexcept;
  Element element_at(std::uint64_t index) const;

  /// Invariant factors d1 | d2 | ... of the group (each >= 2).
  std::vector<std::int64_t> invariant_factors() const;

  std::string to_string() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

/// Subgroup stored as its sorted element indices plus a generating set.
class Subgroup {
 public:
  Subgroup(FinAbGroup group, std::vector<Element> generators, std::vector<std::uint64_t> sorted_indices);

  const FinAbGroup& group() const noexcept { return group_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  /// Sorted element indices in the ambient group.
  const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }
  std::vector<Element> elements() const;
  std::uint64_t size() const noexcept { return indices_.size(); }
  bool is_trivial() const noexcept { return indices_.size() == 1; }

  bool contains(const Element& x) const;
  bool contains_index(std::uint64_t index) const;
  bool contains(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.indices_ == b.indices_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.indices_ < b.indices_; }

 private:
  FinAbGroup group_;
  std::vector<Element> generators_;
  std::vector<std::uint64_t> indices_;
};

/// All elements in lexicographic order, identity first. Throws CapExceeded.
std::vector<Element> enumerate_elements(const FinAbGroup& g);

/// Smallest subgroup containing gens.
Subgroup subgroup_closure(const FinAbGroup& g, std::span<const Element> gens);

/// Subgroup with the given element set. The set must be closed; a small
/// generating set is picked greedily in lexicographic order. Throws
/// UserError if the indices do not form a subgroup.
Subgroup subgroup_from_indices(const FinAbGroup& g, std::vector<std::uint64_t> indices);

/// Every subgroup exactly once, sorted by element lists. Order <= 4096.
std::vector<Subgroup> all_subgroups(const FinAbGroup& g);

/// Intersection of two subgroups of the same group.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Invariant-factor lists of all abelian groups of order n.
std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n);

}  // namespace wittkit
