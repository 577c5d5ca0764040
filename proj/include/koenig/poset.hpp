#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace koenig {

// Subsets of a poset's elements are bitmasks over its element indexing.
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxPosetSize = 64;
inline constexpr std::size_t kMaxEnumeratedPosetSize = 6;

/// A finite poset on at most 64 elements. Elements are indexed by position in
/// `labels()`; the strict order is stored fully closed as one "strictly below"
/// mask per element.
class Poset {
public:
  Poset() = default;

  /// Builds the transitive closure of `covers` (pairs of indices, first < second).
  /// Throws CycleDetected when the pairs induce a directed cycle.
  static Poset close_transitively(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  /// Same, with covers given by label.
  static Poset from_labeled_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& covers);

  static Poset chain(std::size_t n, const std::string& prefix = "c");
  static Poset antichain(std::size_t n, const std::string& prefix = "a");

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool less(std::size_t a, std::size_t b) const { return (below_[b] >> a) & 1U; }
  bool comparable(std::size_t a, std::size_t b) const { return a == b || less(a, b) || less(b, a); }
  ElementMask strictly_below(std::size_t i) const { return below_.at(i); }
  ElementMask strictly_above(std::size_t i) const;
  ElementMask all_elements() const noexcept;

  /// Cover pairs (a, b): a < b with nothing strictly between, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Largest antichain size (exhaustive; intended for small posets).
  std::size_t width() const;

  /// Subposet on the elements of `mask`, keeping their relative indexing order.
  Poset induced(ElementMask mask) const;

  /// Same elements, reversed order.
  Poset dual() const;

  /// Appends a fresh element strictly above every element of `below`, which
  /// must be an order ideal. Returns its index.
  std::size_t add_element(std::string label, ElementMask below);

  /// Canonical encoding of the isomorphism class (brute force over
  /// permutations; sizes above kMaxEnumeratedPosetSize throw SizeLimit).
  std::uint64_t canonical_code() const;

  bool operator==(const Poset&) const = default;

private:
  std::vector<std::string> labels_;
  std::vector<ElementMask> below_;
};

/// A downward-closed subset of a poset.
struct OrderIdeal {
  ElementMask members = 0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(members)); }
  bool contains(std::size_t i) const noexcept { return (members >> i) & 1U; }
  bool subset_of(const OrderIdeal& o) const noexcept { return (members & ~o.members) == 0; }

  bool operator==(const OrderIdeal&) const = default;
  /// Canonical order: (cardinality, numeric bitset value).
  auto operator<=>(const OrderIdeal& o) const noexcept {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return members <=> o.members;
  }
};

bool is_order_ideal(const Poset& p, ElementMask mask);

/// All order ideals, including the empty set and the whole poset, in
/// canonical order.
std::vector<OrderIdeal> order_ideals(const Poset& p);

/// Every element of `lower` below every element of `upper`; with `with_middle`
/// a fresh element sits between them. Colliding labels of `upper` are
/// relabeled by appending primes.
Poset ordinal_sum(const Poset& lower, const Poset& upper, bool with_middle);

/// One representative per isomorphism class of n-element posets, ordered by
/// canonical code. Labels are "p0".."p{n-1}".
std::vector<Poset> enumerate_posets(std::size_t n, std::size_t cap = kMaxEnumeratedPosetSize);

}  // namespace koenig
