#include "koenig/poset.hpp"

#include "koenig/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace koenig {

namespace {

ElementMask bit(std::size_t i) { return ElementMask{1} << i; }

void check_size(std::size_t n) {
  if (n > kMaxPosetSize)
    throw Error(ErrorCode::SizeLimit,
                "poset has " + std::to_string(n) + " elements; at most 64 are supported");
}

// Code of the relation matrix after relabeling old index i -> perm[i].
std::uint64_t relation_code(const std::vector<ElementMask>& below, const std::vector<std::size_t>& perm) {
  const std::size_t n = below.size();
  std::uint64_t code = 0;
  for (std::size_t b = 0; b < n; ++b) {
    ElementMask m = below[b];
    while (m) {
      const auto a = static_cast<std::size_t>(std::countr_zero(m));
      m &= m - 1;
      code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
    }
  }
  return code;
}

std::pair<std::uint64_t, std::vector<std::size_t>> canonical_form(const std::vector<ElementMask>& below) {
  const std::size_t n = below.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = relation_code(below, perm);
  std::vector<std::size_t> best_perm = perm;
  while (std::next_permutation(perm.begin(), perm.end())) {
    const auto code = relation_code(below, perm);
    if (code < best) {
      best = code;
      best_perm = perm;
    }
  }
  return {best, best_perm};
}

}  // namespace

Poset Poset::close_transitively(std::vector<std::string> labels,
                                const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  check_size(labels.size());
  const std::size_t n = labels.size();
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw Error(ErrorCode::PreconditionViolated, "duplicate element labels");
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.below_.assign(n, 0);
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n)
      throw Error(ErrorCode::PreconditionViolated, "cover references an undeclared element");
    p.below_[b] |= bit(a);
  }
  // Warshall closure on bitmasks.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < n; ++b)
      if (p.below_[b] & bit(k)) p.below_[b] |= p.below_[k];
  for (std::size_t i = 0; i < n; ++i)
    if (p.below_[i] & bit(i))
      throw Error(ErrorCode::CycleDetected, "cover relation has a cycle through '" + p.labels_[i] + "'");
  return p;
}

Poset Poset::from_labeled_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(ErrorCode::PreconditionViolated,
                  "cover (" + a + ", " + b + ") references an undeclared element");
    idx.emplace_back(ia->second, ib->second);
  }
  return close_transitively(std::move(labels), idx);
}

Poset Poset::chain(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i + 1));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return close_transitively(std::move(labels), covers);
}

Poset Poset::antichain(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return close_transitively(std::move(labels), {});
}

ElementMask Poset::strictly_above(std::size_t i) const {
  ElementMask m = 0;
  for (std::size_t b = 0; b < size(); ++b)
    if (less(i, b)) m |= bit(b);
  return m;
}

ElementMask Poset::all_elements() const noexcept {
  return size() == 64 ? ~ElementMask{0} : (bit(size()) - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b) {
    for (std::size_t a = 0; a < size(); ++a) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < size() && !between; ++c) between = less(a, c) && less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Poset::width() const {
  std::size_t best = empty() ? 0 : 1;
  // Branch over elements, keeping a pairwise-incomparable set.
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t next, std::size_t count, ElementMask chosen) -> void {
    best = std::max(best, count);
    if (count + (size() - next) <= best) return;
    for (std::size_t i = next; i < size(); ++i) {
      const ElementMask related = below_[i] | strictly_above(i);
      if (related & chosen) continue;
      self(self, i + 1, count + 1, chosen | bit(i));
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

Poset Poset::induced(ElementMask mask) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (mask & bit(i)) keep.push_back(i);
  Poset p;
  p.labels_.reserve(keep.size());
  p.below_.assign(keep.size(), 0);
  for (std::size_t x = 0; x < keep.size(); ++x) {
    p.labels_.push_back(labels_[keep[x]]);
    for (std::size_t y = 0; y < keep.size(); ++y)
      if (less(keep[y], keep[x])) p.below_[x] |= bit(y);
  }
  return p;
}

Poset Poset::dual() const {
  Poset p;
  p.labels_ = labels_;
  p.below_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) p.below_[i] = strictly_above(i);
  return p;
}

std::size_t Poset::add_element(std::string label, ElementMask below) {
  check_size(size() + 1);
  if (!is_order_ideal(*this, below))
    throw Error(ErrorCode::PreconditionViolated, "down-set of a new element must be an order ideal");
  if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
    throw Error(ErrorCode::PreconditionViolated, "label '" + label + "' already in use");
  labels_.push_back(std::move(label));
  below_.push_back(below);
  return size() - 1;
}

std::uint64_t Poset::canonical_code() const {
  if (size() > kMaxEnumeratedPosetSize)
    throw Error(ErrorCode::SizeLimit, "canonical form is limited to posets of size <= 6");
  return canonical_form(below_).first;
}

bool is_order_ideal(const Poset& p, ElementMask mask) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((mask >> i) & 1U)
      if ((p.strictly_below(i) & ~mask) != 0) return false;
  return (mask & ~p.all_elements()) == 0;
}

std::vector<OrderIdeal> order_ideals(const Poset& p) {
  // Visit elements along a linear extension; an element may join the ideal
  // only when everything below it already has.
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(p.strictly_below(a)) < std::popcount(p.strictly_below(b));
  });
  std::vector<OrderIdeal> out;
  auto rec = [&](auto&& self, std::size_t k, ElementMask current) -> void {
    if (k == order.size()) {
      out.push_back(OrderIdeal{current});
      return;
    }
    const std::size_t e = order[k];
    self(self, k + 1, current);
    if ((p.strictly_below(e) & ~current) == 0) self(self, k + 1, current | bit(e));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Poset ordinal_sum(const Poset& lower, const Poset& upper, bool with_middle) {
  std::vector<std::string> labels = lower.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  auto fresh = [&](std::string name) {
    while (used.count(name)) name += "'";
    used.insert(name);
    return name;
  };
  std::vector<std::pair<std::size_t, std::size_t>> covers = lower.covers();
  const std::size_t n1 = lower.size();
  std::size_t offset = n1;
  std::vector<std::size_t> bridge_from;
  // Maximal elements of the lower summand.
  for (std::size_t i = 0; i < n1; ++i)
    if (lower.strictly_above(i) == 0) bridge_from.push_back(i);
  if (with_middle) {
    labels.push_back(fresh("m"));
    for (auto i : bridge_from) covers.emplace_back(i, offset);
    bridge_from = {offset};
    ++offset;
  }
  for (std::size_t i = 0; i < upper.size(); ++i) labels.push_back(fresh(upper.label(i)));
  for (const auto& [a, b] : upper.covers()) covers.emplace_back(a + offset, b + offset);
  for (std::size_t j = 0; j < upper.size(); ++j)
    if (upper.strictly_below(j) == 0)
      for (auto i : bridge_from) covers.emplace_back(i, j + offset);
  return Poset::close_transitively(std::move(labels), covers);
}

std::vector<Poset> enumerate_posets(std::size_t n, std::size_t cap) {
  if (n > cap || n > kMaxEnumeratedPosetSize)
    throw Error(ErrorCode::SizeLimit, "poset enumeration is capped at size " +
                                          std::to_string(std::min(cap, kMaxEnumeratedPosetSize)));
  // Every (n+1)-element poset is an n-element poset plus a maximal element
  // whose down-set is an order ideal.
  std::map<std::uint64_t, std::vector<ElementMask>> level{{0, {}}};
  for (std::size_t k = 0; k < n; ++k) {
    std::map<std::uint64_t, std::vector<ElementMask>> next;
    for (const auto& [code, below] : level) {
      std::vector<std::string> labels(k);
      Poset base;
      {
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t b = 0; b < k; ++b)
          for (std::size_t a = 0; a < k; ++a)
            if ((below[b] >> a) & 1U) rel.emplace_back(a, b);
        for (std::size_t i = 0; i < k; ++i) labels[i] = "p" + std::to_string(i);
        base = Poset::close_transitively(labels, rel);
      }
      for (const auto& ideal : order_ideals(base)) {
        std::vector<ElementMask> grown = below;
        grown.push_back(ideal.members);
        auto [c, perm] = canonical_form(grown);
        if (next.count(c)) continue;
        std::vector<ElementMask> relabeled(k + 1, 0);
        for (std::size_t b = 0; b <= k; ++b)
          for (std::size_t a = 0; a <= k; ++a)
            if ((grown[b] >> a) & 1U) relabeled[perm[b]] |= bit(perm[a]);
        next.emplace(c, std::move(relabeled));
      }
    }
    level = std::move(next);
  }
  std::vector<Poset> out;
  for (const auto& [code, below] : level) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < below.size(); ++i) labels.push_back("p" + std::to_string(i));
    for (std::size_t b = 0; b < below.size(); ++b)
      for (std::size_t a = 0; a < below.size(); ++a)
        if ((below[b] >> a) & 1U) rel.emplace_back(a, b);
    out.push_back(Poset::close_transitively(std::move(labels), rel));
  }
  return out;
}

}  // namespace koenig
