#include "koenig/lattice.hpp"

#include "koenig/error.hpp"

#include <algorithm>

namespace koenig {

DistributiveLattice::DistributiveLattice(Poset p) : poset_(std::move(p)), elements_(order_ideals(poset_)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].members, i);
}

std::optional<std::size_t> DistributiveLattice::index_of(ElementMask members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DistributiveLattice::join(std::size_t a, std::size_t b) const {
  return index_.at(elements_.at(a).members | elements_.at(b).members);
}

std::size_t DistributiveLattice::meet(std::size_t a, std::size_t b) const {
  return index_.at(elements_.at(a).members & elements_.at(b).members);
}

std::vector<std::pair<std::size_t, std::size_t>> DistributiveLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    const ElementMask m = elements_[a].members;
    for (std::size_t x = 0; x < poset_.size(); ++x) {
      if ((m >> x) & 1U) continue;
      if (auto b = index_of(m | (ElementMask{1} << x))) out.emplace_back(a, *b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DistributiveLattice::label(std::size_t i) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t x = 0; x < poset_.size(); ++x) {
    if (!elements_.at(i).contains(x)) continue;
    if (!first) s += ",";
    s += poset_.label(x);
    first = false;
  }
  return s + "}";
}

RankProfile rank_profile(const DistributiveLattice& l) {
  RankProfile rp;
  rp.rank.assign(l.size(), 0);
  // Element order is a linear extension, so one forward pass suffices.
  for (const auto& [a, b] : l.covers()) rp.rank[b] = std::max(rp.rank[b], rp.rank[a] + 1);
  rp.rho.assign(l.d() + 1, 0);
  for (auto r : rp.rank) ++rp.rho.at(r);
  for (std::size_t i = 1; i < l.d(); ++i)
    if (rp.rho[i] == 3) ++rp.theta;
  for (std::size_t e = 0; e < l.size(); ++e)
    if (rp.rho[rp.rank[e]] == 1) rp.apexes.push_back(e);
  return rp;
}

bool is_chain(const DistributiveLattice& l) { return l.size() == l.d() + 1; }

bool is_simple(const DistributiveLattice& l) {
  if (l.d() < 2) return false;
  return rank_profile(l).apexes.size() == 2;
}

bool is_quasi_thin(const DistributiveLattice& l) {
  const auto rp = rank_profile(l);
  for (std::size_t i = 1; i < l.d(); ++i)
    if (rp.rho[i] > 3) return false;
  return true;
}

ApexDecomposition apex_decomposition(const DistributiveLattice& l) {
  ApexDecomposition out;
  const auto rp = rank_profile(l);
  out.apexes = rp.apexes;
  const auto& poset = l.poset();
  for (std::size_t k = 1; k < rp.apexes.size(); ++k) {
    const std::size_t lo = rp.apexes[k - 1];
    const std::size_t hi = rp.apexes[k];
    const ElementMask lo_mask = l.element(lo).members;
    const ElementMask diff = l.element(hi).members & ~lo_mask;
    std::vector<std::size_t> expand;
    for (std::size_t x = 0; x < poset.size(); ++x)
      if ((diff >> x) & 1U) expand.push_back(x);
    ApexBlock block{DistributiveLattice(poset.induced(diff)), {}, lo, hi, expand.size(), false, 0};
    for (const auto& e : block.lattice.elements()) {
      ElementMask m = lo_mask;
      for (std::size_t y = 0; y < expand.size(); ++y)
        if (e.contains(y)) m |= ElementMask{1} << expand[y];
      block.to_parent.push_back(*l.index_of(m));
    }
    block.quasi_thin = is_quasi_thin(block.lattice);
    block.theta = rank_profile(block.lattice).theta;
    if (block.d == 1 && l.d() >= 2) out.decomposable = true;
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Koenig: return "KOENIG";
    case Verdict::NotKoenig: return "NOT_KOENIG";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

ClassificationResult classify_koenig_lattice(const DistributiveLattice& l) {
  ClassificationResult res;
  const std::size_t d = l.d();
  res.height = l.size() - (d + 1);
  const auto dec = apex_decomposition(l);
  for (const auto& b : dec.blocks) {
    res.blocks.push_back({b.d, b.lattice.size(), b.quasi_thin, b.theta});
    res.per_block_theta.push_back(b.theta);
  }
  if (is_chain(l)) {
    res.verdict = Verdict::Koenig;
    res.reason = "chain: height 0, empty certificate";
    return res;
  }
  if (l.size() > 2 * (d + 1)) {
    res.verdict = Verdict::NotKoenig;
    res.reason = "size bound violated: |L| = " + std::to_string(l.size()) + " > 2(d+1) = " +
                 std::to_string(2 * (d + 1));
    return res;
  }
  // Blocks with d == 1 are the cut edges of ordinal sums; they reset the
  // theta = 2 separation requirement.
  bool pending_theta2 = false;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& b = dec.blocks[i];
    if (b.d == 1) {
      pending_theta2 = false;
      continue;
    }
    if (!b.quasi_thin || b.theta > 2) {
      res.verdict = Verdict::NotKoenig;
      res.reason = "block " + std::to_string(i) + " is not quasi-thin with theta <= 2";
      return res;
    }
    if (b.theta == 0) pending_theta2 = false;
    if (b.theta == 2) {
      if (pending_theta2) {
        res.verdict = Verdict::NotKoenig;
        res.reason = "block " + std::to_string(i) +
                     " has theta = 2 with no theta = 0 block since the previous theta = 2 block";
        return res;
      }
      pending_theta2 = true;
    }
  }
  res.verdict = Verdict::Koenig;
  res.reason = "every apex block quasi-thin with theta <= 2; theta = 2 blocks separated";
  return res;
}

std::string to_string(SimpleType t) {
  switch (t) {
    case SimpleType::Type0: return "type0";
    case SimpleType::Type1: return "type1";
    case SimpleType::Type2a: return "type2a";
    case SimpleType::Type2b: return "type2b";
    case SimpleType::Type2c: return "type2c";
    case SimpleType::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

SimpleType simple_type(const DistributiveLattice& l) {
  if (!is_simple(l) || !is_quasi_thin(l)) return SimpleType::NotApplicable;
  const auto rp = rank_profile(l);
  std::vector<std::size_t> threes;
  for (std::size_t i = 1; i < l.d(); ++i)
    if (rp.rho[i] == 3) threes.push_back(i);
  switch (threes.size()) {
    case 0: return SimpleType::Type0;
    case 1: return SimpleType::Type1;
    case 2: {
      const auto gap = threes[1] - threes[0];
      if (gap == 1) return SimpleType::Type2a;
      if (gap == 2) return SimpleType::Type2b;
      return SimpleType::Type2c;
    }
    default: return SimpleType::NotApplicable;
  }
}

}  // namespace koenig
