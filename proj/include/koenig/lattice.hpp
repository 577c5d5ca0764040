#pragma once

#include "koenig/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace koenig {

/// The distributive lattice J(P) of order ideals of a poset. Elements are
/// indexed in canonical ideal order, so index 0 is the bottom and the last
/// index is the top. Join is union and meet is intersection.
class DistributiveLattice {
public:
  explicit DistributiveLattice(Poset p);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// d = |P|, the length of every maximal chain.
  std::size_t d() const noexcept { return poset_.size(); }

  const OrderIdeal& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<OrderIdeal>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(ElementMask members) const;
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return size() - 1; }

  bool leq(std::size_t a, std::size_t b) const { return elements_[a].subset_of(elements_[b]); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;

  /// Cover pairs (a, b) with a < b and |b| = |a| + 1.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// "{}" for the empty ideal, otherwise "{x,y,...}" by poset index order.
  std::string label(std::size_t i) const;

private:
  Poset poset_;
  std::vector<OrderIdeal> elements_;
  std::unordered_map<ElementMask, std::size_t> index_;
};

inline DistributiveLattice build_lattice(Poset p) { return DistributiveLattice(std::move(p)); }

struct RankProfile {
  std::vector<std::size_t> rank;    // per element
  std::vector<std::size_t> rho;     // rho[i] = #elements of rank i, 0 <= i <= d
  std::size_t theta = 0;            // #{1 <= i < d : rho[i] == 3}
  std::vector<std::size_t> apexes;  // increasing
};

/// Ranks from longest cover paths out of the bottom element.
RankProfile rank_profile(const DistributiveLattice& l);

bool is_simple(const DistributiveLattice& l);
bool is_quasi_thin(const DistributiveLattice& l);
bool is_chain(const DistributiveLattice& l);

/// Interval [bottom, top] between consecutive apexes.
struct ApexBlock {
  DistributiveLattice lattice;
  std::vector<std::size_t> to_parent;  // block element -> parent element
  std::size_t bottom = 0;              // parent index of the lower apex
  std::size_t top = 0;                 // parent index of the upper apex
  std::size_t d = 0;
  bool quasi_thin = false;
  std::size_t theta = 0;
};

struct ApexDecomposition {
  std::vector<std::size_t> apexes;
  std::vector<ApexBlock> blocks;
  /// Some consecutive apex pair sits at adjacent ranks (requires |P| >= 2).
  bool decomposable = false;
};

ApexDecomposition apex_decomposition(const DistributiveLattice& l);

enum class Verdict { Koenig, NotKoenig, Unknown };
std::string to_string(Verdict v);

struct BlockSummary {
  std::size_t d = 0;
  std::size_t size = 0;
  bool quasi_thin = false;
  std::size_t theta = 0;
};

struct ClassificationResult {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::vector<BlockSummary> blocks;
  std::vector<std::size_t> per_block_theta;
  std::size_t height = 0;  // |L| - (d + 1)
};

/// Decides Koenig type of the join-meet ideal from the rank structure alone.
ClassificationResult classify_koenig_lattice(const DistributiveLattice& l);

enum class SimpleType { Type0, Type1, Type2a, Type2b, Type2c, NotApplicable };
std::string to_string(SimpleType t);

/// Label of a simple quasi-thin lattice with theta <= 2, from the ranks that
/// carry three elements. NotApplicable when those preconditions fail.
SimpleType simple_type(const DistributiveLattice& l);

}  // namespace koenig
