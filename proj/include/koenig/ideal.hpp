#pragma once

#include "koenig/monomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace koenig {

class DistributiveLattice;

enum class Side { First, Second };
inline Side other(Side s) { return s == Side::First ? Side::Second : Side::First; }
std::string to_string(Side s);

/// first - second, both quadratic and distinct. `tag` names the origin
/// (a lattice pair or an inner interval) and is unique within a generator list.
struct Binomial {
  Monomial first;
  Monomial second;
  std::string tag;

  Binomial(Monomial a, Monomial b, std::string t);

  const Monomial& term(Side s) const { return s == Side::First ? first : second; }
};

/// A generating list together with the polynomial ring it lives in.
struct IdealGenerators {
  std::size_t num_vars = 0;
  std::vector<std::string> var_names;
  std::vector<Binomial> binomials;

  std::optional<std::size_t> find_tag(const std::string& tag) const;
  std::optional<VarId> find_var(const std::string& name) const;
  /// Every generator has a monomial occurring in no other generator. Then the
  /// list is linearly independent, hence a minimal generating set of the
  /// ideal it generates (all generators are quadrics).
  bool has_private_monomials() const;
};

/// f_{a,b} = x_a x_b - x_{a meet b} x_{a join b} for every incomparable pair
/// a < b (by element index). Variables are the lattice elements.
IdealGenerators join_meet_generators(const DistributiveLattice& l);

/// Pairwise coprimality. Throws UnitMonomial on a constant monomial.
bool is_monomial_regular_sequence(const std::vector<Monomial>& ms);

}  // namespace koenig
