#pragma once

#include "koenig/monomial.hpp"
#include "koenig/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace koenig {

enum class OrderFlavor { Lex, Revlex, Weight };
std::string to_string(OrderFlavor f);
OrderFlavor parse_order_flavor(const std::string& s);

/// A monomial order given by a weight vector refined by a variable ranking.
/// `tiebreak[0]` is the largest variable. On equal weight, Lex and Weight
/// compare exponent vectors lexicographically along `tiebreak`; Revlex compares
/// total degree and then reverse-lexicographically (the monomial with the
/// smaller exponent in the smallest differing variable is larger).
struct MonomialOrderWitness {
  std::vector<Rational> weights;
  std::vector<VarId> tiebreak;
  OrderFlavor flavor = OrderFlavor::Weight;

  static MonomialOrderWitness lex(std::vector<VarId> ranking);
  static MonomialOrderWitness degrevlex(std::vector<VarId> ranking);

  std::size_t num_vars() const noexcept { return weights.size(); }
  bool tiebreak_is_permutation() const;
  bool weights_nonnegative() const;
};

enum class Ordering { Less, Greater };

/// Throws EqualMonomials when m1 == m2.
Ordering compare(const MonomialOrderWitness& w, const Monomial& m1, const Monomial& m2);

/// The same order with weights scaled to integers and the tiebreak inverted,
/// for repeated comparisons.
class MonomialOrder {
public:
  explicit MonomialOrder(const MonomialOrderWitness& w);

  /// <0, 0, >0 like a three-way comparison.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  const MonomialOrderWitness& witness() const noexcept { return witness_; }

private:
  Integer weight(const Monomial& m) const;

  MonomialOrderWitness witness_;
  std::vector<Integer> int_weights_;
  std::vector<long long> small_weights_;
  bool small_ = false;
  bool all_zero_ = false;
  std::vector<std::size_t> position_;  // variable -> index in tiebreak
};

}  // namespace koenig
