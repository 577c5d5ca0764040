#pragma once

#include "koenig/ideal.hpp"
#include "koenig/monomial.hpp"
#include "koenig/order.hpp"
#include "koenig/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace koenig {

class DistributiveLattice;

inline constexpr std::size_t kDefaultReductionBudget = 50000;

/// Sparse polynomial with exact rational coefficients; zero coefficients are
/// never stored.
class Polynomial {
public:
  Polynomial() = default;
  static Polynomial term(const Monomial& m, const Rational& c = Rational(1));
  static Polynomial from_binomial(const Binomial& b);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// c * m * p
  Polynomial scaled(const Rational& c, const Monomial& m) const;

  /// Largest monomial under `order`; requires a nonzero polynomial.
  const Monomial& leading_monomial(const MonomialOrder& order) const;
  Rational leading_coefficient(const MonomialOrder& order) const;
  /// Divides by the leading coefficient.
  Polynomial monic(const MonomialOrder& order) const;

  bool operator==(const Polynomial&) const = default;
  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  std::map<Monomial, Rational> terms_;
};

/// Generators of a monomial ideal; the constructor drops every generator
/// divisible by another one.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens);
  const std::vector<Monomial>& minimal_generators() const noexcept { return gens_; }
  bool contains(const Monomial& m) const;

private:
  std::vector<Monomial> gens_;
};

struct GroebnerResult {
  /// Reduced, monic, sorted by decreasing leading monomial.
  std::vector<Polynomial> basis;
  std::size_t reductions = 0;
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
};

/// Buchberger's algorithm with the product and chain criteria. Pairs are
/// processed by degree of their lcm, then by generator position. Throws
/// BudgetExceeded after `budget` reduction steps.
GroebnerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrderWitness& witness,
                          std::size_t budget = kDefaultReductionBudget);

/// Remainder of `p` under full reduction by `basis` (leading monomials taken
/// under `order`). Adds the number of reduction steps to `steps` when given.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order,
                  std::size_t* steps = nullptr);

std::vector<Polynomial> to_polynomials(const IdealGenerators& gens);

/// Degree-reverse-lexicographic order with variables ranked by lattice rank:
/// higher rank is larger, equal ranks by element index.
MonomialOrderWitness rank_revlex_witness(const DistributiveLattice& l);

MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Largest set of variables containing the support of no generator, i.e.
/// the Krull dimension of S/I. Returns -1 for the unit ideal.
std::int64_t dimension_of_monomial_quotient(const MonomialIdeal& ideal, std::size_t num_vars);

struct HeightReport {
  std::size_t height = 0;
  std::size_t gb_size = 0;
  std::size_t steps = 0;
};

/// num_vars - dim S/in(I), with in(I) from the reduced Groebner basis.
HeightReport ideal_height(const std::vector<Polynomial>& gens, std::size_t num_vars,
                          const MonomialOrderWitness& witness, std::size_t budget = kDefaultReductionBudget);
HeightReport ideal_height(const IdealGenerators& gens, const MonomialOrderWitness& witness,
                          std::size_t budget = kDefaultReductionBudget);

/// Three corners i1 < i2 < i3 along one axis and j1 < j2 along the other. In
/// the vertical split the i's are x-coordinates; `transposed` swaps the axes.
struct SplitSpec {
  std::int64_t i1 = 0, i2 = 0, i3 = 0;
  std::int64_t j1 = 0, j2 = 0;
  bool transposed = false;
};

/// Checks x_{i1 j2} f_{c,b} - x_{i2 j2} f_{a,b} + x_{i3 j2} f_{a,d} = 0 with
/// a = (i1,j1), c = (i2,j1), d = (i2,j2), b = (i3,j2), by exact polynomial
/// arithmetic (coordinates swapped when transposed).
bool check_split_syzygy(const SplitSpec& s);

/// Whether m is a zero divisor on S/(ms). Searches monomials g of degree at
/// most the largest generator degree with g outside (ms) and g*m inside:
/// (ms) : m is generated by lcm(u, m)/m, whose degrees never exceed deg u.
bool is_zerodivisor_after(const std::vector<Monomial>& ms, const Monomial& m);

/// Each element is a non-zero-divisor modulo the ones before it.
bool is_regular_sequence_oracle(const std::vector<Monomial>& ms);

}  // namespace koenig
