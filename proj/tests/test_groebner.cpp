#include "doctest.h"

#include "koenig/error.hpp"
#include "koenig/groebner.hpp"
#include "koenig/lattice.hpp"
#include "koenig/lattice_certificates.hpp"
#include "koenig/polyomino.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace koenig;

namespace {

Monomial xx(VarId a, VarId b) { return Monomial::product(a, b); }

std::vector<Polynomial> sorted_generators(const IdealGenerators& g, const MonomialOrderWitness& w) {
  const MonomialOrder order(w);
  std::vector<Polynomial> out;
  for (const auto& p : to_polynomials(g)) out.push_back(p.monic(order));
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(order), b.leading_monomial(order));
  });
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto p = Polynomial::term(xx(0, 1)) - Polynomial::term(xx(2, 3));
  CHECK(p.size() == 2);
  CHECK((p - p).is_zero());
  const auto q = p * Polynomial::term(Monomial::variable(4));
  CHECK(q.coefficient(Monomial({{0, 1}, {1, 1}, {4, 1}})) == 1);
  CHECK(q.coefficient(Monomial({{2, 1}, {3, 1}, {4, 1}})) == -1);
}

TEST_CASE("buchberger on a single binomial and the diamond") {
  const auto w = MonomialOrderWitness::degrevlex({0, 1, 2, 3});
  const std::vector<Polynomial> one{Polynomial::term(xx(0, 1)) - Polynomial::term(xx(2, 3))};
  const auto gb = buchberger(one, w);
  CHECK(gb.basis == one);

  const auto l = build_lattice(Poset::antichain(2));
  const auto g = join_meet_generators(l);
  const auto rw = rank_revlex_witness(l);
  const auto r = buchberger(to_polynomials(g), rw);
  CHECK(r.basis.size() == 1);
  const MonomialOrder order(rw);
  // Leading term is the incomparable pair x_a x_b.
  CHECK(r.basis[0].leading_monomial(order) == g.binomials[0].first);
}

TEST_CASE("B3 join-meet generators are a reduced Groebner basis under rank revlex") {
  const auto l = build_lattice(Poset::antichain(3));
  const auto g = join_meet_generators(l);
  const auto w = rank_revlex_witness(l);
  const auto r = buchberger(to_polynomials(g), w);
  CHECK(r.basis.size() == 9);
  CHECK(r.basis == sorted_generators(g, w));
  const MonomialOrder order(w);
  for (const auto& b : g.binomials) CHECK(order.greater(b.first, b.second));
  // Independent check: every S-pair of the generators reduces to zero.
  const auto gens = to_polynomials(g);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto li = gens[i].leading_monomial(order), lj = gens[j].leading_monomial(order);
      const auto lc = Monomial::lcm(li, lj);
      const auto s = gens[i].scaled(1 / gens[i].coefficient(li), lc.quotient(li)) -
                     gens[j].scaled(1 / gens[j].coefficient(lj), lc.quotient(lj));
      CHECK(reduce(s, gens, order).is_zero());
    }
}

TEST_CASE("chains produce no generators") {
  const auto l = build_lattice(Poset::chain(3));
  CHECK(join_meet_generators(l).binomials.empty());
  CHECK(buchberger({}, rank_revlex_witness(l)).basis.empty());
}

TEST_CASE("monomial quotient dimension") {
  CHECK(dimension_of_monomial_quotient(MonomialIdeal({xx(0, 1)}), 4) == 3);
  CHECK(dimension_of_monomial_quotient(MonomialIdeal({xx(0, 1), xx(2, 3)}), 4) == 2);
  CHECK(dimension_of_monomial_quotient(MonomialIdeal({Monomial{}}), 3) == -1);

  const auto l = build_lattice(Poset::antichain(3));
  const auto w = rank_revlex_witness(l);
  const auto gb = buchberger(to_polynomials(join_meet_generators(l)), w);
  const auto in = initial_ideal(gb.basis, MonomialOrder(w));
  CHECK(dimension_of_monomial_quotient(in, 8) == 4);
  CHECK(oracle::brute_independence(in.minimal_generators(), 8) == 4);
}

TEST_CASE("monomial quotient dimension matches brute force") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < 1 + rng() % 8; ++k) {
      if (rng() % 4 == 0)
        gens.push_back(Monomial({{static_cast<VarId>(rng() % n), 1}, {static_cast<VarId>(rng() % n), 1},
                                 {static_cast<VarId>(rng() % n), 1}}));
      else
        gens.push_back(xx(rng() % n, rng() % n));
    }
    const MonomialIdeal ideal(gens);
    CHECK(dimension_of_monomial_quotient(ideal, n) ==
          static_cast<std::int64_t>(oracle::brute_independence(ideal.minimal_generators(), n)));
  }
}

TEST_CASE("ideal heights") {
  const auto d = build_lattice(Poset::antichain(2));
  CHECK(ideal_height(join_meet_generators(d), rank_revlex_witness(d)).height == 1);
  const auto b3 = build_lattice(Poset::antichain(3));
  CHECK(ideal_height(join_meet_generators(b3), rank_revlex_witness(b3)).height == 4);
  const Polyomino cell({{0, 0}});
  const auto g = inner_minors(cell);
  CHECK(ideal_height(g, MonomialOrderWitness::degrevlex({0, 1, 2, 3})).height == 1);
}

TEST_CASE("height does not depend on the order") {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto l = build_lattice(p);
      const auto g = join_meet_generators(l);
      std::vector<VarId> ranking(l.size());
      std::iota(ranking.begin(), ranking.end(), VarId{0});
      std::vector<MonomialOrderWitness> ws{rank_revlex_witness(l), MonomialOrderWitness::lex(ranking)};
      std::shuffle(ranking.begin(), ranking.end(), rng);
      ws.push_back(MonomialOrderWitness::degrevlex(ranking));
      for (const auto& w : ws) CHECK(ideal_height(g, w).height == join_meet_height(l));
    }
}

TEST_CASE("Groebner budget") {
  const auto l = build_lattice(Poset::antichain(3));
  std::vector<VarId> ranking(8);
  std::iota(ranking.begin(), ranking.end(), VarId{0});
  try {
    buchberger(to_polynomials(join_meet_generators(l)), MonomialOrderWitness::lex(ranking), 1);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("split syzygy") {
  // Horizontal domino: corners x = 0, 1, 2 and rows y = 0, 1.
  CHECK(check_split_syzygy({0, 1, 2, 0, 1, false}));
  CHECK(check_split_syzygy({0, 1, 2, 0, 1, true}));
  CHECK(check_split_syzygy({0, 2, 5, 1, 3, false}));
}

TEST_CASE("zero divisors modulo monomial ideals") {
  // Variables x1..x4 as 1..4.
  CHECK(is_zerodivisor_after({xx(1, 2)}, xx(2, 3)));
  CHECK_FALSE(is_zerodivisor_after({xx(1, 2)}, xx(3, 4)));
  CHECK(is_zerodivisor_after({xx(1, 2)}, xx(1, 2)));
  CHECK_FALSE(is_zerodivisor_after({}, xx(1, 2)));
}

TEST_CASE("zero-divisor oracle agrees with coprimality") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Monomial> ms;
    for (std::size_t k = 0; k < 1 + rng() % 4; ++k) ms.push_back(xx(rng() % 8, rng() % 8));
    CHECK(is_regular_sequence_oracle(ms) == is_monomial_regular_sequence(ms));
  }
}
