#include "doctest.h"

#include "koenig/certificate.hpp"
#include "koenig/error.hpp"
#include "koenig/ideal.hpp"
#include "koenig/lattice.hpp"
#include "koenig/lattice_certificates.hpp"
#include "koenig/order.hpp"
#include "koenig/realizability.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace koenig;

namespace {

Monomial xx(VarId a, VarId b) { return Monomial::product(a, b); }

IdealGenerators free_gens(std::size_t n, std::vector<std::pair<Monomial, Monomial>> pairs) {
  IdealGenerators g;
  g.num_vars = n;
  for (std::size_t i = 0; i < n; ++i) g.var_names.push_back("x" + std::to_string(i + 1));
  for (std::size_t k = 0; k < pairs.size(); ++k)
    g.binomials.emplace_back(pairs[k].first, pairs[k].second, "g" + std::to_string(k));
  return g;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a{{0, 1}, {2, 1}};
  const Monomial b{{2, 1}, {0, 1}};
  CHECK(a == b);
  CHECK(a.degree() == 2);
  CHECK(Monomial::variable(3).divides(xx(3, 4)));
  CHECK_FALSE(xx(1, 2).coprime(xx(2, 3)));
  CHECK(xx(1, 2).coprime(xx(3, 4)));
  CHECK(Monomial::lcm(xx(1, 2), xx(2, 3)) == Monomial({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(Monomial::gcd(xx(1, 2), xx(2, 3)) == Monomial::variable(2));
  CHECK((xx(1, 2) * xx(1, 3)).exponent(1) == 2);
  CHECK(xx(1, 2).quotient(Monomial::variable(1)) == Monomial::variable(2));
}

TEST_CASE("compare examples") {
  // x1 > x2 > x3 > x4 as variables 0..3.
  MonomialOrderWitness w = MonomialOrderWitness::lex({0, 1, 2, 3});
  CHECK(compare(w, xx(0, 3), xx(1, 2)) == Ordering::Greater);
  w.weights = {Rational(5), Rational(0), Rational(0), Rational(0)};
  w.tiebreak = {3, 2, 1, 0};
  CHECK(compare(w, xx(0, 3), xx(1, 2)) == Ordering::Greater);
  try {
    compare(w, xx(0, 1), xx(0, 1));
    FAIL("expected EqualMonomials");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EqualMonomials);
  }
}

TEST_CASE("revlex flavor") {
  // x0 > x1 > x2: revlex prefers x0 x2 < x1 x1 (smaller power of the last variable wins).
  const auto w = MonomialOrderWitness::degrevlex({0, 1, 2});
  CHECK(compare(w, Monomial::variable(1, 2), xx(0, 2)) == Ordering::Greater);
  CHECK(compare(w, xx(0, 1), xx(0, 2)) == Ordering::Greater);
  const auto lex = MonomialOrderWitness::lex({0, 1, 2});
  CHECK(compare(lex, xx(0, 2), Monomial::variable(1, 2)) == Ordering::Greater);
}

TEST_CASE("regular sequences of monomials") {
  CHECK(is_monomial_regular_sequence({xx(1, 2), xx(3, 4)}));
  CHECK_FALSE(is_monomial_regular_sequence({xx(1, 2), xx(2, 3)}));
  CHECK(is_monomial_regular_sequence({}));
  CHECK_THROWS_AS(is_monomial_regular_sequence({Monomial{}}), Error);
}

TEST_CASE("marking realizability examples") {
  const auto one = free_gens(4, {{xx(0, 1), xx(2, 3)}});
  CHECK(marking_realizable(one, {{0, Side::First}}).has_value());
  CHECK(marking_realizable(one, {{0, Side::Second}}).has_value());

  // m1 - m2, m2 - m3, m3 - m1 all marked first is a strict cycle.
  const auto cyc = free_gens(6, {{xx(0, 1), xx(2, 3)}, {xx(2, 3), xx(4, 5)}, {xx(4, 5), xx(0, 1)}});
  CHECK_FALSE(marking_realizable(cyc, {{0, Side::First}, {1, Side::First}, {2, Side::First}}).has_value());

  const auto d = join_meet_generators(build_lattice(Poset::antichain(2)));
  const auto w = marking_realizable(d, {{0, Side::First}});
  REQUIRE(w.has_value());
  // Elements: 0 = {}, 1 = {a1}, 2 = {a2}, 3 = top.
  CHECK(w->weights == std::vector<Rational>{0, 1, 1, 0});
}

TEST_CASE("realizability witnesses round-trip through compare") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + rng() % 4;
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::pair<Monomial, Monomial>> pairs;
    while (pairs.size() < k) {
      auto m1 = xx(rng() % n, rng() % n), m2 = xx(rng() % n, rng() % n);
      if (m1 != m2) pairs.emplace_back(m1, m2);
    }
    const auto g = free_gens(n, pairs);
    std::vector<MarkedGenerator> marking;
    for (std::size_t i = 0; i < k; ++i) marking.push_back({i, rng() % 2 ? Side::First : Side::Second});
    const auto w = marking_realizable(g, marking);

    std::vector<std::vector<Rational>> rows;
    for (const auto& m : marking) {
      std::vector<Rational> r(n, Rational(0));
      for (const auto& [v, e] : g.binomials[m.index].term(m.side).entries()) r[v] += e;
      for (const auto& [v, e] : g.binomials[m.index].term(other(m.side)).entries()) r[v] -= e;
      rows.push_back(r);
    }
    CHECK(w.has_value() == oracle::reference_strictly_feasible(rows));
    // Any small-grid solution implies feasibility.
    if (oracle::grid_search(rows, n, 2)) CHECK(w.has_value());
    if (w) {
      CHECK(w->weights_nonnegative());
      for (const auto& m : marking) {
        const auto& b = g.binomials[m.index];
        CHECK(compare(*w, b.term(m.side), b.term(other(m.side))) == Ordering::Greater);
      }
    }
  }
}

TEST_CASE("Fourier-Motzkin on mixed systems agrees with grid search") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<LinearRow> rows;
    std::vector<std::vector<Rational>> strict_rows;
    for (std::size_t k = 0; k < 1 + rng() % 4; ++k) {
      LinearRow r;
      for (std::size_t v = 0; v < n; ++v) r.coeffs.push_back(Rational(static_cast<int>(rng() % 5) - 2));
      r.strict = true;
      strict_rows.push_back(r.coeffs);
      rows.push_back(r);
    }
    const auto sol = solve_homogeneous_system(rows, n);
    CHECK(sol.has_value() == oracle::reference_strictly_feasible(strict_rows));
    if (sol) {
      for (const auto& r : rows) {
        Rational s = 0;
        for (std::size_t v = 0; v < n; ++v) s += r.coeffs[v] * (*sol)[v];
        CHECK(s > 0);
      }
    }
  }
}

TEST_CASE("verify_certificate") {
  const auto g0 = join_meet_generators(build_lattice(Poset::chain(3)));
  CHECK(verify_certificate(g0, empty_certificate(4), 0).ok);

  const auto b3 = join_meet_generators(build_lattice(Poset::antichain(3)));
  const auto found = search_certificate(b3, 4);
  REQUIRE(found.has_value());
  CHECK(verify_certificate(b3, *found, 4).ok);

  auto twice = *found;
  twice.generator_ids[1] = twice.generator_ids[0];
  const auto r = verify_certificate(b3, twice, 4);
  CHECK_FALSE(r.ok);
  CHECK(r.failure == VerifyFailure::RepeatedGenerator);

  CHECK(verify_certificate(b3, *found, 5).failure == VerifyFailure::HeightMismatch);
  auto out_of_range = *found;
  out_of_range.generator_ids[0] = 99;
  CHECK(verify_certificate(b3, out_of_range, 4).failure == VerifyFailure::IndexOutOfRange);
  auto bad_witness = *found;
  bad_witness.witness.weights.assign(8, Rational(0));
  bad_witness.witness.tiebreak = {0, 1, 2, 3, 4, 5, 6, 7};
  bad_witness.witness.flavor = OrderFlavor::Lex;
  const auto bw = verify_certificate(b3, bad_witness, 4);
  if (!bw.ok) CHECK(bw.failure == VerifyFailure::WitnessDisagrees);
}

TEST_CASE("verification is invariant under reordering the certificate") {
  const auto b3 = join_meet_generators(build_lattice(Poset::antichain(3)));
  auto c = *search_certificate(b3, 4);
  std::vector<std::size_t> idx(c.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  do {
    KoenigCertificate p = c;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      p.generator_ids[i] = c.generator_ids[idx[i]];
      p.marking[i] = c.marking[idx[i]];
    }
    CHECK(verify_certificate(b3, p, 4).ok);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("search examples") {
  const auto d = join_meet_generators(build_lattice(Poset::antichain(2)));
  const auto c = search_certificate(d, 1);
  REQUIRE(c.has_value());
  CHECK(c->generator_ids == std::vector<std::size_t>{0});

  // 11 coprime quadratics need 22 variables; B4 has 16.
  const auto b4 = join_meet_generators(build_lattice(Poset::antichain(4)));
  CHECK_FALSE(search_certificate(b4, 11).has_value());

  CHECK(search_certificate(join_meet_generators(build_lattice(Poset::antichain(3))), 4).has_value());
}

TEST_CASE("search agrees with the colex reference enumerator") {
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto l = build_lattice(p);
      const auto g = join_meet_generators(l);
      if (g.binomials.size() > 12) continue;
      const auto h = join_meet_height(l);
      CHECK(search_certificate(g, h).has_value() == oracle::reference_certificate_exists(g, h));
      ++compared;
    }
  CHECK(compared > 30);
}

TEST_CASE("search respects forbidden variables and budgets") {
  const auto g = join_meet_generators(build_lattice(Poset::antichain(3)));
  SearchOptions opt;
  opt.forbidden = {0, 7};
  const auto c = search_certificate(g, 4, opt);
  if (c) {
    for (const auto& m : c->initial_monomials(g)) {
      CHECK(m.exponent(0) == 0);
      CHECK(m.exponent(7) == 0);
    }
  }
  SearchOptions tight;
  tight.node_budget = 1;
  CHECK_THROWS_AS(search_certificate(g, 4, tight), Error);
}
