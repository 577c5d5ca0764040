#include "doctest.h"

#include "koenig/error.hpp"
#include "koenig/groebner.hpp"
#include "koenig/lattice.hpp"
#include "koenig/lattice_certificates.hpp"
#include "support/oracles.hpp"

#include <set>

using namespace koenig;

namespace {

DistributiveLattice diamond() { return build_lattice(Poset::antichain(2)); }
DistributiveLattice b3() { return build_lattice(Poset::antichain(3)); }

// Every element comparable with all others, by direct scan.
std::vector<std::size_t> brute_apexes(const DistributiveLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    bool all = true;
    for (std::size_t b = 0; b < l.size(); ++b) all = all && l.comparable(a, b);
    if (all) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("build_lattice basics") {
  const auto d = diamond();
  CHECK(d.size() == 4);
  const auto rp = rank_profile(d);
  CHECK(rp.rank == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(b3().size() == 8);
  CHECK(build_lattice(Poset::chain(3)).size() == 4);
  CHECK(build_lattice(Poset{}).size() == 1);
}

TEST_CASE("lattice axioms and maximal chain length on the catalog") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto l = build_lattice(p);
      for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b) {
          CHECK(l.join(a, b) == l.join(b, a));
          CHECK(l.meet(a, l.join(a, b)) == a);
          for (std::size_t c = 0; c < l.size(); ++c)
            CHECK(l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)));
        }
      // Covers raise the cardinality by one, so every maximal chain has length d.
      for (const auto& [a, b] : l.covers()) CHECK(l.element(b).size() == l.element(a).size() + 1);
      const auto rp = rank_profile(l);
      CHECK(rp.rank[l.top()] == l.d());
    }
}

TEST_CASE("rank profiles") {
  auto rp = rank_profile(diamond());
  CHECK(rp.rho == std::vector<std::size_t>{1, 2, 1});
  CHECK(rp.theta == 0);
  CHECK(rp.apexes == std::vector<std::size_t>{0, 3});

  rp = rank_profile(b3());
  CHECK(rp.rho == oracle::brute_rho(Poset::antichain(3)));
  CHECK(rp.rho == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(rp.theta == 2);

  rp = rank_profile(build_lattice(Poset::chain(3)));
  CHECK(rp.rho == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(rp.apexes.size() == 4);
}

TEST_CASE("rank profile invariants over posets up to 5 elements") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto l = build_lattice(p);
      const auto rp = rank_profile(l);
      CHECK(rp.rho.front() == 1);
      CHECK(rp.rho.back() == 1);
      std::size_t total = 0;
      for (auto r : rp.rho) total += r;
      CHECK(total == l.size());
      CHECK(rp.rho == oracle::brute_rho(p));
      CHECK(rp.apexes == brute_apexes(l));
      const auto t = oracle::brute_thin(p);
      CHECK(is_quasi_thin(l) == t.quasi_thin);
      CHECK(rp.theta == t.theta);
    }
}

TEST_CASE("simple and quasi-thin predicates") {
  CHECK(is_simple(b3()));
  CHECK(is_quasi_thin(b3()));
  CHECK_FALSE(is_simple(build_lattice(Poset::chain(1))));
  const auto b4 = build_lattice(Poset::antichain(4));
  CHECK_FALSE(is_quasi_thin(b4));
  CHECK(rank_profile(b4).rho == std::vector<std::size_t>{1, 4, 6, 4, 1});
}

TEST_CASE("apex decomposition") {
  auto dec = apex_decomposition(b3());
  CHECK(dec.blocks.size() == 1);
  CHECK_FALSE(dec.decomposable);

  const auto stacked = build_lattice(ordinal_sum(Poset::antichain(2), Poset::antichain(2), true));
  dec = apex_decomposition(stacked);
  CHECK(dec.decomposable);
  std::size_t diamonds = 0, links = 0;
  for (const auto& b : dec.blocks) {
    if (b.lattice.size() == 4 && b.d == 2) ++diamonds;
    if (b.d == 1) ++links;
  }
  CHECK(diamonds == 2);
  CHECK(links == 1);

  dec = apex_decomposition(build_lattice(Poset::chain(3)));
  CHECK(dec.blocks.size() == 3);
  CHECK(dec.decomposable);
  for (const auto& b : dec.blocks) CHECK(b.d == 1);
}

TEST_CASE("apex blocks partition d") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto l = build_lattice(p);
      const auto dec = apex_decomposition(l);
      std::size_t sum = 0;
      for (const auto& b : dec.blocks) sum += b.d;
      CHECK(sum == l.d());
    }
}

TEST_CASE("classification examples") {
  CHECK(classify_koenig_lattice(b3()).verdict == Verdict::Koenig);
  const auto b4 = classify_koenig_lattice(build_lattice(Poset::antichain(4)));
  CHECK(b4.verdict == Verdict::NotKoenig);
  CHECK(classify_koenig_lattice(build_lattice(Poset::chain(4))).verdict == Verdict::Koenig);
  CHECK(classify_koenig_lattice(build_lattice(Poset::chain(1))).verdict == Verdict::Koenig);
}

TEST_CASE("simple types") {
  CHECK(simple_type(b3()) == SimpleType::Type2a);
  CHECK(simple_type(diamond()) == SimpleType::Type0);
  CHECK(simple_type(build_lattice(Poset::antichain(4))) == SimpleType::NotApplicable);
  CHECK(to_string(SimpleType::Type2b) == "type2b");
  // Rho with 3 at ranks 2 and 4 comes from search over the catalog.
  bool found_2b = false;
  for (const auto& p : enumerate_posets(6)) {
    const auto l = build_lattice(p);
    if (!is_simple(l)) continue;
    const auto rp = rank_profile(l);
    if (rp.theta == 2 && is_quasi_thin(l) && rp.rho[2] == 3 && rp.rho[4] == 3) {
      CHECK(simple_type(l) == SimpleType::Type2b);
      found_2b = true;
      break;
    }
  }
  CHECK(found_2b);
}

TEST_CASE("join-meet generators") {
  CHECK(join_meet_generators(diamond()).binomials.size() == 1);
  const auto g = join_meet_generators(b3());
  CHECK(g.binomials.size() == oracle::brute_incomparable_pairs(Poset::antichain(3)));
  CHECK(g.binomials.size() == 9);
  CHECK(join_meet_generators(build_lattice(Poset::chain(3))).binomials.empty());
  CHECK(g.has_private_monomials());
}

TEST_CASE("block certificates agree with classification on posets up to 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto l = build_lattice(p);
      const auto verdict = classify_koenig_lattice(l).verdict;
      const auto cert = certify_lattice(l);
      CHECK((verdict == Verdict::Koenig) == cert.certificate.has_value());
      if (cert.certificate) CHECK(verify_certificate(cert.generators, *cert.certificate, cert.height).ok);
    }
}

TEST_CASE("top extension on the diamond") {
  const auto l = diamond();
  const auto g = join_meet_generators(l);
  KoenigCertificate c;
  c.generator_ids = {0};
  c.marking = {Side::First};
  c.claimed_height = 1;
  c.witness = *marking_realizable(g, c.marked());
  REQUIRE(verify_certificate(g, c, 1).ok);

  auto [lp, cp] = extend_nightingale(l, c, 0, NightingaleVariant::Plain);
  CHECK(lp.size() == 6);
  CHECK(cp.size() == 2);
  const auto gp = join_meet_generators(lp);
  CHECK(verify_certificate(gp, cp, join_meet_height(lp)).ok);
  CHECK(join_meet_height(lp) == join_meet_height(l) + 1);

  // Star: mark the diagonal term instead.
  KoenigCertificate s = c;
  s.marking[0] = Side::Second;
  s.witness = *marking_realizable(g, s.marked());
  auto [ls, cs] = extend_nightingale(l, s, 0, NightingaleVariant::Star);
  const auto gs = join_meet_generators(ls);
  REQUIRE(verify_certificate(gs, cs, join_meet_height(ls)).ok);
  // in(f') = x_{a^b} x_e and in(f'') = x_{avb} x_c.
  const auto lead = cs.initial_monomials(gs);
  const std::size_t e = ls.top();
  const std::size_t bottom = ls.bottom();
  const std::size_t old_top = *ls.index_of(l.element(l.top()).members);
  CHECK(lead[0] == Monomial::product(static_cast<VarId>(bottom), static_cast<VarId>(e)));
  CHECK(lead[1].exponent(static_cast<VarId>(old_top)) == 1);

  // Wrong marking for the variant.
  CHECK_THROWS_AS(extend_nightingale(l, c, 0, NightingaleVariant::Star), Error);
}

TEST_CASE("dual top extensions verify") {
  const auto l = diamond();
  const auto g = join_meet_generators(l);
  KoenigCertificate c;
  c.generator_ids = {0};
  c.marking = {Side::First};
  c.claimed_height = 1;
  c.witness = *marking_realizable(g, c.marked());
  for (auto v : {NightingaleVariant::DualPlain, NightingaleVariant::DualStar}) {
    KoenigCertificate in = c;
    if (v == NightingaleVariant::DualStar) {
      in.marking[0] = Side::Second;
      in.witness = *marking_realizable(g, in.marked());
    }
    auto [lp, cp] = extend_nightingale(l, in, 0, v);
    CHECK(lp.size() == 6);
    CHECK(verify_certificate(join_meet_generators(lp), cp, join_meet_height(lp)).ok);
    // A new bottom below the old one, and c beside the old bottom at rank 1.
    const auto rp = rank_profile(lp);
    CHECK(rp.rho == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(lp.d() == l.d() + 1);
  }
  CHECK(parse_nightingale_variant("dual_star") == NightingaleVariant::DualStar);
  CHECK_THROWS_AS(parse_nightingale_variant("sideways"), Error);
}

TEST_CASE("repeated top extensions keep verifying") {
  // Repeated top extensions starting from B3 under both variants.
  for (auto variant : {NightingaleVariant::Plain, NightingaleVariant::Star}) {
    auto l = b3();
    auto gens = join_meet_generators(l);
    auto cert = *certify_lattice(l).certificate;
    for (int step = 0; step < 3; ++step) {
      const auto rp = rank_profile(l);
      const Side want = variant == NightingaleVariant::Plain ? Side::First : Side::Second;
      std::optional<std::size_t> pos;
      for (std::size_t k = 0; k < cert.size() && !pos; ++k) {
        const auto& b = gens.binomials[cert.generator_ids[k]];
        auto s = b.first.support();
        if (rp.rank[s[0]] == l.d() - 1 && rp.rank[s[1]] == l.d() - 1 && cert.marking[k] == want) pos = k;
      }
      if (!pos) break;
      auto [lp, cp] = extend_nightingale(l, cert, *pos, variant);
      const auto gp = join_meet_generators(lp);
      CHECK(verify_certificate(gp, cp, join_meet_height(lp)).ok);
      CHECK(join_meet_height(lp) == join_meet_height(l) + 1);
      l = std::move(lp);
      gens = gp;
      cert = std::move(cp);
    }
  }
}

TEST_CASE("top extension precondition failures") {
  const auto l = b3();
  const auto cert = *certify_lattice(l).certificate;
  const auto g = join_meet_generators(l);
  const auto rp = rank_profile(l);
  // A generator whose pair is not at rank d - 1.
  for (std::size_t k = 0; k < cert.size(); ++k) {
    auto s = g.binomials[cert.generator_ids[k]].first.support();
    if (rp.rank[s[0]] != l.d() - 1 || rp.rank[s[1]] != l.d() - 1) {
      try {
        extend_nightingale(l, cert, k, NightingaleVariant::Plain);
        FAIL("expected PreconditionViolated");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
        CHECK(std::string(e.what()).find("rank") != std::string::npos);
      }
      break;
    }
  }
  CHECK_THROWS_AS(extend_nightingale(l, cert, 99, NightingaleVariant::Plain), Error);
}
