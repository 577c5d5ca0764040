#include "doctest.h"

#include "koenig/error.hpp"
#include "koenig/groebner.hpp"
#include "koenig/polyomino.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace koenig;

namespace {

// Direct enumeration of inner intervals: all corner pairs with every cell inside.
std::size_t brute_inner_intervals(const Polyomino& p) {
  std::int64_t w = 0, h = 0;
  for (const auto& c : p.cells()) {
    w = std::max(w, c.x + 1);
    h = std::max(h, c.y + 1);
  }
  std::size_t k = 0;
  for (std::int64_t i = 0; i <= w; ++i)
    for (std::int64_t j = 0; j <= h; ++j)
      for (std::int64_t i2 = i + 1; i2 <= w; ++i2)
        for (std::int64_t j2 = j + 1; j2 <= h; ++j2) {
          bool all = true;
          for (std::int64_t x = i; x < i2; ++x)
            for (std::int64_t y = j; y < j2; ++y) all = all && p.contains({x, y});
          if (all) ++k;
        }
  return k;
}

// Fixed polyominoes by brute force: all n-subsets of an n x n box that are
// connected, up to translation.
std::size_t brute_fixed_polyominoes(std::size_t n) {
  std::set<std::vector<Cell>> seen;
  const auto side = static_cast<std::int64_t>(n);
  std::vector<Cell> box;
  for (std::int64_t x = 0; x < side; ++x)
    for (std::int64_t y = 0; y < side; ++y) box.push_back({x, y});
  std::vector<bool> pick(box.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < box.size(); ++i)
      if (pick[i]) cells.push_back(box[i]);
    try {
      seen.insert(Polyomino(cells).cells());
    } catch (const Error&) {
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return seen.size();
}

const Polyomino kCell({{0, 0}});
const Polyomino kDomino({{0, 0}, {1, 0}});
const Polyomino kSquare({{0, 0}, {1, 0}, {0, 1}, {1, 1}});

}  // namespace

TEST_CASE("parsing grids") {
  const auto l = parse_polyomino_grid("##\n.#\n");
  CHECK(l.size() == 3);
  CHECK(l.contains({0, 1}));
  CHECK(l.contains({1, 1}));
  CHECK(l.contains({1, 0}));
  try {
    parse_polyomino_grid("#.#");
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnected);
  }
  try {
    parse_polyomino_grid("...\n");
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
  CHECK(parse_polyomino_grid("###\n#.#\n###\n").size() == 8);
  CHECK_THROWS_AS(parse_polyomino_grid("#x"), Error);
  CHECK(l.to_grid() == "##\n.#\n");
}

TEST_CASE("vertices and edges") {
  auto vs = vertices_and_edges(kCell);
  CHECK(vs.vertices.size() == 4);
  CHECK(std::none_of(vs.interior.begin(), vs.interior.end(), [](bool b) { return b; }));
  vs = vertices_and_edges(kSquare);
  CHECK(vs.vertices.size() == 9);
  CHECK(std::count(vs.interior.begin(), vs.interior.end(), true) == 1);
  const auto l = parse_polyomino_grid("##\n.#\n");
  vs = vertices_and_edges(l);
  // Union of the three corner sets: 4 + 2 + 2.
  CHECK(vs.vertices.size() == 8);
  CHECK(std::count(vs.interior.begin(), vs.interior.end(), true) == 0);
}

TEST_CASE("inner minors") {
  CHECK(inner_minors(kCell).binomials.size() == 1);
  CHECK(inner_minors(kDomino).binomials.size() == 3);
  CHECK(inner_minors(kSquare).binomials.size() == 9);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_polyominoes(n)) {
      const auto g = inner_minors(p);
      CHECK(g.binomials.size() == brute_inner_intervals(p));
      CHECK(g.has_private_monomials());
    }
}

TEST_CASE("edge interval profiles") {
  auto e = edge_interval_profile(kCell);
  CHECK(e.h() == 2);
  CHECK(e.v() == 2);
  e = edge_interval_profile(parse_polyomino_grid("##\n.#\n"));
  CHECK(e.h() == 3);
  CHECK(e.v() == 3);
  e = edge_interval_profile(kSquare);
  CHECK(e.h() == 3);
  CHECK(e.v() == 3);
}

TEST_CASE("each vertex lies on one maximal interval per direction") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_polyominoes(n)) {
      const auto vs = vertices_and_edges(p);
      const auto prof = edge_interval_profile(p);
      for (const auto& v : vs.vertices) {
        std::size_t h = 0, w = 0;
        for (const auto& iv : prof.horizontal) h += (v.y == iv.from.y && v.x >= iv.from.x && v.x <= iv.to.x) ? 1 : 0;
        for (const auto& iv : prof.vertical) w += (v.x == iv.from.x && v.y >= iv.from.y && v.y <= iv.to.y) ? 1 : 0;
        CHECK(h == 1);
        CHECK(w == 1);
      }
    }
}

TEST_CASE("simplicity") {
  CHECK(is_simple(kSquare));
  CHECK(is_simple(parse_polyomino_grid("#..\n###\n..#\n")));
  CHECK_FALSE(is_simple(parse_polyomino_grid("###\n#.#\n###\n")));
}

TEST_CASE("height formula") {
  CHECK(height_simple(kCell) == 1);
  CHECK(height_simple(parse_polyomino_grid("##\n.#\n")) == 3);
  CHECK(height_simple(kSquare) == 4);
  try {
    height_simple(parse_polyomino_grid("###\n#.#\n###\n"));
    FAIL("expected NotSimple");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimple);
  }
}

TEST_CASE("free vertices, leaves, trees") {
  CHECK(free_vertices(kCell).size() == 4);
  CHECK(leaves(kCell).size() == 1);
  CHECK(is_tree(kCell));
  CHECK_FALSE(is_tree(kSquare));
  const auto ring = parse_polyomino_grid("###\n#.#\n###\n");
  CHECK(leaves(ring).empty());
  CHECK_FALSE(is_tree(ring));
}

TEST_CASE("leaf extension") {
  const auto g = inner_minors(kCell);
  KoenigCertificate c = *search_certificate(g, 1);
  auto step = add_cell_ittenbach(kCell, c, {1, 0});
  CHECK(step.polyomino == kDomino);
  CHECK(step.certificate.size() == 2);
  CHECK(verify_certificate(inner_minors(step.polyomino), step.certificate, 2).ok);

  // Staircase of five cells.
  Polyomino p = kCell;
  KoenigCertificate cert = c;
  const std::vector<Cell> stairs{{1, 0}, {1, 1}, {2, 1}, {2, 2}};
  for (const auto& cell : stairs) {
    auto s = add_cell_ittenbach(p, cert, cell);
    p = s.polyomino;
    cert = s.certificate;
    CHECK(verify_certificate(inner_minors(p), cert, height_simple(p)).ok);
  }
  CHECK(cert.size() == 5);

  // Filling the notch of an L touches two cells.
  const auto l = parse_polyomino_grid("#.\n##\n");
  const auto lc = *search_certificate(inner_minors(l), 3);
  try {
    add_cell_ittenbach(l, lc, {1, 1});
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("leaf extension in every direction and marking") {
  const auto g = inner_minors(kCell);
  for (Side side : {Side::First, Side::Second}) {
    KoenigCertificate c;
    c.generator_ids = {0};
    c.marking = {side};
    c.claimed_height = 1;
    c.witness = *marking_realizable(g, c.marked());
    for (const Cell cell : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
      auto s = add_cell_ittenbach(kCell, c, cell);
      CHECK(verify_certificate(inner_minors(s.polyomino), s.certificate, 2).ok);
      CHECK_FALSE(s.variant.empty());
    }
  }
}

TEST_CASE("tree certificates") {
  auto t = tree_certificate(kCell);
  CHECK(t.certificate.size() == 1);
  const auto l = parse_polyomino_grid("##\n.#\n");
  t = tree_certificate(l);
  CHECK(t.certificate.size() == 3);
  CHECK(verify_certificate(inner_minors(l), t.certificate, height_simple(l)).ok);
  try {
    tree_certificate(kSquare);
    FAIL("expected NotTree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTree);
  }
}

TEST_CASE("polyomino classification") {
  auto r = classify_koenig_polyomino(kCell, kDefaultReductionBudget);
  CHECK(r.verdict == Verdict::Koenig);
  CHECK(r.certificate->size() == 1);
  r = classify_koenig_polyomino(kSquare, kDefaultReductionBudget);
  CHECK(r.height == 4);
  const auto g = inner_minors(kSquare);
  CHECK((r.verdict == Verdict::Koenig) == search_certificate(g, 4).has_value());
  if (r.certificate) CHECK(verify_certificate(g, *r.certificate, 4).ok);
}

TEST_CASE("ring polyomino gets its height from the oracle") {
  const auto ring = parse_polyomino_grid("###\n#.#\n###\n");
  const auto r = classify_koenig_polyomino(ring, kDefaultReductionBudget);
  CHECK(r.height_source == "oracle");
  REQUIRE(r.height.has_value());
  const auto g = inner_minors(ring);
  std::vector<VarId> ranking(g.num_vars);
  std::iota(ranking.rbegin(), ranking.rend(), VarId{0});
  CHECK(ideal_height(g, MonomialOrderWitness::lex(ranking)).height == *r.height);
  CHECK(r.height_bound_conditional);
  if (r.certificate) CHECK(verify_certificate(g, *r.certificate, *r.height).ok);
  CHECK(r.verdict != Verdict::NotKoenig);
}

TEST_CASE("polyomino enumeration") {
  CHECK(enumerate_polyominoes(1).size() == 1);
  CHECK(enumerate_polyominoes(2).size() == 2);
  CHECK(enumerate_polyominoes(4).size() == 19);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_polyominoes(n).size() == brute_fixed_polyominoes(n));
  CHECK_THROWS_AS(enumerate_polyominoes(8), Error);
}
