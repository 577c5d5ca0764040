#pragma once

#include "koenig/certificate.hpp"
#include "koenig/groebner.hpp"
#include "koenig/ideal.hpp"
#include "koenig/lattice.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koenig {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point&) const = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};
/// A cell is named by its lower-left corner.
using Cell = Point;

std::string to_string(const Point& p);  // "(x,y)"

inline constexpr std::size_t kMaxEnumeratedPolyominoSize = 7;

/// Finite edge-connected set of unit cells, translated so that the smallest
/// x and y coordinates are 0.
class Polyomino {
public:
  /// Throws EmptyInput or NotConnected.
  explicit Polyomino(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool contains(const Cell& c) const;
  /// Offset subtracted from the input cells by the constructor.
  static Point normalization_offset(const std::vector<Cell>& cells);

  bool operator==(const Polyomino& o) const { return cells_ == o.cells_; }
  bool operator<(const Polyomino& o) const { return cells_ < o.cells_; }

  /// Rows top to bottom, '#' for a cell.
  std::string to_grid() const;

private:
  std::vector<Cell> cells_;  // sorted
};

/// Rows top to bottom; '#' is a cell, '.' or ' ' empty.
Polyomino parse_polyomino_grid(const std::string& text);

struct VertexSet {
  std::vector<Point> vertices;   // sorted
  std::vector<std::uint8_t> cell_count;  // cells containing each vertex
  std::vector<bool> interior;    // in four cells
  std::vector<std::pair<Point, Point>> edges;  // unit edges, sorted
};
VertexSet vertices_and_edges(const Polyomino& p);

struct InnerInterval {
  Point a;  // lower left
  Point b;  // upper right
  Point c() const { return {b.x, a.y}; }
  Point d() const { return {a.x, b.y}; }
  auto operator<=>(const InnerInterval&) const = default;
};
std::string interval_tag(const InnerInterval& iv);  // "[(i,j),(k,l)]"

std::vector<InnerInterval> inner_intervals(const Polyomino& p);

/// x_a x_b - x_c x_d per inner interval, in the order of inner_intervals.
/// Variables are the vertices in sorted order, named "(i,j)".
IdealGenerators inner_minors(const Polyomino& p);

struct EdgeInterval {
  Point from;
  Point to;
  auto operator<=>(const EdgeInterval&) const = default;
};
struct EdgeIntervalProfile {
  std::vector<EdgeInterval> horizontal;
  std::vector<EdgeInterval> vertical;
  std::size_t h() const noexcept { return horizontal.size(); }
  std::size_t v() const noexcept { return vertical.size(); }
};
EdgeIntervalProfile edge_interval_profile(const Polyomino& p);

/// No holes: every non-cell square reaches the outside through non-cells.
bool is_simple(const Polyomino& p);

/// |V| - (h + v - 1). Throws NotSimple.
std::size_t height_simple(const Polyomino& p);

std::vector<Point> free_vertices(const Polyomino& p);
/// Cells with at least two free vertices.
std::vector<Cell> leaves(const Polyomino& p);
/// Simple, has a leaf, and no inner interval [a, a + (2,2)].
bool is_tree(const Polyomino& p);

struct IttenbachStep {
  Polyomino polyomino;
  KoenigCertificate certificate;
  /// Attachment side and which diagonal of the extended interval was marked,
  /// e.g. "right/diagonal".
  std::string variant;
};

/// Adds `cell` along one edge e of P. Needs a certificate interval I having e
/// as a full side, with marked term (diagonal of I) through one end of e.
/// I is replaced by I + cell and the new cell, with leads continuing the
/// marked diagonal. The far corners of the new cell must not be vertices of P.
/// Throws PreconditionViolated naming the failed clause.
IttenbachStep add_cell_ittenbach(const Polyomino& p, const KoenigCertificate& cert, const Cell& cell);

struct TreeCertification {
  KoenigCertificate certificate;
  std::size_t ittenbach_steps = 0;
  std::size_t search_steps = 0;  // steps where no interval fit and search filled in
};

/// Peels leaves (smallest corner first) down to one cell and replays the
/// cells forward with add_cell_ittenbach. Throws NotTree.
TreeCertification tree_certificate(const Polyomino& p, std::size_t node_budget = 0);

struct PolyominoClassification {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  bool simple = false;
  bool tree = false;
  std::optional<std::size_t> height;
  std::string height_source;  // "tree", "formula" or "oracle"
  std::optional<KoenigCertificate> certificate;
  std::size_t search_nodes = 0;
  /// height <= |P|; only a consequence of the theory for simple polyominoes.
  bool height_bound_holds = false;
  bool height_bound_conditional = false;
};

/// Tree shortcut, then certificate search among the inner 2-minors with
/// the height from the formula (simple) or from the Groebner oracle.
PolyominoClassification classify_koenig_polyomino(const Polyomino& p, std::size_t oracle_budget,
                                                  std::size_t node_budget = 0);

/// All fixed polyominoes with n cells, sorted. Throws SizeLimit past 7.
std::vector<Polyomino> enumerate_polyominoes(std::size_t n);

struct SplittableInterval {
  InnerInterval outer;
  std::int64_t cut;  // x (vertical split) or y (transposed) of the cut line
  bool transposed;
};
/// Every way to cut an inner interval into two inner intervals.
std::vector<SplittableInterval> splittable_intervals(const Polyomino& p);
SplitSpec split_spec(const SplittableInterval& s);
/// The two inner intervals on either side of the cut.
std::pair<InnerInterval, InnerInterval> split_halves(const SplittableInterval& s);

}  // namespace koenig
