#pragma once
// Decorated polygons: arrows, the two dissection differentials, n-fold
// dissections with their dual trees and signs, and the map to trivalent trees.
//
// Sides are listed in order with the root side last.  Vertex i (0 <= i < N)
// joins side i and side i+1; vertex 0 joins the root side N and side 1.
// A side "_" is undecorated; a leading '~' marks the second-type side, which
// may only be the first side.

#include <string>
#include <vector>

#include "polylog/algebra.hpp"
#include "polylog/trees.hpp"

namespace polylog {

struct Polygon {
  std::vector<std::string> sides;
  int size() const { return static_cast<int>(sides.size()); }
  bool enhanced() const { return !sides.empty() && is_second_type(sides[0]); }
};

// Enhanced polygons sort first so that they lead every wedge word.
int compare(const Polygon& a, const Polygon& b);
inline bool operator<(const Polygon& a, const Polygon& b) { return compare(a, b) < 0; }
inline bool operator==(const Polygon& a, const Polygon& b) { return a.sides == b.sides; }
inline bool operator!=(const Polygon& a, const Polygon& b) { return !(a == b); }

void validate(const Polygon& p);  // throws ParseError
int weight(const Polygon& p);

// Wedge words of polygons; every polygon has odd degree.
using PolyWedge = std::vector<Polygon>;
using PolyComb = LinComb<PolyWedge>;
PolyComb wedge_term(std::vector<Polygon> factors, const Scalar& c = Scalar(1));

struct Arrow {
  int vertex;  // 0..N-1
  int side;    // 1..N
  bool operator==(const Arrow& o) const { return vertex == o.vertex && side == o.side; }
  bool operator<(const Arrow& o) const { return vertex != o.vertex ? vertex < o.vertex : side < o.side; }
};

inline bool is_backward(const Arrow& a) { return a.side <= a.vertex; }
bool is_trivial(const Arrow& a, int n);
bool crosses(const Arrow& a, const Arrow& b, int n);
// Admissible arrows in (vertex, side) order.  Enhanced polygons exclude
// arrows from vertex 0 and arrows ending on the second-type side.
std::vector<Arrow> arrows(const Polygon& p);

struct Cut {
  Polygon root;
  Polygon cut;      // reversed when the arrow is backward
  Polygon cut_bar;  // orientation inherited
};
Cut dissect_one(const Polygon& p, const Arrow& a);  // throws std::invalid_argument

enum class Variant { Standard, Bar };
PolyComb polygon_differential(const Polygon& p, Variant v = Variant::Standard);
PolyComb polygon_differential(const PolyWedge& w, Variant v = Variant::Standard);
PolyComb polygon_differential(const PolyComb& c, Variant v = Variant::Standard);

// Side and vertex labels of a sub-polygon, in terms of the original polygon.
struct Labeled {
  std::vector<int> side;    // original side ids, root last
  std::vector<int> vertex;  // original vertex ids, vertex[0] joins root and first side
};
Labeled identity_labels(int n);
Labeled reversed(const Labeled& l);
Polygon realize(const Polygon& p, const Labeled& l);

struct Region {
  Labeled labels;  // orientation of the region polygon
  Polygon poly;
  int parent = -1;       // index into regions; -1 for the root region
  int root_arrow = -1;   // index into arrows; -1 for the root region
  std::vector<int> kids; // plane order
};

struct Dissection {
  std::vector<Arrow> arrows;    // sorted
  std::vector<Region> regions;  // regions[0] is the root region; parents precede children
  int sign = 1;
};

// Regions, dual tree and sign of a set of pairwise non-crossing arrows.
Dissection analyze_dissection(const Polygon& p, std::vector<Arrow> arrows);
std::vector<std::vector<Arrow>> enumerate_arrow_sets(const Polygon& p, int n);  // n-fold: n-1 arrows
std::vector<Dissection> enumerate_dissections(const Polygon& p, int n);
std::vector<Dissection> all_dissections(const Polygon& p);
int sign_dissection(const Polygon& p, const std::vector<Arrow>& arrows);
// The arrows of a finer dissection that lie inside region r of d, in the
// numbering of that region's polygon.  Arrows of d itself are skipped.
std::vector<Arrow> induced_arrows(const Dissection& d, int r, const std::vector<Arrow>& finer);

// Sum of dual trivalent trees over all triangulations.
ForestComb triangulations_psi(const Polygon& p);
ForestComb psi(const PolyComb& c);
ForestComb tree_sum(const std::vector<std::string>& decos);  // throws std::invalid_argument on repeats

std::string render(const Polygon& p);
std::string render(const PolyWedge& w);
std::string render(const PolyComb& c);
std::string render_latex(const Polygon& p);
Polygon parse_polygon(const std::string& s);

// All polygons with 2..max_sides sides whose decorations run over the
// equality patterns of the sides.
std::vector<Polygon> polygon_patterns(int min_sides, int max_sides);

}  // namespace polylog
