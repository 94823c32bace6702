#pragma once
// Decorated planted plane trees, forests and the edge-contraction differential.
//
// Decoration strings double as vertex flags: "_" marks an undecorated leaf and a
// leading '~' marks the distinguished external vertex of an enhanced tree.  In an
// enhanced tree the vertices on the path from that leaf to the root are of
// second type; every other non-root vertex is of first type.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polylog/algebra.hpp"

namespace polylog {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Node {
  std::string deco;  // empty for internal vertices
  std::vector<Node> kids;
  bool external() const { return kids.empty(); }
};

int compare(const Node& a, const Node& b);
inline bool operator<(const Node& a, const Node& b) { return compare(a, b) < 0; }
inline bool operator==(const Node& a, const Node& b) { return compare(a, b) == 0; }

// The root is an external vertex joined by the root edge to `top`.
struct Tree {
  std::string root;
  Node top;
};

int compare(const Tree& a, const Tree& b);
inline bool operator<(const Tree& a, const Tree& b) { return compare(a, b) < 0; }
inline bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }

// A forest basis element: canonical trees in ascending order.  The empty
// forest is the unit.
using Forest = std::vector<Tree>;
using ForestComb = LinComb<Forest>;

inline bool is_undecorated(const std::string& d) { return d == "_"; }
inline bool is_second_type(const std::string& d) { return !d.empty() && d[0] == '~'; }
inline std::string strip_marker(const std::string& d) { return is_second_type(d) ? d.substr(1) : d; }

Tree make_tree(std::string root, Node top);
Node leaf(std::string deco);
Node internal(std::vector<Node> kids);
// Single-edge tree with the given root and leaf decorations.
Tree edge_tree(const std::string& root, const std::string& leaf_deco);

int edge_count(const Node& subtree);  // edges below and including the incoming edge
int edge_count(const Tree& t);
int edge_count(const Forest& f);
int leaf_count(const Tree& t);

struct ForestBigrading {
  int n = 0;  // edges
  int p = 0;  // leaves
  bool operator==(const ForestBigrading& o) const { return n == o.n && p == o.p; }
};
ForestBigrading bigrading(const Tree& t);
ForestBigrading bigrading(const Forest& f);

// Vertices in preorder; vertex 0 is the root.  Edge k of the canonical order
// joins parent[k+1] to vertex k+1.
struct FlatTree {
  std::vector<std::string> deco;
  std::vector<int> parent;
  std::vector<std::vector<int>> kids;
};
FlatTree flatten(const Tree& t);

struct Edge {
  int parent;
  int child;
};
std::vector<Edge> canonical_edge_order(const Tree& t);

// Sorts siblings into canonical order.  Returns the sign relating the two
// canonical edge orders, or 0 if the tree admits an odd automorphism.
int canonicalize(Tree& t);

// Well-formedness: root decorated, internal vertices with at least two
// children, leaves decorated, at most one second-type leaf.  Throws ParseError.
void validate(const Tree& t);
bool is_enhanced(const Tree& t);
bool is_generic(const Tree& t);

// Sign-adjusted canonical forest from an ordered list of trees (oriented by
// concatenating their canonical edge orders).  Returns coefficient 0 when the
// forest vanishes.
std::pair<Forest, int> normalize_forest(std::vector<Tree> trees);

ForestComb forest_term(std::vector<Tree> trees, const Scalar& c = Scalar(1));

// Contraction of edge k (canonical position) with orientation i_e(omega).
ForestComb contract_edge(const Tree& t, int k);
ForestComb tree_differential(const Tree& t);
ForestComb tree_differential(const Forest& f);
ForestComb tree_differential(const ForestComb& f);
ForestComb star(const Forest& a, const Forest& b);
ForestComb star(const ForestComb& a, const ForestComb& b);

std::string render(const Node& n);
std::string render(const Tree& t);
std::string render(const Forest& f);
std::string render(const ForestComb& f);
std::string render_latex(const Forest& f);
Tree parse_tree(const std::string& s);

// Shapes with every decoration empty: all planted plane trees with n edges
// whose internal vertices have at least two children.
std::vector<Tree> tree_shapes(int n);
// External vertices (root first, then leaves) in preorder.
int external_count(const Tree& t);
Tree decorate(const Tree& shape, const std::vector<std::string>& decos);

}  // namespace polylog
