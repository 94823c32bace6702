#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polylog/trees.hpp"

using namespace polylog;

namespace {

Scalar coeff_of(const ForestComb& c, std::vector<Tree> ts) {
  auto [f, s] = normalize_forest(std::move(ts));
  return c.coeff(f) * s;
}

std::vector<std::string> names(const std::vector<int>& pattern) {
  std::vector<std::string> out;
  for (int b : pattern) out.push_back("x" + std::to_string(b + 1));
  return out;
}

}  // namespace

TEST_CASE("parse and render round trip") {
  for (const char* s : {"(x4 (((x1)(x2))(x3)))", "(1 ((x1)(x2)))", "(a (b))", "(s3 (((~s0)(a1))((a2)((a3)(a4)))))",
                        "(1 ((_)(x)(y)))"}) {
    Tree t = parse_tree(s);
    CHECK(render(t) == s);
    CHECK(parse_tree(render(t)) == t);
  }
  CHECK_THROWS_AS(parse_tree("(x ((a)))"), ParseError);         // internal vertex of valency 2
  CHECK_THROWS_AS(parse_tree("(x (a)(b))"), ParseError);        // two root edges
  CHECK_THROWS_AS(parse_tree("( ((a)(b)))"), ParseError);       // undecorated root
  CHECK_THROWS_AS(parse_tree("(x ((~a)(~b)))"), ParseError);    // two marked leaves
  CHECK_THROWS_AS(parse_tree("(x ((a)(b))"), ParseError);       // unbalanced
}

TEST_CASE("canonical edge order of the five-edge tree and its mirror") {
  Tree t = parse_tree("(x4 (((x1)(x2))(x3)))");
  auto e = canonical_edge_order(t);
  REQUIRE(e.size() == 5);
  // e1 root edge, e2 to the inner vertex, e3/e4 to x1/x2, e5 to x3
  FlatTree f = flatten(t);
  CHECK(f.deco[e[0].parent] == "x4");
  CHECK(f.deco[e[2].child] == "x1");
  CHECK(f.deco[e[3].child] == "x2");
  CHECK(f.deco[e[4].child] == "x3");
  CHECK(e[1].parent == e[4].parent);
  CHECK(e[2].parent == e[1].child);

  Tree m = parse_tree("(x4 ((x3)((x2)(x1))))");
  auto em = canonical_edge_order(m);
  FlatTree fm = flatten(m);
  CHECK(fm.deco[em[1].child] == "x3");
  CHECK(fm.deco[em[3].child] == "x2");
  CHECK(fm.deco[em[4].child] == "x1");
  CHECK(edge_count(parse_tree("(a (b))")) == 1);
}

TEST_CASE("bigrading") {
  Tree t = parse_tree("(x4 (((x1)(x2))(x3)))");
  CHECK(bigrading(t) == ForestBigrading{5, 3});
  CHECK(bigrading(Forest{}) == ForestBigrading{0, 0});
  ForestComb d = tree_differential(parse_tree("(1 ((x1)(x2)))"));
  for (const auto& [f, c] : d) CHECK(bigrading(f) == ForestBigrading{2, 2});
}

TEST_CASE("differential of the tree with one internal vertex") {
  ForestComb d = tree_differential(parse_tree("(1 ((x1)(x2)))"));
  ForestComb want;
  want += forest_term({edge_tree("1", "x1"), edge_tree("1", "x2")});
  want += forest_term({edge_tree("1", "x1"), edge_tree("x1", "x2")}, Scalar(-1));
  want += forest_term({edge_tree("1", "x2"), edge_tree("x2", "x1")});
  CHECK(d == want);
  CHECK(d.size() == 3);
}

TEST_CASE("leaf and root contractions split as drawn") {
  Tree t = parse_tree("(p ((s)(r)(q)))");
  ForestComb leafc = contract_edge(t, 2);
  REQUIRE(leafc.size() == 1);
  CHECK(abs(coeff_of(leafc, {edge_tree("p", "r"), edge_tree("r", "s"), edge_tree("r", "q")})) == 1);

  ForestComb rootc = contract_edge(t, 0);
  REQUIRE(rootc.size() == 1);
  CHECK(abs(coeff_of(rootc, {edge_tree("p", "s"), edge_tree("p", "r"), edge_tree("p", "q")})) == 1);

  ForestComb unit = contract_edge(parse_tree("(a (b))"), 0);
  CHECK(unit == ForestComb(Forest{}));
  CHECK(tree_differential(parse_tree("(a (b))")).empty());
}

TEST_CASE("contraction sign moves the contracted edge to the front") {
  // contracting the k-th of three root-planted leaves in a corolla
  Tree t = parse_tree("(p ((a)(b)(c)))");
  // leaf b is edge 2; result (p (b)) * (b (a)) * (b (c)) with edge ids 0,1,3
  CHECK(coeff_of(contract_edge(t, 2), {edge_tree("p", "b"), edge_tree("b", "a"), edge_tree("b", "c")}) == 1);
  // leaf c is edge 3; ids 0,1,2 in order, sign (-1)^3
  CHECK(coeff_of(contract_edge(t, 3), {edge_tree("p", "c"), edge_tree("c", "a"), edge_tree("c", "b")}) == -1);
}

TEST_CASE("trees are identified up to sibling reordering with sign") {
  Tree a = parse_tree("(r ((x)((y)(z))))");
  Tree b = parse_tree("(r (((y)(z))(x)))");
  auto [fa, sa] = normalize_forest({a});
  auto [fb, sb] = normalize_forest({b});
  CHECK(fa == fb);
  CHECK(sa * sb == -1);  // blocks of sizes 1 and 3
  CHECK(normalize_forest({parse_tree("(r ((x)(x)))")}).second == 0);
  CHECK(normalize_forest({parse_tree("(r (((x)(y))((x)(y))))")}).second == 0);
  CHECK(normalize_forest({parse_tree("(r (((x)(y))((x)(y))(z)))")}).second == 0);
  // differential is compatible with the identification
  CHECK(tree_differential(a) * Scalar(sa) == tree_differential(b) * Scalar(sb));
}

TEST_CASE("d squared vanishes on every decorated shape with at most 5 edges") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : tree_shapes(n))
      for (const auto& pat : set_partitions(external_count(shape))) {
        Tree t = decorate(shape, names(pat));
        ForestComb d = tree_differential(t);
        for (const auto& [f, c] : d) CHECK(edge_count(f) == n - 1);
        CHECK(tree_differential(d).empty());
      }
}

TEST_CASE("Leibniz rule for the star product") {
  std::mt19937_64 rng(3);
  std::vector<Tree> pool;
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : tree_shapes(n)) {
      std::vector<std::string> d;
      for (int i = 0; i < external_count(shape); ++i) d.push_back("a" + std::to_string(rng() % 4));
      pool.push_back(decorate(shape, d));
    }
  for (int trial = 0; trial < 100; ++trial) {
    auto [a, sa] = normalize_forest({pool[rng() % pool.size()]});
    auto [b, sb] = normalize_forest({pool[rng() % pool.size()], pool[rng() % pool.size()]});
    if (sa == 0 || sb == 0) continue;
    ForestComb A(a), B(b);
    ForestComb lhs = tree_differential(star(A, B));
    ForestComb rhs = star(tree_differential(A), B) + star(A, tree_differential(B)) * Scalar(edge_count(a) % 2 ? -1 : 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contracting adjacent leaves in sequence gives the unit factor") {
  // after contracting leaf a, the neighbour b hangs off a single-edge tree
  Tree t = parse_tree("(r ((a)(b)))");
  ForestComb first = contract_edge(t, 1);
  REQUIRE(first.size() == 1);
  const Forest& f = first.begin()->first;
  for (const auto& tree : f) CHECK(tree_differential(tree).empty());
}

TEST_CASE("genericity") {
  CHECK(is_generic(parse_tree("(x5 (((x1)(x2))((x3)(x4))))")));
  CHECK_FALSE(is_generic(parse_tree("(r ((x)(x)))")));
  CHECK_FALSE(is_generic(parse_tree("(x ((x)(y)))")));
}

TEST_CASE("shape counts") {
  CHECK(tree_shapes(1).size() == 1);
  CHECK(tree_shapes(2).size() == 0);
  CHECK(tree_shapes(3).size() == 1);
  CHECK(tree_shapes(4).size() == 1);
  CHECK(tree_shapes(5).size() == 3);
}
