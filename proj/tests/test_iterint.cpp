#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polylog/iterint.hpp"

using namespace polylog;

namespace {

ISymbol I(const std::string& s) { return parse_isymbol(s); }
IElement E(const std::string& s, const Scalar& c = Scalar(1)) { return IElement(IMono{I(s)}, c); }
IElement one() { return IElement(IMono{}); }

ISymbol random_symbol(std::mt19937& rng, int degree, bool basis) {
  std::uniform_int_distribution<int> atom(0, 4);
  auto pick = [&] { return std::string(1, "0abcd"[atom(rng)]); };
  ISymbol s{basis ? "0" : pick(), {}, pick()};
  for (int i = 0; i < degree; ++i) s.mid.push_back(pick());
  return s;
}

}  // namespace

TEST_CASE("rewriting rules") {
  CHECK(i_normalize(I("I(a; b)")) == one());
  CHECK(i_normalize(I("I(a2; a1; a0)")) == i_normalize(I("I(a0; a1; a2)"), IRules{}) * Scalar(-1));
  CHECK(i_normalize(I("I(a0; a1; a2)")) == E("I(0; a1; a2)") - E("I(0; a1; a0)"));
  CHECK(i_normalize(I("I(0; a; 0)")).empty());
  IRules keep;
  keep.zero_between_zeros = false;
  CHECK(i_normalize(I("I(0; a; 0)"), keep) == E("I(0; a; 0)"));
  CHECK(i_normalize(I("I(a; x, y; 0)")) == E("I(0; y, x; a)"));
  CHECK(i_normalize(I("I(0; x, y; b)")) == E("I(0; x, y; b)"));
}

TEST_CASE("normalization does not depend on the order of the relations") {
  std::mt19937 rng(23);
  IRules inv;
  inv.invert_first = true;
  for (int trial = 0; trial < 300; ++trial) {
    ISymbol s = random_symbol(rng, 1 + trial % 4, false);
    CHECK_MESSAGE(i_normalize(s) == i_normalize(s, inv), render(s));
  }
}

TEST_CASE("coproduct in low degree") {
  ITensor d0 = i_coproduct(I("I(a; b)"));
  CHECK(d0 == ITensor(IPair{IMono{}, IMono{}}));
  ITensor d1 = i_coproduct(I("I(0; a; b)"));
  ITensor expect;
  expect.add({IMono{I("I(0; a; b)")}, IMono{}}, Scalar(1));
  expect.add({IMono{}, IMono{I("I(0; a; b)")}}, Scalar(1));
  CHECK(d1 == expect);
}

TEST_CASE("cobracket") {
  CHECK(i_cobracket(I("I(0; a; b)")).empty());
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    ISymbol s = random_symbol(rng, 1 + trial % 4, true);
    CHECK_MESSAGE(i_cobracket(s) == i_cobracket_from_coproduct(s), render(s));
  }
  for (const auto& p : polygon_patterns(2, 5)) {
    ISymbol s = polygon_to_i(p);
    CHECK_MESSAGE(i_cobracket(s) == i_cobracket_from_coproduct(s), render(s));
  }
}

TEST_CASE("co-Jacobi") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    ISymbol s = random_symbol(rng, 1 + trial % 4, true);
    IWedgeComb d = i_cobracket(s);
    CHECK_MESSAGE(i_cobracket(d).empty(), render(s));
  }
}

TEST_CASE("polygons and iterated integrals") {
  CHECK(polygon_to_i(parse_polygon("[x1,x2,1]")) == I("I(0; x1, x2; 1)"));
  CHECK(polygon_to_i(parse_polygon("[a,b]")) == I("I(0; a; b)"));
  CHECK(polygon_to_i(parse_polygon("[a1,a2,a3,a4,a5,a6]")) == I("I(0; a1, a2, a3, a4, a5; a6)"));
  CHECK_THROWS_AS(polygon_to_i(parse_polygon("[~0,a,b]")), std::invalid_argument);
  CHECK_THROWS_AS(polygon_to_i(parse_polygon("[a,_,b]")), std::invalid_argument);
  // the cobracket is the polygon differential read as symbols
  for (const auto& p : polygon_patterns(2, 5))
    CHECK_MESSAGE(i_cobracket(polygon_to_i(p)) == polygon_wedge_to_i(polygon_differential(p)), render(p));
  for (const char* s : {"[a1,a2,a3,a4,a5,a6]", "[a,b,a,c,b,d]"}) {
    Polygon p = parse_polygon(s);
    CHECK(i_cobracket(polygon_to_i(p)) == polygon_wedge_to_i(polygon_differential(p)));
  }
}

TEST_CASE("coalgebra map from polygons") {
  for (const auto& p : polygon_patterns(2, 5)) CHECK_MESSAGE(compare_coproducts(p), render(p));
  CHECK(compare_coproducts(parse_polygon("[a1,a2,a3,a4,a5,a6]")));
}

TEST_CASE("symbol text") {
  for (const char* s : {"I(0; x1, x2; 1)", "I(a; b)", "I(a; 0, b; 0)"}) CHECK(render(I(s)) == s);
  CHECK(I(" I( 0 ;x1,x2 ; 1 ) ") == I("I(0; x1, x2; 1)"));
  CHECK_THROWS_AS(I("I(0; x1,; 1)"), ParseError);
  CHECK_THROWS_AS(I("J(0; 1)"), ParseError);
  CHECK_THROWS_AS(I("I(0)"), ParseError);
  CHECK(render_latex(I("I(0; x; 1)")) == "I(0;\\, x;\\, 1)");
}
