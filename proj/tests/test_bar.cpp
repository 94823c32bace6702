#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polylog/bar.hpp"

using namespace polylog;

namespace {

Polygon digits(const std::string& s) {
  Polygon p;
  for (char c : s) p.sides.push_back(std::string(1, c));
  return p;
}

// "14|24^34" in the digit shorthand; letters must already be canonical
BarWord W(const std::string& s) {
  BarWord w;
  std::string letter;
  auto flush = [&] {
    PolyWedge l;
    std::size_t i = 0;
    while (i <= letter.size()) {
      std::size_t j = letter.find('^', i);
      if (j == std::string::npos) j = letter.size();
      l.push_back(digits(letter.substr(i, j - i)));
      i = j + 1;
    }
    w.push_back(l);
    letter.clear();
  };
  for (char c : s) {
    if (c == '|')
      flush();
    else
      letter += c;
  }
  flush();
  return w;
}

BarComb B(std::initializer_list<std::pair<int, const char*>> terms) {
  BarComb out;
  for (const auto& [c, w] : terms) out.add(W(w), Scalar(c));
  return out;
}

Polygon random_polygon(std::mt19937& rng, int sides) {
  Polygon p;
  std::uniform_int_distribution<int> atom(1, 4);
  for (int i = 0; i < sides; ++i) p.sides.push_back("a" + std::to_string(atom(rng)));
  return p;
}

}  // namespace

TEST_CASE("triangle") {
  BarComb b = bar_element(digits("123"));
  CHECK(b == B({{1, "123"}, {1, "13|23"}, {1, "23|12"}, {-1, "13|21"}}));
  CHECK(bar_element(digits("12")) == B({{1, "12"}}));
}

TEST_CASE("quadrangle components") {
  BarComb b = bar_element(digits("1234"));
  CHECK(bar_component(b, 1) == B({{1, "1234"}}));
  CHECK(bar_component(b, 2) == B({{1, "14|234"},
                                  {1, "34|123"},
                                  {-1, "124|32"},
                                  {-1, "134|21"},
                                  {1, "124|34"},
                                  {1, "134|23"},
                                  {1, "234|12"},
                                  {1, "14|321"}}));
  CHECK(bar_component(b, 3) == B({{1, "14|24|34"},
                                  {1, "34|13|23"},
                                  {-1, "24|12|32"},
                                  {-1, "24|32|12"},
                                  {1, "14|31|21"},
                                  {1, "14|34|23"},
                                  {1, "34|23|12"},
                                  {1, "14|21|32"},
                                  {-1, "14|21|34"},
                                  {-1, "14|34|21"},
                                  {-1, "14|24|32"},
                                  {-1, "34|13|21"},
                                  {1, "24|12|34"},
                                  {1, "24|34|12"},
                                  {-1, "14|31|23"}}));
}

TEST_CASE("cancellation pairs") {
  CHECK(bar_D1(W("14|24|34")).coeff(W("14|24^34")) == 1);
  CHECK(bar_D2(W("14|234")).coeff(W("14|24^34")) == -1);
  CHECK(bar_D1(W("14|34|23")).coeff(W("14^34|23")) == -1);
  CHECK(bar_D2(W("134|23")).coeff(W("14^34|23")) == 1);
  CHECK(bar_D1(W("123")).empty());
  CHECK(bar_D2(W("12|34|56")).empty());
  CHECK_FALSE(is_zero_cocycle(BarComb(W("123"))));
}

TEST_CASE("B is a cocycle up to six sides") {
  for (const auto& p : polygon_patterns(2, 6)) CHECK_MESSAGE(is_zero_cocycle(bar_element(p)), render(p));
  for (const char* s : {"[~0,x1,x2,x3]", "[~0,a,b]", "[~s0,a1,a2,a3,s3]", "[~0,a,b,a,c]", "[~0,a,b,c,d,e]"})
    CHECK_MESSAGE(is_zero_cocycle(bar_element(parse_polygon(s))), s);
}

TEST_CASE("enhanced triangle") {
  Polygon p = parse_polygon("[~0,x1,x2,x3]");
  BarComb b = bar_element(p);
  // the one- and two-letter part is the five displayed terms
  BarComb low = bar_component(b, 1) + bar_component(b, 2);
  CHECK(low.size() == 5);
  CHECK(low.coeff(bar_word({p})) == 1);
  int minus = 0;
  for (const auto& [w, c] : low) {
    CHECK(w[0][0].enhanced());
    if (c == -1) ++minus;
  }
  CHECK(minus == 1);
  CHECK(bar_component(b, 3).size() == 3);
}

TEST_CASE("D squares to zero on random words") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    BarWord w;
    int budget = 6;
    while (budget > 0) {
      int sides = std::uniform_int_distribution<int>(2, std::min(4, budget + 1))(rng);
      int k = std::uniform_int_distribution<int>(1, 2)(rng);
      std::vector<Polygon> fs;
      for (int i = 0; i < k && budget > 0; ++i) {
        fs.push_back(random_polygon(rng, sides));
        budget -= sides - 1;
      }
      auto [letter, s] = wedge_normalize(fs, [](const Polygon&) { return 1; });
      if (s != 0) w.push_back(letter);
    }
    BarComb one(w);
    CHECK_MESSAGE(bar_D(bar_D(one)).empty(), render(w));
  }
}

TEST_CASE("deconcatenation") {
  BarWord ab = W("12|34");
  BarTensor2 d = coproduct_deconcat(BarComb(ab));
  CHECK(d.size() == 3);
  CHECK(d.coeff({BarWord{}, ab}) == 1);
  CHECK(d.coeff({W("12"), W("34")}) == 1);
  CHECK(d.coeff({ab, BarWord{}}) == 1);
  CHECK_THROWS_AS(coproduct_deconcat(BarComb(W("12^34"))), std::invalid_argument);
  BarTensor2 two = coproduct_admissible(digits("12"));
  CHECK(two == coproduct_deconcat(bar_element(digits("12"))));
  CHECK(two.size() == 2);
}

TEST_CASE("admissible coproduct equals deconcatenation up to five sides") {
  for (const auto& p : polygon_patterns(2, 5))
    CHECK_MESSAGE(coproduct_admissible(p) == coproduct_deconcat(bar_element(p)), render(p));
  for (const char* s : {"[~0,x1,x2,x3]", "[~0,a,b]", "[~0,a,b,c,d]", "[~0,a,a,b,c]"}) {
    Polygon p = parse_polygon(s);
    BarTensor2 adm = coproduct_admissible(p);
    CHECK_MESSAGE(adm == coproduct_deconcat(bar_element(p)), s);
    for (const auto& [t, c] : adm) CHECK(t.first[0][0].enhanced());
  }
}

TEST_CASE("coassociativity up to five sides") {
  for (const auto& p : polygon_patterns(2, 5)) CHECK_MESSAGE(coassoc_left(p) == coassoc_right(p), render(p));
  Polygon e = parse_polygon("[~0,a,b,c,d]");
  CHECK(coassoc_left(e) == coassoc_right(e));
}

TEST_CASE("counit") {
  for (const auto& p : polygon_patterns(3, 5)) {
    BarComb b = bar_element(p);
    BarTensor2 d = coproduct_admissible(p);
    BarComb left, right;
    for (const auto& [t, c] : d) {
      if (t.first.empty()) left.add(t.second, c);
      if (t.second.empty()) right.add(t.first, c);
    }
    CHECK(left == b);
    CHECK(right == b);
  }
}

TEST_CASE("shuffles") {
  CHECK(shuffle_bar(W("12"), W("34")) == B({{1, "12|34"}, {1, "34|12"}}));
  CHECK(shuffle_bar(bar_element(parse_polygon("[x,a]")), bar_element(parse_polygon("[y,a]"))).size() == 2);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    BarComb a = bar_element(random_polygon(rng, std::uniform_int_distribution<int>(2, 3)(rng)));
    BarComb b = bar_element(random_polygon(rng, std::uniform_int_distribution<int>(2, 3)(rng)));
    CHECK(coproduct_deconcat(shuffle_bar(a, b)) == shuffle_pairs(coproduct_deconcat(a), coproduct_deconcat(b)));
  }
}

TEST_CASE("bar word text") {
  for (const auto& [w, c] : bar_element(parse_polygon("[x1,x2,x3,1]"))) CHECK(parse_bar_word(render(w)) == w);
  BarWord w = W("14|24^34");
  CHECK(render(w) == "[[1,4]|[2,4]^[3,4]]");
  CHECK(parse_bar_word(render(w)) == w);
  CHECK(parse_bar_word("1").empty());
  CHECK_THROWS_AS(parse_bar_word("[[1,2]|[3]]"), ParseError);
  CHECK_THROWS_AS(parse_bar_word("[[1,2]"), ParseError);
  CHECK(render_latex(W("12")).find("\\big[") == 0);
  BarTensor2 d = coproduct_deconcat(BarComb(W("12|34")));
  CHECK(render(d, true) != render(d, false));
}
