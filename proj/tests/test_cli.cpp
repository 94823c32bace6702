#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "polylog/cli.hpp"
#include "polylog/serialize.hpp"
#include "polylog/verify.hpp"

using namespace polylog;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polylog");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("polygon commands") {
  Run d = run({"polygon", "diff", "[1,2,3]"});
  CHECK(d.code == 0);
  CHECK(d.out == "-[1,2]^[2,3] - [1,3]^[2,1] + [1,3]^[2,3]\n");
  Run c = run({"polygon", "coproduct", "[a,b]"});
  CHECK(c.out == "1 (x) [[a,b]] + [[a,b]] (x) 1\n");
  CHECK(run({"polygon", "coproduct", "[a,b,c]", "--method", "deconcat"}).out ==
        run({"polygon", "coproduct", "[a,b,c]"}).out);
  CHECK(run({"polygon", "bar", "[1,2,3]"}).out == "[[1,2,3]] - [[1,3]|[2,1]] + [[1,3]|[2,3]] + [[2,3]|[1,2]]\n");
  CHECK(run({"polygon", "psi", "[x1,x2,1]"}).out == "(1 ((x1)(x2)))\n");
  CHECK(run({"polygon", "diff", "[1,2,3,4]", "--bar-variant"}).code == 0);
}

TEST_CASE("tree, cycle and symbol commands") {
  CHECK(run({"tree", "diff", "(1 ((x1)(x2)))"}).out == "(1 (x1)) * (1 (x2)) - (1 (x1)) * (x1 (x2)) + (1 (x2)) * (x2 (x1))\n");
  CHECK(run({"cycle", "from-tree", "(1 ((x1)(x2)))"}).out == "[1-t1/x1, 1-t1/x2, 1-1/t1]\n");
  CHECK(run({"cycle", "diff", "[1-1/t, 1-t/x1, 1-t/x2]"}).out ==
        "-[1-1/x1, 1-x1/x2] + [1-1/x1, 1-1/x2] - [1-x2/x1, 1-1/x2]\n");
  CHECK(run({"cycle", "admissible", "[1-1/t, 1-t/x1, 1-t/x2]"}).out == "admissible\n");
  CHECK(run({"cycle", "admissible", "[1-t, 1-t/a, 1-a]"}).out == "not admissible\n");
  CHECK(run({"cycle", "from-polygon", "[x1,x2,1]"}).out == run({"cycle", "from-tree", "(1 ((x1)(x2)))"}).out);
  CHECK(run({"iterint", "normalize", "I(x; a; y)"}).out == "-I(0; a; x) + I(0; a; y)\n");
  CHECK(run({"iterint", "coproduct", "I(0; a; b)"}).out == "1 (x) I(0; a; b) + I(0; a; b) (x) 1\n");
  CHECK(run({"iterint", "cobracket", "I(0; a; b)"}).out == "0\n");
  CHECK(run({"iterint", "cobracket", "I(0; a, b; c)"}).code == 0);
}

TEST_CASE("numeric commands") {
  Run li = run({"eval", "li", "--ns", "1", "--zs", "0.5"});
  CHECK(li.code == 0);
  CHECK(li.out.rfind("0.693147180559", 0) == 0);
  CHECK(li.out.find("+-") != std::string::npos);
  Json lj = Json::parse(run({"eval", "li", "--ns", "1", "--zs", "0.5", "--format", "json"}).out);
  CHECK(std::abs(lj["data"]["value"].get<double>() - std::log(2.0)) <= lj["data"]["error"].get<double>());
  Run ii = run({"eval", "iint", "--xs", "50/3,5"});
  CHECK(ii.out.rfind("0.0070889794008", 0) == 0);
  Json j = Json::parse(run({"eval", "iint", "--xs", "5", "--format", "json"}).out);
  CHECK(j["kind"] == "estimate");
  CHECK(std::abs(j["data"]["value"].get<double>() - std::log(0.8)) < 1e-14);
  Run h = run({"compare", "hodge", "--x1", "5", "--x2", "2.5", "--format", "json"});
  Json hj = Json::parse(h.out);
  CHECK(hj["data"]["difference"].get<double>() < 1e-8);
}

TEST_CASE("exit codes") {
  CHECK(run({"polygon", "diff", "[1,2"}).code == 1);
  CHECK(run({"tree", "diff", "(r ((a)"}).code == 1);
  CHECK(run({"iterint", "normalize", "J(0; 1)"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"eval", "li", "--ns", "1", "--zs", "abc"}).code == 1);
  CHECK(run({"eval", "iint", "--xs", "0.5"}).code == 2);
  CHECK(run({"compare", "hodge", "--x1", "5", "--x2", "0.5"}).code == 2);
  CHECK(run({"cycle", "diff", "[1-t, t]"}).code == 2);
  CHECK(run({"eval", "li", "--ns", "1", "--zs", "2"}).code == 2);
  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("POLYLOG_SEED") != std::string::npos);
  CHECK(help.out.find("I(a0; a1, ..., an; b)") != std::string::npos);
}

TEST_CASE("formats") {
  Run tex = run({"polygon", "bar", "[1,2,3]", "--format", "latex"});
  CHECK(tex.out.find("\\big[") != std::string::npos);
  CHECK(tex.out.find("\\,\\big|\\,") != std::string::npos);
  CHECK(run({"cycle", "from-tree", "(1 ((x1)(x2)))", "--format", "latex"}).out.find("\\Big[") == 0);
  Json j = Json::parse(run({"polygon", "diff", "[1,2,3]", "--format", "json"}).out);
  CHECK(j["kind"] == "polygon_comb");
  CHECK(j["data"]["terms"].size() == 3);
  // JSON combinations read back to the same element
  PolyComb back = comb_from_json<PolyWedge>(j["data"], [](const Json& w) {
    PolyWedge out;
    for (const auto& p : w) out.push_back(polygon_from_json(p));
    return out;
  });
  CHECK(back == polygon_differential(parse_polygon("[1,2,3]")));
}

TEST_CASE("round trips in text and JSON") {
  for (const char* s : {"(1 ((x1)(x2)))", "(s3 (((~s0)(a1))((a2)((a3)(a4)))))", "(b ((a)(_)))"}) {
    Tree t = parse_tree(s);
    CHECK(parse_tree(render(t)) == t);
    CHECK(tree_from_json(unwrap(Json::parse(wrap("tree", to_json(t)).dump()), "tree")) == t);
  }
  for (const char* s : {"[x1,x2,1]", "[~0,a,b]", "[a,_,_,b]"}) {
    Polygon p = parse_polygon(s);
    CHECK(parse_polygon(render(p)) == p);
    CHECK(polygon_from_json(to_json(p)) == p);
  }
  for (const char* s : {"[1-1/t1, 1-t1/x1, 1-t1/x2]", "[a, 1-a]", "[1-x1*x2/t^2, t]",
                        "[1-s1/a1, 1-s2/t1] with s0<=s1<=s2<=s3"}) {
    Cycle c = parse_cycle(s);
    CHECK(parse_cycle(render(c)) == c);
    CHECK(cycle_from_json(Json::parse(to_json(c).dump())) == c);
  }
  for (const auto& [w, c] : bar_element(parse_polygon("[x1,x2,x3,1]"))) {
    CHECK(parse_bar_word(render(w)) == w);
    CHECK(bar_word_from_json(to_json(w)) == w);
  }
  for (const char* s : {"I(0; x1, x2; 1)", "I(a; b)", "I(x; 0, y; 0)"}) {
    ISymbol i = parse_isymbol(s);
    CHECK(parse_isymbol(render(i)) == i);
    CHECK(isymbol_from_json(to_json(i)) == i);
  }
  Forest f = {parse_tree("(1 (x1))"), parse_tree("(a (b))")};
  CHECK(forest_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(unwrap(wrap("tree", to_json(f)), "polygon"), ParseError);
  CHECK_THROWS_AS(polygon_from_json(Json::parse(R"({"sides": [1, 2]})")), ParseError);
  CHECK_THROWS_AS(cycle_from_json(Json::parse(R"({"coords": [{"form": "odd", "monomial": []}], "chain": []})")),
                  ParseError);
  CHECK_THROWS_AS(isymbol_from_json(Json::parse(R"({"a0": "0", "mid": ["a;b"], "aend": "1"})")), ParseError);
}

TEST_CASE("verify is reproducible and scheduling independent") {
  Run a = run({"verify", "dissection-signs", "--seed", "7"});
  Run b = run({"verify", "dissection-signs", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"verify", "dissection-signs", "--seed", "7", "--serial"}).out == a.out);
  setenv("POLYLOG_SEED", "7", 1);
  CHECK(run({"verify", "dissection-signs"}).out == a.out);
  unsetenv("POLYLOG_SEED");
  CHECK(run({"verify", "no-such-suite"}).code == 1);
  VerifyOptions o;
  o.max_sides = 4;
  for (const auto& name : suite_names()) {
    o.parallel = true;
    SuiteReport par = run_suite(name, o);
    o.parallel = false;
    SuiteReport ser = run_suite(name, o);
    CHECK_MESSAGE(par.ok(), name);
    CHECK(par.cases == ser.cases);
    CHECK(par.failures == ser.failures);
  }
}

TEST_CASE("verify all") {
  Run r = run({"verify", "all", "--max-sides", "5", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS bar-cocycle") != std::string::npos);
  Json j = Json::parse(run({"verify", "catalan", "--format", "json"}).out);
  CHECK(j["kind"] == "verify_report");
  CHECK(j["data"]["suites"][0]["ok"] == true);
}
