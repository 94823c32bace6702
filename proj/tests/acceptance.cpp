// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polylog/realization.hpp"
#include "polylog/verify.hpp"

using namespace polylog;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

CycleComb C(const std::string& s) { return cycle_term(parse_cycle(s)); }

Polygon digits(const std::string& s) {
  Polygon p;
  for (char c : s) p.sides.push_back(std::string(1, c));
  return p;
}

// "14|24|34" shorthand, one polygon per letter
BarWord W(const std::string& s) {
  BarWord w;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find('|', i);
    if (j == std::string::npos) j = s.size();
    w.push_back({digits(s.substr(i, j - i))});
    i = j + 1;
  }
  return w;
}

BarComb B(std::initializer_list<std::pair<int, const char*>> terms) {
  BarComb out;
  for (const auto& [c, w] : terms) out.add(W(w), Scalar(c));
  return out;
}

struct Fixture {
  const char* name;
  std::function<bool()> ok;
};

bool criterion1() {
  std::vector<Fixture> fs = {
      {"Figure 4 tree differential",
       [] {
         ForestComb want = forest_term({edge_tree("1", "x1"), edge_tree("1", "x2")}) -
                           forest_term({edge_tree("1", "x1"), edge_tree("x1", "x2")}) +
                           forest_term({edge_tree("1", "x2"), edge_tree("x2", "x1")});
         return tree_differential(parse_tree("(1 ((x1)(x2)))")) == want;
       }},
      {"Figure 5 cycle",
       [] { return forest_cycling(forest_term({parse_tree("(1 ((x1)(x2)))")})) == C("[1-1/u, 1-u/x1, 1-u/x2]"); }},
      {"boundary of Z(x1,x2)",
       [] {
         CycleDiff d = cycle_differential(C("[1-1/t, 1-t/x1, 1-t/x2]"));
         return d.ok() && d.value == C("[1-1/x1, 1-1/x2]") - C("[1-1/x1, 1-x1/x2]") + C("[1-1/x2, 1-x2/x1]");
       }},
      {"boundary of C_a",
       [] {
         CycleDiff d = cycle_differential(cycle_term(totaro_cycle("a")));
         return d.ok() && d.value == C("[a, 1-a]");
       }},
      {"triple-log cycle",
       [] {
         return forest_cycling(tree_sum({"x1", "x2", "x3", "1"})) ==
                C("[1-1/t, 1-t/x1, 1-t/u, 1-u/x2, 1-u/x3]") + C("[1-1/t, 1-t/u, 1-u/x1, 1-u/x2, 1-t/x3]");
       }},
      {"triangle differential",
       [] {
         return polygon_differential(digits("123")) == wedge_term({digits("13"), digits("23")}) +
                                                            wedge_term({digits("23"), digits("12")}) -
                                                            wedge_term({digits("13"), digits("21")});
       }},
      {"bar element of the triangle",
       [] { return bar_element(digits("123")) == B({{1, "123"}, {1, "13|23"}, {1, "23|12"}, {-1, "13|21"}}); }},
      {"two-letter part of the quadrangle bar element",
       [] {
         return bar_component(bar_element(digits("1234")), 2) ==
                B({{1, "14|234"}, {1, "34|123"}, {-1, "124|32"}, {-1, "134|21"}, {1, "124|34"}, {1, "134|23"},
                   {1, "234|12"}, {1, "14|321"}});
       }},
      {"three-letter part of the quadrangle bar element",
       [] {
         // twelve displayed summands, three of them shuffles of two words
         BarComb want = B({{1, "14|24|34"}, {1, "34|13|23"}, {-1, "24|12|32"}, {-1, "24|32|12"}, {1, "14|31|21"},
                           {1, "14|34|23"}, {1, "34|23|12"}, {1, "14|21|32"}, {-1, "14|21|34"}, {-1, "14|34|21"},
                           {-1, "14|24|32"}, {-1, "34|13|21"}, {1, "24|12|34"}, {1, "24|34|12"}, {-1, "14|31|23"}});
         return bar_component(bar_element(digits("1234")), 3) == want;
       }},
      {"octagon dissection sign",
       [] { return analyze_dissection(digits("12345678"), {{2, 1}, {2, 8}, {7, 5}, {3, 5}}).sign == -1; }},
  };
  auto t0 = Clock::now();
  int passed = 0;
  for (const auto& f : fs) {
    bool ok = f.ok();
    if (!ok) std::printf("  fixture failed: %s\n", f.name);
    passed += ok;
  }
  double s = since(t0);
  bool ok = passed == static_cast<int>(fs.size()) && s < 1.0;
  std::printf("%s criterion 1: fixture equalities %d/%zu in %.3f s (limit 1 s)\n", ok ? "PASS" : "FAIL", passed,
              fs.size(), s);
  return ok;
}

bool criterion2() {
  VerifyOptions o;
  o.max_sides = 5;
  o.max_edges = 6;
  o.cycling_edges = 5;
  o.max_catalan = 7;
  o.random_cases = 500;
  auto t0 = Clock::now();
  long cases = 0, failed_suites = 0;
  for (const auto& name : suite_names()) {
    if (name == "decomposable-boundary") continue;  // criterion 4
    SuiteReport r = run_suite(name, o);
    cases += r.cases;
    if (!r.ok()) {
      ++failed_suites;
      std::printf("  suite %s failed on %s\n", r.name.c_str(), r.counterexample.c_str());
    }
  }
  double s = since(t0);
  bool ok = failed_suites == 0 && s < 300;
  std::printf("%s criterion 2: invariant suites, %ld cases, %ld failing suites in %.2f s (limit 300 s)\n",
              ok ? "PASS" : "FAIL", cases, failed_suites, s);
  return ok;
}

bool criterion3() {
  auto t0 = Clock::now();
  NumericConfig cfg;
  cfg.tolerance = 1e-12;
  Estimate li = li_series({1, 1}, {0.3, 0.2}, cfg);
  std::vector<double> x = multiple_log_points({0.3, 0.2});
  Estimate ii = iterint_numeric(0, x, 1, cfg);
  double e1 = std::abs(li.value - ii.value);
  bool ok1 = li.error < 1e-12 && e1 < 1e-6;
  std::printf("  Li11(0.3,0.2) = %.15g (tail %.1e), I(0; 50/3, 5; 1) = %.15g, |diff| = %.2e (limit 1e-6)\n", li.value,
              li.error, ii.value, e1);

  DoubleLogCheck d = double_log_cycle_check(5, 2.5, cfg);
  bool ok2 = d.difference < 1e-8;
  std::printf("  double-log chain at (5, 2.5): integral %.15g, iterint %.15g, |diff| = %.2e (limit 1e-8)\n", d.integral,
              d.iterint, d.difference);

  double r = check_diff_li(5, 2.5, 1e-4, cfg).residual;
  double ra = check_diff_li(5, 2.5, 1e-2, cfg).residual, rb = check_diff_li(5, 2.5, 5e-3, cfg).residual,
         rc = check_diff_li(5, 2.5, 2.5e-3, cfg).residual;
  double p1 = std::log2(ra / rb), p2 = std::log2(rb / rc);
  bool ok3 = r < 1e-6 && std::abs(p1 - 2) < 0.1 && std::abs(p2 - 2) < 0.1;
  std::printf("  differential residual at h=1e-4: %.2e (limit 1e-6); observed orders %.3f, %.3f\n", r, p1, p2);

  double s = since(t0);
  bool ok = ok1 && ok2 && ok3 && s < 30;
  std::printf("%s criterion 3: numeric checks in %.3f s (limit 30 s)\n", ok ? "PASS" : "FAIL", s);
  return ok;
}

bool criterion4() {
  auto t0 = Clock::now();
  VerifyOptions o;
  o.max_tree_sum = 5;
  SuiteReport r = run_suite("decomposable-boundary", o);
  if (!r.ok()) std::printf("  failed on %s\n", r.counterexample.c_str());
  bool ok = r.ok() && r.cases == 3;
  std::printf("%s criterion 4: decomposable boundary of tree sums, m = 3..5, in %.3f s\n", ok ? "PASS" : "FAIL",
              since(t0));
  return ok;
}

}  // namespace

int main() {
  bool ok = true;
  for (auto c : {criterion1, criterion2, criterion3, criterion4}) {
    try {
      ok = c() && ok;
    } catch (const std::exception& e) {
      std::printf("FAIL (exception: %s)\n", e.what());
      ok = false;
    }
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
