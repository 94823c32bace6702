#include "polylog/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "polylog/realization.hpp"
#include "polylog/serialize.hpp"
#include "polylog/verify.hpp"

namespace polylog {

namespace {

const char* kGrammar = R"txt(Grammars:
  tree     (root node)          node = (deco) for a leaf, (node node ...) internal
                                e.g. "(1 ((x1)(x2)))"; "_" undecorated, "~s0" second type
  polygon  [a1, ..., aN]        sides in order, root side last; "[~0, x1, x2, 1]" enhanced
  cycle    [c1, ..., cn]        c = q or 1-q, q a monomial like t/x1 or x1*x2/t^2;
                                t, u, v, w (optionally with digits) are parameters;
                                optional "with s0<=s1<=...<=sk" names simplicial variables
  symbol   I(a0; a1, ..., an; b)   the atom 0 is zero
  numbers  decimals or p/q
Environment:
  POLYLOG_SEED   seed for verify when --seed is absent
Exit codes: 0 ok, 1 parse error, 2 degenerate face or singular path, 3 failed verification)txt";

enum class Format { Text, Json, Latex };

struct ExitError : std::runtime_error {
  int code;
  ExitError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

double number(const std::string& s) {
  try {
    if (s.find('/') != std::string::npos) return parse_scalar(s).get_d();
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
}

std::vector<double> numbers(const std::vector<std::string>& v) {
  std::vector<double> out;
  for (const auto& s : v) out.push_back(number(s));
  return out;
}

template <class B, class F>
std::string latex_comb(const LinComb<B>& c, F basis) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [b, x] : c) {
    Scalar a = abs(x);
    s += first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + ");
    if (a != 1) s += (a.get_den() == 1 ? a.get_num().get_str() : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}") + "\\,";
    s += basis(b);
    first = false;
  }
  return s;
}

std::string latex_wedge(const PolyWedge& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " \\wedge " : "") + render_latex(w[i]);
  return s;
}

std::string latex_isym_mono(const IMono& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " \\cdot " : "") + render_latex(m[i]);
  return s;
}

struct Printer {
  Format fmt;
  std::ostream& out;

  // text, json, latex
  void emit(const std::string& text, const std::function<Json()>& json, const std::string& latex) {
    switch (fmt) {
      case Format::Text: out << text << "\n"; break;
      case Format::Json: out << json().dump() << "\n"; break;
      case Format::Latex: out << latex << "\n"; break;
    }
  }

  void forests(const ForestComb& c) {
    emit(render(c), [&] { return wrap("forest_comb", comb_to_json(c, [](const Forest& f) { return to_json(f); })); },
         latex_comb(c, [](const Forest& f) { return render_latex(f); }));
  }
  void polys(const PolyComb& c) {
    emit(render(c), [&] { return wrap("polygon_comb", comb_to_json(c, [](const PolyWedge& w) { return to_json(w); })); },
         latex_comb(c, latex_wedge));
  }
  void bars(const BarComb& c) {
    emit(render(c), [&] { return wrap("bar_comb", comb_to_json(c, [](const BarWord& w) { return to_json(w); })); },
         latex_comb(c, [](const BarWord& w) { return render_latex(w); }));
  }
  void bar_pairs(const BarTensor2& c) {
    auto pj = [](const BarPair& p) {
      return pair_to_json(p, [](const BarWord& w) { return to_json(w); }, [](const BarWord& w) { return to_json(w); });
    };
    emit(render(c), [&] { return wrap("bar_tensor", comb_to_json(c, pj)); },
         latex_comb(c, [](const BarPair& p) { return render_latex(p.first) + " \\otimes " + render_latex(p.second); }));
  }
  void cycles(const CycleComb& c) {
    emit(render(c), [&] { return wrap("cycle_comb", comb_to_json(c, [](const Cycle& x) { return to_json(x); })); },
         latex_comb(c, [](const Cycle& x) { return render_latex(x); }));
  }
  void ielement(const IElement& c) {
    emit(render(c), [&] { return wrap("i_element", comb_to_json(c, [](const IMono& m) { return to_json(m); })); },
         latex_comb(c, latex_isym_mono));
  }
  void itensor(const ITensor& c) {
    auto pj = [](const IPair& p) {
      return pair_to_json(p, [](const IMono& m) { return to_json(m); }, [](const IMono& m) { return to_json(m); });
    };
    emit(render(c), [&] { return wrap("i_tensor", comb_to_json(c, pj)); },
         latex_comb(c, [](const IPair& p) { return latex_isym_mono(p.first) + " \\otimes " + latex_isym_mono(p.second); }));
  }
  void iwedge(const IWedgeComb& c) {
    emit(render_wedge(c), [&] { return wrap("i_wedge_comb", comb_to_json(c, [](const IWedge& w) { return to_json(w); })); },
         latex_comb(c, [](const IWedge& w) {
           std::string s;
           for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " \\wedge " : "") + render_latex(w[i]);
           return s;
         }));
  }
  void estimate(const Estimate& e) {
    std::ostringstream t, l;
    t.precision(17);
    l.precision(17);
    t << e.value << " +- " << std::setprecision(3) << e.error;
    l << e.value << " \\pm " << std::setprecision(3) << e.error;
    emit(t.str(), [&] { return wrap("estimate", {{"value", e.value}, {"error", e.error}}); }, l.str());
  }
};

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decorated trees, polygons, algebraic cycles, bar constructions and iterated integrals."};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));

  std::string arg;
  std::string what;

  auto* tree = app.add_subcommand("tree", "decorated trees")->require_subcommand(1);
  auto* tree_diff = tree->add_subcommand("diff", "tree differential");
  tree_diff->add_option("tree", arg)->required();

  auto* polygon = app.add_subcommand("polygon", "decorated polygons")->require_subcommand(1);
  bool bar_variant = false;
  auto* poly_diff = polygon->add_subcommand("diff", "polygon differential");
  poly_diff->add_option("polygon", arg)->required();
  poly_diff->add_flag("--bar-variant", bar_variant, "use the sign convention of the bar differential");
  auto* poly_psi = polygon->add_subcommand("psi", "sum over triangulations as trees");
  poly_psi->add_option("polygon", arg)->required();
  auto* poly_bar = polygon->add_subcommand("bar", "the bar element B(polygon)");
  poly_bar->add_option("polygon", arg)->required();
  std::string method = "admissible";
  auto* poly_cop = polygon->add_subcommand("coproduct", "coproduct of B(polygon)");
  poly_cop->add_option("polygon", arg)->required();
  poly_cop->add_option("--method", method, "deconcat or admissible")->check(CLI::IsMember({"deconcat", "admissible"}));

  auto* cycle = app.add_subcommand("cycle", "algebraic cycles")->require_subcommand(1);
  auto* cyc_tree = cycle->add_subcommand("from-tree", "forest cycling map");
  cyc_tree->add_option("tree", arg)->required();
  auto* cyc_poly = cycle->add_subcommand("from-polygon", "cycle of a polygon through its triangulations");
  cyc_poly->add_option("polygon", arg)->required();
  auto* cyc_diff = cycle->add_subcommand("diff", "cycle differential");
  cyc_diff->add_option("cycle", arg)->required();
  auto* cyc_adm = cycle->add_subcommand("admissible", "proper intersection with all faces");
  cyc_adm->add_option("cycle", arg)->required();

  auto* iterint = app.add_subcommand("iterint", "formal iterated integrals");
  iterint->add_option("operation", what, "normalize, coproduct or cobracket")
      ->required()
      ->check(CLI::IsMember({"normalize", "coproduct", "cobracket"}));
  iterint->add_option("symbol", arg)->required();

  auto* eval = app.add_subcommand("eval", "numeric evaluation")->require_subcommand(1);
  std::vector<int> ns;
  std::vector<std::string> zs, xs;
  std::string x0 = "0", xend = "1", x1, x2;
  double tolerance = 1e-12;
  auto* eval_li = eval->add_subcommand("li", "multiple polylogarithm series");
  eval_li->add_option("--ns", ns, "indices n1 ... nm")->required()->delimiter(',');
  eval_li->add_option("--zs", zs, "arguments z1 ... zm")->required()->delimiter(',');
  auto* eval_iint = eval->add_subcommand("iint", "iterated integral along a segment");
  eval_iint->add_option("--x0", x0, "start point");
  eval_iint->add_option("--xs", xs, "poles x1 ... xn")->delimiter(',');
  eval_iint->add_option("--xend", xend, "end point");
  for (auto* e : {eval_li, eval_iint}) e->add_option("--tolerance", tolerance, "absolute tolerance")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "numeric cross-checks")->require_subcommand(1);
  auto* hodge = compare->add_subcommand("hodge", "double logarithm from the topological chain");
  hodge->add_option("--x1", x1)->required();
  hodge->add_option("--x2", x2)->required();

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  std::string suite = "all";
  int max_sides = 5;
  std::uint64_t seed = 0;
  bool serial = false;
  std::string names = "all";
  for (const auto& n : suite_names()) names += ", " + n;
  verify->add_option("suite", suite, names);
  verify->add_option("--max-sides", max_sides, "largest polygon in the bar suites")->check(CLI::Range(2, 8));
  auto* seed_opt = verify->add_option("--seed", seed, "random seed (default: POLYLOG_SEED, else 42)");
  verify->add_flag("--serial", serial, "run the serial reference instead of the parallel kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  Printer p{format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text, out};

  if (*tree_diff) p.forests(tree_differential(forest_term({parse_tree(arg)})));
  if (*poly_diff) p.polys(polygon_differential(parse_polygon(arg), bar_variant ? Variant::Bar : Variant::Standard));
  if (*poly_psi) p.forests(triangulations_psi(parse_polygon(arg)));
  if (*poly_bar) p.bars(bar_element(parse_polygon(arg)));
  if (*poly_cop) {
    Polygon q = parse_polygon(arg);
    p.bar_pairs(method == "deconcat" ? coproduct_deconcat(bar_element(q)) : coproduct_admissible(q));
  }
  if (*cyc_tree) p.cycles(forest_cycling(forest_term({parse_tree(arg)})));
  if (*cyc_poly) p.cycles(cycle_from_polygon(parse_polygon(arg)));
  if (*cyc_diff) {
    CycleDiff d = cycle_differential(cycle_term(parse_cycle(arg)));
    if (!d.ok()) throw ExitError(2, std::string("differential undefined: ") + to_string(d.status) + " face");
    p.cycles(d.value);
  }
  if (*cyc_adm) {
    bool ok = is_admissible(parse_cycle(arg));
    p.emit(ok ? "admissible" : "not admissible", [&] { return wrap("bool", ok); },
           ok ? "\\text{admissible}" : "\\text{not admissible}");
  }
  if (*iterint) {
    ISymbol s = parse_isymbol(arg);
    if (what == "normalize") p.ielement(i_normalize(s));
    if (what == "coproduct") p.itensor(i_coproduct(s));
    if (what == "cobracket") {
      // products are killed by the cobracket; only the linear part contributes
      IWedgeComb d;
      for (const auto& [b, c] : i_linear(i_normalize(s))) d.add_scaled(i_cobracket(b), c);
      p.iwedge(d);
    }
  }
  NumericConfig cfg;
  cfg.tolerance = tolerance;
  if (*eval_li) p.estimate(li_series(ns, numbers(zs), cfg));
  if (*eval_iint) p.estimate(iterint_numeric(number(x0), numbers(xs), number(xend), cfg));
  if (*hodge) {
    DoubleLogCheck c = double_log_cycle_check(number(x1), number(x2));
    std::ostringstream t;
    t.precision(17);
    t << "integral " << c.integral << "\niterint  " << c.iterint << "\n";
    if (c.series) t << "series   " << *c.series << "\n";
    t << "difference " << std::setprecision(3) << c.difference;
    Json j = {{"integral", c.integral}, {"iterint", c.iterint}, {"difference", c.difference}};
    j["series"] = c.series ? Json(*c.series) : Json();
    p.emit(t.str(), [&] { return wrap("hodge_check", j); }, t.str());
  }
  if (*verify) {
    VerifyOptions o;
    o.max_sides = max_sides;
    o.parallel = !serial;
    o.seed = 42;
    if (*seed_opt) {
      o.seed = seed;
    } else if (const char* env = std::getenv("POLYLOG_SEED")) {
      try {
        o.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw ParseError(std::string("POLYLOG_SEED is not a number: '") + env + "'");
      }
    }
    std::vector<SuiteReport> rs = suite == "all" ? run_all(o) : std::vector<SuiteReport>{run_suite(suite, o)};
    std::string text = render(rs) + "seed " + std::to_string(o.seed);
    p.emit(text, [&] { return wrap("verify_report", {{"seed", o.seed}, {"suites", to_json(rs)}}); }, text);
    for (const auto& r : rs)
      if (!r.ok()) return 3;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const ExitError& e) {
    err << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const SingularPath& e) {
    err << "singular path: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace polylog
