#include "polylog/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace polylog {

namespace {

struct Case {
  std::string label;
  std::function<bool()> ok;
};

SuiteReport evaluate(const std::string& name, const std::vector<Case>& cases, bool parallel) {
  auto start = std::chrono::steady_clock::now();
  long n = static_cast<long>(cases.size());
  std::vector<char> pass(cases.size(), 0);
  std::vector<std::string> note(cases.size());
  auto one = [&](long i) {
    auto u = static_cast<std::size_t>(i);
    try {
      pass[u] = cases[u].ok() ? 1 : 0;
    } catch (const std::exception& e) {
      note[u] = std::string(" (threw: ") + e.what() + ")";
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  SuiteReport r;
  r.name = name;
  r.cases = n;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!pass[i]) {
      if (r.failures == 0) r.counterexample = cases[i].label + note[i];
      ++r.failures;
    }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::string> atoms(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> pattern_names(const std::vector<int>& pattern) {
  std::vector<std::string> out;
  for (int b : pattern) out.push_back("x" + std::to_string(b + 1));
  return out;
}

std::vector<Tree> generic_trees(int max_edges) {
  std::vector<Tree> out;
  for (int n = 1; n <= max_edges; ++n)
    for (const auto& s : tree_shapes(n)) out.push_back(decorate(s, atoms(external_count(s))));
  return out;
}

// regular patterns, then the same patterns behind a second-type side
std::vector<Polygon> polygons_with_enhanced(int max_sides) {
  std::vector<Polygon> out = polygon_patterns(2, max_sides);
  for (const auto& p : polygon_patterns(2, max_sides - 1)) {
    Polygon e = p;
    e.sides.insert(e.sides.begin(), "~0");
    out.push_back(std::move(e));
  }
  return out;
}

std::mt19937_64 case_rng(std::uint64_t seed, std::size_t i) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + i); }

Polygon digits(int n) {
  Polygon p;
  for (int i = 1; i <= n; ++i) p.sides.push_back(std::to_string(i));
  return p;
}

std::vector<Arrow> random_arrow_set(const Polygon& p, std::mt19937_64& rng) {
  auto as = arrows(p);
  std::shuffle(as.begin(), as.end(), rng);
  std::vector<Arrow> out;
  for (const auto& a : as) {
    bool ok = true;
    for (const auto& b : out) ok = ok && !crosses(a, b, p.size());
    if (ok && std::bernoulli_distribution(0.6)(rng)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string arrow_list(const std::vector<Arrow>& as) {
  std::string s = "{";
  for (std::size_t i = 0; i < as.size(); ++i)
    s += (i ? " " : "") + ("(" + std::to_string(as[i].vertex) + "," + std::to_string(as[i].side) + ")");
  return s + "}";
}

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

using Suite = std::function<std::vector<Case>(const VerifyOptions&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"tree-d2",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (int n = 1; n <= o.max_edges; ++n)
           for (const auto& shape : tree_shapes(n))
             for (const auto& pat : set_partitions(external_count(shape))) {
               Tree t = decorate(shape, pattern_names(pat));
               cs.push_back({render(t), [t] { return tree_differential(tree_differential(t)).empty(); }});
             }
         // forests of two and three trees, generic decorations
         std::vector<Tree> pool = generic_trees(o.max_edges);
         for (std::size_t i = 0; i < pool.size(); ++i)
           for (std::size_t j = i; j < pool.size(); ++j) {
             int e = edge_count(pool[i]) + edge_count(pool[j]);
             if (e > o.max_edges) continue;
             std::vector<Tree> two{pool[i], pool[j]};
             cs.push_back({render(two), [two] { return tree_differential(tree_differential(forest_term(two))).empty(); }});
             for (std::size_t k = j; k < pool.size(); ++k) {
               if (e + edge_count(pool[k]) > o.max_edges) continue;
               std::vector<Tree> three{pool[i], pool[j], pool[k]};
               cs.push_back(
                   {render(three), [three] { return tree_differential(tree_differential(forest_term(three))).empty(); }});
             }
           }
         return cs;
       }},
      {"polygon-d2",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& p : polygons_with_enhanced(o.max_sides + 1))
           for (Variant v : {Variant::Standard, Variant::Bar})
             cs.push_back({render(p) + (v == Variant::Bar ? " (bar variant)" : ""),
                           [p, v] { return polygon_differential(polygon_differential(p, v), v).empty(); }});
         return cs;
       }},
      {"psi-dga",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& p : polygon_patterns(2, o.max_sides + 1))
           for (Variant v : {Variant::Standard, Variant::Bar})
             cs.push_back({render(p) + (v == Variant::Bar ? " (bar variant)" : ""), [p, v] {
                             return tree_differential(triangulations_psi(p)) == psi(polygon_differential(p, v));
                           }});
         auto small = polygon_patterns(2, 3);
         for (std::size_t i = 0; i < small.size(); ++i)
           for (std::size_t j = 0; j < small.size(); ++j) {
             PolyComb w = wedge_term({small[i], small[j]});
             cs.push_back({render(w), [w] { return tree_differential(psi(w)) == psi(polygon_differential(w)); }});
           }
         return cs;
       }},
      {"cycling-chain-map",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& t : generic_trees(o.cycling_edges))
           cs.push_back({render(t), [t] {
                           ForestComb f = forest_term({t});
                           CycleComb img = forest_cycling(f);
                           CycleDiff d = cycle_differential(img);
                           return d.ok() && forest_cycling(tree_differential(f)) == d.value && is_admissible(img);
                         }});
         // random larger shapes with shuffled decorations
         std::vector<std::vector<Tree>> shapes{tree_shapes(o.cycling_edges + 1), tree_shapes(o.cycling_edges + 2)};
         for (int i = 0; i < o.random_cases / 5; ++i) {
           auto rng = case_rng(o.seed ^ 0xc2b2ae35ULL, static_cast<std::size_t>(i));
           const auto& pool = shapes[static_cast<std::size_t>(i % 2)];
           if (pool.empty()) continue;
           const Tree& shape = pool[rng() % pool.size()];
           auto d = atoms(external_count(shape));
           std::shuffle(d.begin(), d.end(), rng);
           Tree t = decorate(shape, d);
           cs.push_back({render(t), [t] {
                           ForestComb f = forest_term({t});
                           CycleDiff d = cycle_differential(forest_cycling(f));
                           return d.ok() && forest_cycling(tree_differential(f)) == d.value;
                         }});
         }
         return cs;
       }},
      {"cycling-infinity-faces",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& t : generic_trees(o.cycling_edges))
           cs.push_back({render(t), [t] {
                           for (const auto& [c, x] : forest_cycling(forest_term({t})))
                             for (int i = 0; i < static_cast<int>(c.coords.size()); ++i)
                               if (face(c, i, Eps::Infinity).status != FaceStatus::Empty) return false;
                           return true;
                         }});
         return cs;
       }},
      {"bar-cocycle",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& p : polygons_with_enhanced(o.max_sides))
           cs.push_back({render(p), [p] { return is_zero_cocycle(bar_element(p)); }});
         return cs;
       }},
      {"bar-coproduct",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& p : polygons_with_enhanced(o.max_sides))
           cs.push_back({render(p), [p] { return coproduct_admissible(p) == coproduct_deconcat(bar_element(p)); }});
         return cs;
       }},
      {"coassociativity",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& p : polygons_with_enhanced(o.max_sides))
           cs.push_back({render(p), [p] { return coassoc_left(p) == coassoc_right(p); }});
         return cs;
       }},
      {"dissection-signs",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (int i = 0; i < o.random_cases; ++i) {
           auto rng = case_rng(o.seed, static_cast<std::size_t>(i));
           Polygon p = digits(6 + i % 2);
           std::vector<Arrow> finer = random_arrow_set(p, rng);
           std::vector<Arrow> coarse;
           for (const auto& a : finer)
             if (std::bernoulli_distribution(0.5)(rng)) coarse.push_back(a);
           std::size_t pick = rng();
           cs.push_back({render(p) + " arrows " + arrow_list(finer) + " over " + arrow_list(coarse), [=] {
                           // multiplicativity over the coarser dissection
                           Dissection d = analyze_dissection(p, coarse);
                           int prod = d.sign;
                           for (int r = 0; r < static_cast<int>(d.regions.size()); ++r)
                             prod *= sign_dissection(d.regions[static_cast<std::size_t>(r)].poly,
                                                     induced_arrows(d, r, finer));
                           if (prod != sign_dissection(p, finer)) return false;
                           // removing one arrow of the finer dissection
                           Dissection f = analyze_dissection(p, finer);
                           if (f.arrows.empty()) return true;
                           int b = static_cast<int>(pick % f.arrows.size());
                           const Region* below = nullptr;
                           for (const auto& r : f.regions)
                             if (r.root_arrow == b) below = &r;
                           if (!below) return false;
                           int up = f.regions[static_cast<std::size_t>(below->parent)].root_arrow;
                           int ea = up >= 0 && is_backward(f.arrows[static_cast<std::size_t>(up)]) ? -1 : 1;
                           int eb = is_backward(f.arrows[static_cast<std::size_t>(b)]) ? -1 : 1;
                           int factor = (weight(below->poly) & 1) ? ea * eb : 1;
                           std::vector<Arrow> rest = f.arrows;
                           rest.erase(rest.begin() + b);
                           return sign_dissection(p, rest) == f.sign * factor;
                         }});
         }
         return cs;
       }},
      {"cobracket",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& p : polygon_patterns(2, o.max_sides))
           cs.push_back({render(p), [p] {
                           ISymbol s = polygon_to_i(p);
                           IWedgeComb d = i_cobracket(s);
                           return d == polygon_wedge_to_i(polygon_differential(p)) && d == i_cobracket_from_coproduct(s) &&
                                  i_cobracket(d).empty();
                         }});
         return cs;
       }},
      {"coproduct-comparison",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (const auto& p : polygon_patterns(2, o.max_sides))
           cs.push_back({render(p), [p] { return compare_coproducts(p); }});
         return cs;
       }},
      {"rewriting-confluence",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (int i = 0; i < o.random_cases; ++i) {
           auto rng = case_rng(o.seed ^ 0x5bd1e995ULL, static_cast<std::size_t>(i));
           std::uniform_int_distribution<int> atom(0, 4);
           auto pick = [&] { return std::string(1, "0abcd"[atom(rng)]); };
           ISymbol s{pick(), {}, pick()};
           for (int k = 0; k < 1 + i % 4; ++k) s.mid.push_back(pick());
           cs.push_back({render(s), [s] {
                           IRules inv;
                           inv.invert_first = true;
                           return i_normalize(s) == i_normalize(s, inv);
                         }});
         }
         return cs;
       }},
      {"catalan",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (int m = 2; m <= o.max_catalan; ++m)
           cs.push_back({"tree_sum of " + std::to_string(m) + " decorations", [m] {
                           return static_cast<long>(tree_sum(atoms(m)).size()) == catalan(m - 2);
                         }});
         return cs;
       }},
      {"decomposable-boundary",
       [](const VerifyOptions& o) {
         std::vector<Case> cs;
         for (int m = 3; m <= o.max_tree_sum; ++m)
           cs.push_back({"tree_sum of " + std::to_string(m) + " decorations", [m] {
                           CycleComb z = forest_cycling(tree_sum(atoms(m)));
                           if (!is_admissible(z)) return false;
                           CycleDiff b = cycle_differential(z);
                           if (!b.ok() || b.value.empty()) return false;
                           for (const auto& [c, x] : b.value) {
                             auto f = factor(c);
                             if (!f || !is_admissible(f->first) || !is_admissible(f->second)) return false;
                             if (codimension(f->first) < 1 || codimension(f->second) < 1) return false;
                             if (codimension(f->first) + codimension(f->second) != codimension(c)) return false;
                           }
                           return true;
                         }});
         return cs;
       }},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [n, s] : suites()) out.push_back(n);
  return out;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& [n, s] : suites())
    if (n == name) return evaluate(n, s(opt), opt.parallel);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all(const VerifyOptions& opt) {
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, opt));
  return out;
}

std::string render(const std::vector<SuiteReport>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    if (!r.ok()) os << "  minimal counterexample: " << r.counterexample << "\n";
  }
  return os.str();
}

Json to_json(const std::vector<SuiteReport>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) {
    Json j = {{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"ok", r.ok()}};
    if (!r.ok()) j["counterexample"] = r.counterexample;
    out.push_back(j);
  }
  return out;
}

}  // namespace polylog
