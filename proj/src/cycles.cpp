#include "polylog/cycles.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polylog {

namespace {

bool is_unit(const Atom& a) { return a.kind == Atom::Kind::Constant && a.name == "1"; }

void bump(Monomial& m, const Atom& a, int e) {
  if (e == 0 || is_unit(a)) return;
  int& x = m[a];
  x += e;
  if (x == 0) m.erase(a);
}

int exponent(const Monomial& m, const Atom& a) {
  auto it = m.find(a);
  return it == m.end() ? 0 : it->second;
}

// Value of an all-constant monomial, if every atom has an assigned value.
std::optional<Scalar> evaluate(const Monomial& m, const std::map<std::string, Scalar>* values) {
  if (!values) return std::nullopt;
  Scalar v(1);
  for (const auto& [a, e] : m) {
    if (a.kind != Atom::Kind::Constant) return std::nullopt;
    auto it = values->find(a.name);
    if (it == values->end() || it->second == 0) return std::nullopt;
    for (int k = 0; k < std::abs(e); ++k) v = e > 0 ? Scalar(v * it->second) : Scalar(v / it->second);
  }
  return v;
}

Monomial rename(const Monomial& m, const std::map<Atom, Atom>& to) {
  Monomial out;
  for (const auto& [a, e] : m) {
    auto it = to.find(a);
    bump(out, it == to.end() ? a : it->second, e);
  }
  return out;
}

}  // namespace

Monomial ratio(const Atom& num, const Atom& den) {
  Monomial m;
  bump(m, num, 1);
  bump(m, den, -1);
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (const auto& [x, e] : b) bump(m, x, e);
  return m;
}

Monomial mono_pow(const Monomial& a, int k) {
  Monomial m;
  for (const auto& [x, e] : a) bump(m, x, e * k);
  return m;
}

std::vector<Atom> parameters(const Cycle& c) {
  std::set<Atom> s;
  for (const auto& x : c.coords)
    for (const auto& [a, e] : x.m)
      if (a.kind == Atom::Kind::Parameter) s.insert(a);
  return {s.begin(), s.end()};
}

int codimension(const Cycle& c) { return static_cast<int>(c.coords.size() - parameters(c).size()); }

std::pair<Cycle, int> cycle_normalize(Cycle raw) {
  for (const auto& x : raw.coords)
    if (x.form == Coord::Form::Plain && x.m.empty()) return {std::move(raw), 0};
  auto ps = parameters(raw);
  std::vector<int> perm(ps.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto odd = [](const Coord&) { return 1; };
  std::optional<std::vector<Coord>> best;
  int best_sign = 0;
  bool clash = false;
  do {
    std::map<Atom, Atom> to;
    for (std::size_t i = 0; i < ps.size(); ++i) to[ps[i]] = parameter("t" + std::to_string(perm[i] + 1));
    std::vector<Coord> cs;
    cs.reserve(raw.coords.size());
    for (const auto& x : raw.coords) cs.push_back({x.form, rename(x.m, to)});
    auto [sorted, s] = wedge_normalize(std::move(cs), odd);
    if (!best || sorted < *best) {
      best = std::move(sorted);
      best_sign = s;
      clash = false;
    } else if (sorted == *best && s != best_sign) {
      clash = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Cycle out{std::move(*best), std::move(raw.chain)};
  return {std::move(out), clash ? 0 : best_sign};
}

CycleComb cycle_term(Cycle raw, const Scalar& c) {
  auto [cy, s] = cycle_normalize(std::move(raw));
  CycleComb out;
  if (s != 0) out.add(std::move(cy), c * s);
  return out;
}

CycleComb concat(const Cycle& a, const Cycle& b) {
  if (!a.chain.empty() && !b.chain.empty()) throw std::invalid_argument("cannot concatenate two enhanced chains");
  // keep the parameters of the two factors apart
  std::map<Atom, Atom> to;
  for (const auto& p : parameters(b)) to[p] = parameter("b_" + p.name);
  Cycle c;
  c.coords = a.coords;
  for (const auto& x : b.coords) c.coords.push_back({x.form, rename(x.m, to)});
  c.chain = a.chain.empty() ? b.chain : a.chain;
  return cycle_term(std::move(c));
}

CycleComb concat(const CycleComb& a, const CycleComb& b) {
  return bilinear(a, b, [](const Cycle& x, const Cycle& y) { return concat(x, y); });
}

const char* to_string(FaceStatus s) {
  switch (s) {
    case FaceStatus::Ok: return "ok";
    case FaceStatus::Empty: return "empty";
    case FaceStatus::Degenerate: return "degenerate";
    case FaceStatus::UnsupportedExponent: return "unsupported exponent";
  }
  return "?";
}

Face face(const Cycle& c, int i, Eps eps, const FaceOptions& opt) {
  if (i < 0 || i >= static_cast<int>(c.coords.size())) throw std::out_of_range("face index");
  const Coord& z = c.coords[static_cast<std::size_t>(i)];
  Face out;
  out.cycle.chain = c.chain;
  std::vector<Coord> rest;
  for (int k = 0; k < static_cast<int>(c.coords.size()); ++k)
    if (k != i) rest.push_back(c.coords[static_cast<std::size_t>(k)]);

  std::vector<Atom> ps;
  for (const auto& [a, e] : z.m)
    if (a.kind == Atom::Kind::Parameter) ps.push_back(a);

  if (eps == Eps::Zero && z.form == Coord::Form::OneMinus) {
    if (ps.empty()) {
      auto v = evaluate(z.m, opt.values);
      out.status = (z.m.empty() || (v && *v == 1)) ? FaceStatus::Degenerate : FaceStatus::Empty;
      return out;
    }
    std::vector<Atom> solvable;
    for (const auto& a : ps)
      if (std::abs(exponent(z.m, a)) == 1) solvable.push_back(a);
    if (solvable.empty()) {
      out.status = FaceStatus::UnsupportedExponent;
      return out;
    }
    Atom t = opt.pivot == Pivot::Least ? solvable.front() : solvable.back();
    int e = exponent(z.m, t);
    Monomial r = z.m;
    r.erase(t);
    Monomial value = mono_pow(r, -e);  // t^e * r = 1
    for (auto& x : rest) {
      int f = exponent(x.m, t);
      if (f == 0) continue;
      x.m.erase(t);
      x.m = mono_mul(x.m, mono_pow(value, f));
    }
    for (const auto& x : rest) {
      if (x.form != Coord::Form::Plain) continue;
      auto v = evaluate(x.m, opt.values);
      if (x.m.empty() || (v && *v == 1)) {
        out.status = FaceStatus::Empty;
        return out;
      }
    }
    out.status = FaceStatus::Ok;
    out.cycle.coords = std::move(rest);
    return out;
  }

  // a limit of one parameter: q -> infinity, or a plain q -> 0
  bool to_infinity = eps == Eps::Infinity;
  if (ps.empty()) {
    out.status = FaceStatus::Empty;
    return out;
  }
  Atom t = opt.pivot == Pivot::Least ? ps.front() : ps.back();
  int e = exponent(z.m, t);
  bool t_to_inf = (e > 0) == to_infinity;
  bool empty = false, degenerate = false;
  for (const auto& x : rest) {
    int f = exponent(x.m, t);
    if (f == 0) continue;
    bool m_to_inf = (f > 0) == t_to_inf;
    if (x.form == Coord::Form::OneMinus && !m_to_inf)
      empty = true;
    else
      degenerate = true;
  }
  if (empty)
    out.status = FaceStatus::Empty;
  else if (degenerate)
    out.status = FaceStatus::Degenerate;
  else {
    out.status = FaceStatus::Ok;
    out.cycle.coords = std::move(rest);
  }
  return out;
}

namespace {

CycleDiff faces_sum(const Cycle& c, bool zero, bool inf, const FaceOptions& opt) {
  CycleDiff d;
  for (int i = 0; i < static_cast<int>(c.coords.size()); ++i) {
    Scalar s = (i % 2) ? Scalar(-1) : Scalar(1);
    for (Eps eps : {Eps::Zero, Eps::Infinity}) {
      if ((eps == Eps::Zero && !zero) || (eps == Eps::Infinity && !inf)) continue;
      Face f = face(c, i, eps, opt);
      if (f.status == FaceStatus::Degenerate || f.status == FaceStatus::UnsupportedExponent) {
        d.status = f.status;
        d.value = CycleComb();
        return d;
      }
      if (f.status == FaceStatus::Ok) d.value += cycle_term(std::move(f.cycle), eps == Eps::Zero ? s : Scalar(-s));
    }
  }
  return d;
}

CycleDiff faces_sum(const CycleComb& c, bool zero, bool inf, const FaceOptions& opt) {
  CycleDiff d;
  for (const auto& [cy, x] : c) {
    CycleDiff t = faces_sum(cy, zero, inf, opt);
    if (!t.ok()) return t;
    d.value.add_scaled(t.value, x);
  }
  return d;
}

bool admissible_rec(const Cycle& c, const FaceOptions& opt, std::set<Cycle>& seen) {
  if (!seen.insert(cycle_normalize(c).first).second) return true;
  for (int i = 0; i < static_cast<int>(c.coords.size()); ++i)
    for (Eps eps : {Eps::Zero, Eps::Infinity}) {
      Face f = face(c, i, eps, opt);
      if (f.status == FaceStatus::Degenerate || f.status == FaceStatus::UnsupportedExponent) return false;
      if (f.status == FaceStatus::Ok && !admissible_rec(f.cycle, opt, seen)) return false;
    }
  return true;
}

}  // namespace

CycleDiff cycle_differential(const Cycle& c, const FaceOptions& opt) { return faces_sum(c, true, true, opt); }
CycleDiff cycle_differential(const CycleComb& c, const FaceOptions& opt) { return faces_sum(c, true, true, opt); }
CycleDiff partial_differential(const CycleComb& c, Eps eps, const FaceOptions& opt) {
  return faces_sum(c, eps == Eps::Zero, eps == Eps::Infinity, opt);
}

bool is_admissible(const Cycle& c, const FaceOptions& opt) {
  std::set<Cycle> seen;
  return admissible_rec(c, opt, seen);
}

bool is_admissible(const CycleComb& c, const FaceOptions& opt) {
  for (const auto& [cy, x] : c)
    if (!is_admissible(cy, opt)) return false;
  return true;
}

int max_face_exponent(const Cycle& c) {
  int best = 0;
  for (const auto& x : c.coords)
    for (const auto& [a, e] : x.m) best = std::max(best, std::abs(e));
  for (int i = 0; i < static_cast<int>(c.coords.size()); ++i)
    for (Eps eps : {Eps::Zero, Eps::Infinity}) {
      Face f = face(c, i, eps);
      if (f.status == FaceStatus::Ok) best = std::max(best, max_face_exponent(f.cycle));
    }
  return best;
}

std::optional<std::pair<Cycle, Cycle>> factor(const Cycle& c) {
  std::size_t n = c.coords.size();
  if (n < 2 || !c.chain.empty()) return std::nullopt;
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& [a, e] : c.coords[i].m)
        if (a.kind == Atom::Kind::Parameter && c.coords[j].m.count(a)) comp[root(i)] = root(j);
  std::pair<Cycle, Cycle> out;
  std::size_t first = root(0);
  for (std::size_t i = 0; i < n; ++i) (root(i) == first ? out.first : out.second).coords.push_back(c.coords[i]);
  if (out.second.coords.empty()) return std::nullopt;
  return out;
}

Cycle totaro_cycle(const std::string& a) {
  Atom t = parameter("t");
  Cycle c;
  c.coords.push_back(plain(ratio(t, constant("1"))));
  c.coords.push_back(one_minus(ratio(t, constant("1"))));
  c.coords.push_back(one_minus(ratio(constant(a), t)));
  return c;
}

namespace {

// Returns the sign of moving the constraint edges in front of the coordinate
// edges.
int cycle_tree(const Tree& t, Cycle& out, int& fresh, bool& seen_enhanced) {
  FlatTree f = flatten(t);
  std::size_t n = f.deco.size();
  std::vector<bool> second(n, false);
  int marked = -1;
  for (std::size_t v = 1; v < n; ++v)
    if (f.kids[v].empty() && is_second_type(f.deco[v])) marked = static_cast<int>(v);
  std::vector<Atom> y(n);
  std::vector<std::string> chain;
  if (marked >= 0) {
    if (seen_enhanced) throw std::invalid_argument("at most one enhanced tree per forest");
    seen_enhanced = true;
    second[0] = true;
    int k = 0;
    chain.push_back(strip_marker(f.deco[static_cast<std::size_t>(marked)]));
    for (int v = marked; v > 0; v = f.parent[static_cast<std::size_t>(v)]) {
      second[static_cast<std::size_t>(v)] = true;
      if (!f.kids[static_cast<std::size_t>(v)].empty()) {
        y[static_cast<std::size_t>(v)] = topological("s" + std::to_string(++k));
        chain.push_back(y[static_cast<std::size_t>(v)].name);
      }
    }
    chain.push_back(strip_marker(f.deco[0]));
    out.chain = chain;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!y[v].name.empty()) continue;
    if (v == 0 || f.kids[v].empty())
      y[v] = constant(strip_marker(f.deco[v]));
    else
      y[v] = parameter("p" + std::to_string(++fresh));
  }
  int sign = 1, passed = 0;
  for (const auto& e : canonical_edge_order(t)) {
    auto u = static_cast<std::size_t>(e.parent), v = static_cast<std::size_t>(e.child);
    if (second[u] && second[v]) {
      if (passed % 2) sign = -sign;
      continue;
    }
    ++passed;
    if (is_undecorated(f.deco[v]))
      out.coords.push_back(plain(ratio(y[u], constant("1"))));
    else
      out.coords.push_back(one_minus(ratio(y[u], y[v])));
  }
  return sign;
}

}  // namespace

CycleComb forest_cycling(const Forest& f) {
  Cycle raw;
  int fresh = 0;
  bool enhanced = false;
  int sign = 1;
  for (const auto& t : f) sign *= cycle_tree(t, raw, fresh, enhanced);
  return cycle_term(std::move(raw), Scalar(sign));
}

CycleComb forest_cycling(const ForestComb& f) {
  return f.apply([](const Forest& x) { return forest_cycling(x); });
}

CycleComb cycle_from_polygon(const Polygon& p) { return forest_cycling(triangulations_psi(p)); }

std::string render(const Atom& a) { return a.name; }

std::string render(const Monomial& m) {
  std::string num, den;
  for (const auto& [a, e] : m) {
    std::string f = a.name;
    if (std::abs(e) != 1) f += "^" + std::to_string(std::abs(e));
    if (e > 0)
      num += (num.empty() ? "" : "*") + f;
    else
      den += "/" + f;
  }
  if (num.empty()) num = "1";
  return num + den;
}

std::string render(const Coord& c) { return (c.form == Coord::Form::OneMinus ? "1-" : "") + render(c.m); }

std::string render(const Cycle& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.coords.size(); ++i) s += (i ? ", " : "") + render(c.coords[i]);
  s += "]";
  if (!c.chain.empty()) {
    s += " with ";
    for (std::size_t i = 0; i < c.chain.size(); ++i) s += (i ? "<=" : "") + c.chain[i];
  }
  return s;
}

std::string render(const CycleComb& c) {
  return render_lincomb(c, [](const Cycle& x) { return render(x); });
}

namespace {

std::string latex_atom(const std::string& n) {
  std::size_t k = n.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(n[k - 1]))) --k;
  if (k == 0 || k == n.size()) return n;
  return n.substr(0, k) + "_{" + n.substr(k) + "}";
}

std::string latex_factors(const Monomial& m, bool positive) {
  std::string s;
  for (const auto& [a, e] : m) {
    if ((e > 0) != positive) continue;
    if (!s.empty()) s += " ";
    s += latex_atom(a.name);
    if (std::abs(e) != 1) s += "^{" + std::to_string(std::abs(e)) + "}";
  }
  return s;
}

}  // namespace

std::string render_latex(const Cycle& c) {
  std::string s = "\\Big[";
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    const Coord& x = c.coords[i];
    std::string num = latex_factors(x.m, true), den = latex_factors(x.m, false);
    if (num.empty()) num = "1";
    std::string q = den.empty() ? num : "\\frac{" + num + "}{" + den + "}";
    s += (i ? ", " : "") + std::string(x.form == Coord::Form::OneMinus ? "1-" : "") + q;
  }
  s += "\\Big]";
  if (!c.chain.empty()) {
    s += ",\\ ";
    for (std::size_t i = 0; i < c.chain.size(); ++i) s += (i ? " \\leqslant " : "") + latex_atom(c.chain[i]);
  }
  return s;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n"), b = s.find_last_not_of(" \t\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

bool ident(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

Monomial parse_monomial(const std::string& s, const std::set<std::string>& simplicial) {
  static const std::regex param_re("[tuvw][0-9]*");
  Monomial m;
  std::size_t i = 0;
  int sign = 1;
  bool expect = true;
  while (i <= s.size()) {
    std::size_t j = s.find_first_of("*/", i);
    if (j == std::string::npos) j = s.size();
    std::string f = trim(s.substr(i, j - i));
    int e = 1;
    auto caret = f.find('^');
    if (caret != std::string::npos) {
      std::string ex = trim(f.substr(caret + 1));
      f = trim(f.substr(0, caret));
      if (ex.empty() || ex.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad exponent in monomial '" + s + "'");
      e = std::stoi(ex);
    }
    if (!ident(f)) throw ParseError("bad factor '" + f + "' in monomial '" + s + "'");
    if (f != "1") {
      Atom a = simplicial.count(f)           ? topological(f)
               : std::regex_match(f, param_re) ? parameter(f)
                                               : constant(f);
      bump(m, a, sign * e);
    }
    expect = false;
    if (j == s.size()) break;
    sign = s[j] == '*' ? 1 : -1;
    i = j + 1;
    expect = true;
  }
  if (expect) throw ParseError("dangling operator in monomial '" + s + "'");
  return m;
}

}  // namespace

Cycle parse_cycle(const std::string& text) {
  std::string s = trim(text);
  if (s.empty() || s[0] != '[') throw ParseError("a cycle starts with '['");
  auto close = s.find(']');
  if (close == std::string::npos) throw ParseError("missing ']' in cycle");
  Cycle c;
  std::set<std::string> simplicial;
  std::string tail = trim(s.substr(close + 1));
  if (!tail.empty()) {
    if (tail.rfind("with", 0) != 0) throw ParseError("unexpected text after cycle: '" + tail + "'");
    std::string ch = trim(tail.substr(4));
    std::size_t i = 0;
    while (true) {
      std::size_t j = ch.find("<=", i);
      std::string name = trim(ch.substr(i, j == std::string::npos ? std::string::npos : j - i));
      if (!ident(name)) throw ParseError("bad chain entry '" + name + "'");
      c.chain.push_back(name);
      if (j == std::string::npos) break;
      i = j + 2;
    }
    if (c.chain.size() < 2) throw ParseError("a chain needs two ends");
    for (std::size_t k = 1; k + 1 < c.chain.size(); ++k) simplicial.insert(c.chain[k]);
  }
  std::string body = s.substr(1, close - 1);
  if (trim(body).empty()) return c;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError("empty coordinate");
    if (item.rfind("1-", 0) == 0)
      c.coords.push_back(one_minus(parse_monomial(item.substr(2), simplicial)));
    else
      c.coords.push_back(plain(parse_monomial(item, simplicial)));
  }
  if (body.back() == ',' || trim(body).back() == ',') throw ParseError("trailing comma in cycle");
  return c;
}

}  // namespace polylog
