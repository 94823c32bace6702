#include "polylog/polygons.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace polylog {

int compare(const Polygon& a, const Polygon& b) {
  if (a.enhanced() != b.enhanced()) return a.enhanced() ? -1 : 1;
  if (a.sides == b.sides) return 0;
  return std::lexicographical_compare(a.sides.begin(), a.sides.end(), b.sides.begin(), b.sides.end()) ? -1 : 1;
}

void validate(const Polygon& p) {
  if (p.size() < 2) throw ParseError("a polygon needs at least two sides");
  for (const auto& s : p.sides)
    if (s.empty() || (is_second_type(s) && s.size() == 1)) throw ParseError("empty side decoration");
  if (is_undecorated(p.sides.front()) || is_undecorated(p.sides.back()))
    throw ParseError("first and root sides must be decorated");
  for (int i = 1; i < p.size(); ++i)
    if (is_second_type(p.sides[i])) throw ParseError("only the first side may be of second type");
}

int weight(const Polygon& p) { return p.size() - 1 - (p.enhanced() ? 1 : 0); }

PolyComb wedge_term(std::vector<Polygon> factors, const Scalar& c) {
  auto [w, s] = wedge_normalize(std::move(factors), [](const Polygon&) { return 1; });
  PolyComb out;
  if (s != 0) out.add(std::move(w), c * s);
  return out;
}

bool is_trivial(const Arrow& a, int n) {
  if (a.vertex == 0) return a.side == n || a.side == 1;
  return a.side == a.vertex || a.side == a.vertex + 1;
}

bool crosses(const Arrow& a, const Arrow& b, int /*n*/) {
  if (a.vertex == b.vertex || a.side == b.side) return false;
  int x1 = 2 * a.vertex, x2 = 2 * a.side - 1;
  if (x1 > x2) std::swap(x1, x2);
  auto inside = [&](int q) { return x1 < q && q < x2; };
  return inside(2 * b.vertex) != inside(2 * b.side - 1);
}

std::vector<Arrow> arrows(const Polygon& p) {
  std::vector<Arrow> out;
  int n = p.size();
  bool enh = p.enhanced();
  for (int v = 0; v < n; ++v)
    for (int s = 1; s <= n; ++s) {
      Arrow a{v, s};
      if (is_trivial(a, n)) continue;
      if (enh && (v == 0 || s == 1)) continue;
      out.push_back(a);
    }
  return out;
}

Labeled identity_labels(int n) {
  Labeled l;
  for (int i = 1; i <= n; ++i) l.side.push_back(i);
  for (int i = 0; i < n; ++i) l.vertex.push_back(i);
  return l;
}

Labeled reversed(const Labeled& l) {
  Labeled r;
  int m = static_cast<int>(l.side.size());
  for (int k = m - 2; k >= 0; --k) r.side.push_back(l.side[k]);
  r.side.push_back(l.side[m - 1]);
  r.vertex.assign(l.vertex.rbegin(), l.vertex.rend());
  return r;
}

Polygon realize(const Polygon& p, const Labeled& l) {
  Polygon q;
  for (int s : l.side) q.sides.push_back(p.sides[s - 1]);
  return q;
}

namespace {

// Splits at the arrow from local vertex i to local side j; both parts keep
// the orientation of l.
std::pair<Labeled, Labeled> split(const Labeled& l, int i, int j) {
  int m = static_cast<int>(l.side.size());
  auto S = [&](int k) { return l.side[k - 1]; };
  auto V = [&](int k) { return l.vertex[k]; };
  Labeled root, cut;
  if (j > i) {
    for (int k = 1; k <= i; ++k) root.side.push_back(S(k));
    for (int k = j; k <= m; ++k) root.side.push_back(S(k));
    for (int k = 0; k <= i; ++k) root.vertex.push_back(V(k));
    for (int k = j; k <= m - 1; ++k) root.vertex.push_back(V(k));
    for (int k = i + 1; k <= j; ++k) cut.side.push_back(S(k));
    for (int k = i; k <= j - 1; ++k) cut.vertex.push_back(V(k));
  } else {
    for (int k = 1; k <= j; ++k) root.side.push_back(S(k));
    for (int k = i + 1; k <= m; ++k) root.side.push_back(S(k));
    for (int k = 0; k <= j - 1; ++k) root.vertex.push_back(V(k));
    for (int k = i; k <= m - 1; ++k) root.vertex.push_back(V(k));
    for (int k = j + 1; k <= i; ++k) cut.side.push_back(S(k));
    cut.side.push_back(S(j));
    for (int k = j; k <= i; ++k) cut.vertex.push_back(V(k));
  }
  return {root, cut};
}

int find(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

bool contains(const Labeled& l, const Arrow& a) { return find(l.vertex, a.vertex) >= 0 && find(l.side, a.side) >= 0; }

std::pair<Labeled, Labeled> split_global(const Labeled& l, const Arrow& a) {
  int i = find(l.vertex, a.vertex);
  int j = find(l.side, a.side) + 1;
  if (i < 0 || j <= 0) throw std::logic_error("arrow not inside region");
  return split(l, i, j);
}

}  // namespace

Cut dissect_one(const Polygon& p, const Arrow& a) {
  auto as = arrows(p);
  if (std::find(as.begin(), as.end(), a) == as.end())
    throw std::invalid_argument("arrow is trivial or not admissible in " + render(p));
  auto [r, c] = split(identity_labels(p.size()), a.vertex, a.side);
  Cut out;
  out.root = realize(p, r);
  out.cut_bar = realize(p, c);
  out.cut = is_backward(a) ? realize(p, reversed(c)) : out.cut_bar;
  return out;
}

PolyComb polygon_differential(const Polygon& p, Variant v) {
  PolyComb out;
  for (const auto& a : arrows(p)) {
    Cut c = dissect_one(p, a);
    if (v == Variant::Standard) {
      int s = (is_backward(a) && (weight(c.cut) & 1)) ? -1 : 1;
      out += wedge_term({c.root, c.cut}, Scalar(s));
    } else {
      out += wedge_term({c.root, c.cut_bar}, Scalar(is_backward(a) ? -1 : 1));
    }
  }
  return out;
}

PolyComb polygon_differential(const PolyWedge& w, Variant v) {
  PolyComb out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    PolyComb d = polygon_differential(w[i], v);
    for (const auto& [f, c] : d) {
      std::vector<Polygon> fs(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      fs.insert(fs.end(), f.begin(), f.end());
      fs.insert(fs.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      out += wedge_term(std::move(fs), (i & 1) ? Scalar(-c) : c);
    }
  }
  return out;
}

PolyComb polygon_differential(const PolyComb& c, Variant v) {
  return c.apply([v](const PolyWedge& w) { return polygon_differential(w, v); });
}

namespace {

// Frames keep the end point of the arrow above a region at local vertex 0,
// so a nested arrow ending on the local root side splits unambiguously.
struct Builder {
  const Polygon& p;
  const std::vector<Arrow>& all;
  Dissection& d;

  int build(const Labeled& l, std::vector<int> members, int root_arrow, int parent) {
    if (members.empty()) {
      Region r;
      r.labels = l;
      r.poly = realize(p, l);
      r.parent = parent;
      r.root_arrow = root_arrow;
      d.regions.push_back(r);
      return static_cast<int>(d.regions.size()) - 1;
    }
    // an outermost arrow: its cut part holds the most other arrows
    int best = -1, best_count = -1;
    for (int a : members) {
      auto [r, c] = split_global(l, all[a]);
      int cnt = 0;
      for (int b : members)
        if (b != a && contains(c, all[b]) && !contains(r, all[b])) ++cnt;
      if (cnt > best_count) {
        best = a;
        best_count = cnt;
      }
    }
    auto [r, c] = split_global(l, all[best]);
    std::vector<int> in_root, in_cut;
    for (int b : members) {
      if (b == best) continue;
      if (contains(r, all[b]))
        in_root.push_back(b);
      else if (contains(c, all[b]))
        in_cut.push_back(b);
      else
        throw std::logic_error("arrow lost while splitting");
    }
    bool backward = find(l.side, all[best].side) + 1 <= find(l.vertex, all[best].vertex);
    int idx = build(r, in_root, root_arrow, parent);
    int kid = build(backward ? reversed(c) : c, in_cut, best, idx);
    if (is_backward(all[best]) && (weight(d.regions[static_cast<std::size_t>(kid)].poly) & 1)) d.sign = -d.sign;
    return idx;
  }
};

}  // namespace

Dissection analyze_dissection(const Polygon& p, std::vector<Arrow> as) {
  std::sort(as.begin(), as.end());
  Dissection d;
  d.arrows = as;
  d.sign = 1;
  Builder b{p, d.arrows, d};
  std::vector<int> members(as.size());
  for (std::size_t i = 0; i < as.size(); ++i) members[i] = static_cast<int>(i);
  b.build(identity_labels(p.size()), members, -1, -1);

  for (std::size_t k = 0; k < d.regions.size(); ++k) {
    Region& r = d.regions[k];
    if (r.parent >= 0) d.regions[static_cast<std::size_t>(r.parent)].kids.push_back(static_cast<int>(k));
  }
  // plane order of children: by where their arrows leave the parent boundary
  for (auto& r : d.regions) {
    const Labeled& pl = r.labels;
    int m = static_cast<int>(pl.side.size());
    auto key = [&](int kid) {
      const Arrow& a = d.arrows[static_cast<std::size_t>(d.regions[static_cast<std::size_t>(kid)].root_arrow)];
      int k = find(pl.vertex, a.vertex);
      if (k < 0) k = m;
      int before = k == 0 ? pl.side[static_cast<std::size_t>(m - 1)] : (k < m ? pl.side[static_cast<std::size_t>(k - 1)] : -1);
      return std::make_tuple(k, a.side == before ? 0 : 1, a.vertex, a.side);
    };
    std::sort(r.kids.begin(), r.kids.end(), [&](int x, int y) { return key(x) < key(y); });
  }
  return d;
}

std::vector<std::vector<Arrow>> enumerate_arrow_sets(const Polygon& p, int n) {
  std::vector<std::vector<Arrow>> out;
  if (n < 1) return out;
  auto as = arrows(p);
  int need = n - 1;
  std::vector<Arrow> cur;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == need) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < as.size(); ++k) {
      bool ok = true;
      for (const auto& c : cur)
        if (crosses(c, as[k], p.size())) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(as[k]);
      go(k + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<Dissection> enumerate_dissections(const Polygon& p, int n) {
  std::vector<Dissection> out;
  for (auto& s : enumerate_arrow_sets(p, n)) out.push_back(analyze_dissection(p, std::move(s)));
  return out;
}

std::vector<Dissection> all_dissections(const Polygon& p) {
  std::vector<Dissection> out;
  for (int n = 1;; ++n) {
    auto ds = enumerate_dissections(p, n);
    if (ds.empty()) break;
    for (auto& d : ds) out.push_back(std::move(d));
  }
  return out;
}

int sign_dissection(const Polygon& p, const std::vector<Arrow>& as) { return analyze_dissection(p, as).sign; }

std::vector<Arrow> induced_arrows(const Dissection& d, int r, const std::vector<Arrow>& finer) {
  std::vector<Arrow> out;
  for (const auto& a : finer) {
    if (std::find(d.arrows.begin(), d.arrows.end(), a) != d.arrows.end()) continue;
    int owner = -1;
    for (std::size_t k = 0; k < d.regions.size(); ++k)
      if (contains(d.regions[k].labels, a)) {
        if (owner >= 0) throw std::logic_error("arrow in two regions");
        owner = static_cast<int>(k);
      }
    if (owner < 0) throw std::invalid_argument("arrow crosses the dissection");
    if (owner != r) continue;
    const Labeled& l = d.regions[static_cast<std::size_t>(r)].labels;
    out.push_back({find(l.vertex, a.vertex), find(l.side, a.side) + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Node> bracketings(const std::vector<std::string>& leaves, std::size_t lo, std::size_t hi) {
  std::vector<Node> out;
  if (hi - lo == 1) {
    out.push_back(leaf(leaves[lo]));
    return out;
  }
  for (std::size_t k = lo + 1; k < hi; ++k) {
    auto left = bracketings(leaves, lo, k);
    auto right = bracketings(leaves, k, hi);
    for (const auto& l : left)
      for (const auto& r : right) out.push_back(internal({l, r}));
  }
  return out;
}

bool has_undecorated_pair(const Node& n) {
  if (n.external()) return false;
  int u = 0;
  for (const auto& k : n.kids)
    if (k.external() && is_undecorated(k.deco)) ++u;
  if (u >= 2) return true;
  for (const auto& k : n.kids)
    if (has_undecorated_pair(k)) return true;
  return false;
}

}  // namespace

ForestComb triangulations_psi(const Polygon& p) {
  std::vector<std::string> leaves(p.sides.begin(), p.sides.end() - 1);
  ForestComb out;
  for (auto& top : bracketings(leaves, 0, leaves.size())) {
    if (has_undecorated_pair(top)) continue;
    out += forest_term({Tree{p.sides.back(), std::move(top)}});
  }
  return out;
}

ForestComb psi(const PolyComb& c) {
  ForestComb out;
  for (const auto& [w, x] : c) {
    ForestComb prod(Forest{});
    for (const auto& q : w) prod = star(prod, triangulations_psi(q));
    out.add_scaled(prod, x);
  }
  return out;
}

ForestComb tree_sum(const std::vector<std::string>& decos) {
  std::set<std::string> seen(decos.begin(), decos.end());
  if (seen.size() != decos.size()) throw std::invalid_argument("tree_sum needs pairwise distinct decorations");
  Polygon p{decos};
  validate(p);
  return triangulations_psi(p);
}

std::string render(const Polygon& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p.sides[i];
  }
  return s + "]";
}

std::string render(const PolyWedge& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "^";
    s += render(w[i]);
  }
  return s;
}

std::string render(const PolyComb& c) {
  return render_lincomb(c, [](const PolyWedge& w) { return render(w); });
}

std::string render_latex(const Polygon& p) {
  std::string s = "\\lceil ";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    const auto& d = p.sides[i];
    if (is_undecorated(d))
      s += "\\_";
    else if (is_second_type(d))
      s += "\\tilde{" + d.substr(1) + "}";
    else
      s += d;
  }
  return s + " \\rceil";
}

Polygon parse_polygon(const std::string& s) {
  std::size_t i = 0;
  auto ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  ws();
  if (i >= s.size() || s[i] != '[') throw ParseError("polygon must start with '['");
  ++i;
  Polygon p;
  for (;;) {
    ws();
    std::size_t b = i;
    while (i < s.size() && s[i] != ',' && s[i] != ']' && !std::isspace(static_cast<unsigned char>(s[i]))) {
      if (s[i] == '[' || s[i] == '|' || s[i] == '^') throw ParseError("unexpected character in polygon side");
      ++i;
    }
    if (i == b) throw ParseError("empty polygon side");
    p.sides.push_back(s.substr(b, i - b));
    ws();
    if (i >= s.size()) throw ParseError("unterminated polygon");
    if (s[i] == ']') {
      ++i;
      break;
    }
    if (s[i] != ',') throw ParseError("expected ',' in polygon");
    ++i;
  }
  ws();
  if (i != s.size()) throw ParseError("trailing input after polygon");
  validate(p);
  return p;
}

std::vector<Polygon> polygon_patterns(int min_sides, int max_sides) {
  std::vector<Polygon> out;
  for (int n = std::max(2, min_sides); n <= max_sides; ++n)
    for (const auto& pat : set_partitions(n)) {
      Polygon p;
      for (int b : pat) p.sides.push_back(std::to_string(b + 1));
      out.push_back(std::move(p));
    }
  return out;
}

}  // namespace polylog
