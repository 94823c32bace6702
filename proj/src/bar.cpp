#include "polylog/bar.hpp"

#include <functional>
#include <stdexcept>

namespace polylog {

namespace {

int degree_one(const Polygon&) { return 1; }

int factors(const BarWord& w) {
  int k = 0;
  for (const auto& l : w) k += static_cast<int>(l.size());
  return k;
}

BarComb tensor_unit() { return BarComb(BarWord{}); }

}  // namespace

BarWord bar_word(const std::vector<Polygon>& letters) {
  BarWord w;
  for (const auto& p : letters) w.push_back({p});
  return w;
}

bool is_pure(const BarWord& w) {
  for (const auto& l : w)
    if (l.size() != 1) return false;
  return true;
}

int weight(const BarWord& w) {
  int s = 0;
  for (const auto& l : w)
    for (const auto& p : l) s += weight(p);
  return s;
}

BarComb bar_D1(const BarWord& w) {
  BarComb out;
  int n = static_cast<int>(w.size()), k = factors(w);
  for (int j = 1; j < n; ++j) {
    PolyWedge merged = w[j - 1];
    merged.insert(merged.end(), w[j].begin(), w[j].end());
    auto [letter, s] = wedge_normalize(std::move(merged), degree_one);
    if (s == 0) continue;
    BarWord v(w.begin(), w.begin() + (j - 1));
    v.push_back(std::move(letter));
    v.insert(v.end(), w.begin() + (j + 1), w.end());
    out.add(std::move(v), Scalar(((j + k - n) % 2 ? -1 : 1) * s));
  }
  return out;
}

BarComb bar_D2(const BarWord& w, Variant var) {
  BarComb out;
  int before = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    Scalar sign = before % 2 ? Scalar(-1) : Scalar(1);
    for (const auto& [letter, c] : polygon_differential(w[j], var)) {
      BarWord v = w;
      v[j] = letter;
      out.add(std::move(v), c * sign);
    }
    before += static_cast<int>(w[j].size());
  }
  return out;
}

BarComb bar_D1(const BarComb& c) {
  return c.apply([](const BarWord& w) { return bar_D1(w); });
}

BarComb bar_D2(const BarComb& c, Variant v) {
  return c.apply([v](const BarWord& w) { return bar_D2(w, v); });
}

BarComb bar_D(const BarComb& c, Variant v) { return bar_D1(c) + bar_D2(c, v); }

BarComb bar_element(const Polygon& p) {
  BarComb out;
  for (const auto& d : all_dissections(p)) {
    // linear extensions of the dual tree, root region first
    std::vector<int> avail{0}, order;
    std::function<void()> go = [&]() {
      if (order.size() == d.regions.size()) {
        BarWord w;
        for (int r : order) w.push_back({d.regions[static_cast<std::size_t>(r)].poly});
        out.add(std::move(w), Scalar(d.sign));
        return;
      }
      for (std::size_t i = 0; i < avail.size(); ++i) {
        int r = avail[i];
        std::vector<int> saved = avail;
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(i));
        for (int k : d.regions[static_cast<std::size_t>(r)].kids) avail.push_back(k);
        order.push_back(r);
        go();
        order.pop_back();
        avail = std::move(saved);
      }
    };
    go();
  }
  return out;
}

bool is_zero_cocycle(const BarComb& b, Variant v) { return bar_D(b, v).empty(); }

BarComb bar_component(const BarComb& b, int letters) {
  BarComb out;
  for (const auto& [w, c] : b)
    if (static_cast<int>(w.size()) == letters) out.add(w, c);
  return out;
}

BarComb shuffle_bar(const BarWord& a, const BarWord& b) { return shuffle(a, b); }

BarComb shuffle_bar(const BarComb& a, const BarComb& b) { return shuffle(a, b); }

BarTensor2 coproduct_deconcat(const BarComb& b) {
  BarTensor2 out;
  for (const auto& [w, c] : b) {
    if (!is_pure(w)) throw std::invalid_argument("deconcatenation needs letters without wedges: " + render(w));
    bool enhanced = !w.empty() && w[0][0].enhanced();
    for (std::size_t k = enhanced ? 1 : 0; k <= w.size(); ++k)
      out.add({BarWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
               BarWord(w.begin() + static_cast<std::ptrdiff_t>(k), w.end())},
              c);
  }
  return out;
}

std::vector<AdmissibleCut> admissible_cuts(const Polygon& p) {
  std::vector<AdmissibleCut> out;
  for (const auto& d : all_dissections(p)) {
    bool star = true;
    for (std::size_t r = 1; r < d.regions.size(); ++r)
      if (d.regions[r].parent != 0) star = false;
    if (!star) continue;
    AdmissibleCut c;
    c.sign = d.sign;
    c.root = d.regions[0].poly;
    for (std::size_t r = 1; r < d.regions.size(); ++r) c.pieces.push_back(d.regions[r].poly);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

BarComb shuffle_pieces(const std::vector<Polygon>& pieces) {
  BarComb s = tensor_unit();
  for (const auto& q : pieces) s = shuffle_bar(s, bar_element(q));
  return s;
}

BarTensor2 tensor(const BarComb& a, const BarComb& b) {
  return bilinear(a, b, [](const BarWord& x, const BarWord& y) { return BarTensor2(BarPair{x, y}); });
}

BarTensor3 tensor(const BarTensor2& a, const BarComb& b) {
  return bilinear(a, b, [](const BarPair& x, const BarWord& y) { return BarTensor3(BarTriple{x.first, x.second, y}); });
}

BarTensor3 tensor(const BarComb& a, const BarTensor2& b) {
  return bilinear(a, b, [](const BarWord& x, const BarPair& y) { return BarTensor3(BarTriple{x, y.first, y.second}); });
}

}  // namespace

BarTensor2 coproduct_admissible(const Polygon& p) {
  BarTensor2 out;
  for (const auto& c : admissible_cuts(p))
    out.add_scaled(tensor(bar_element(c.root), shuffle_pieces(c.pieces)), Scalar(c.sign));
  if (!p.enhanced()) out += tensor(tensor_unit(), bar_element(p));
  return out;
}

BarTensor3 coassoc_left(const Polygon& p) {
  BarTensor3 out;
  for (const auto& c : admissible_cuts(p))
    out.add_scaled(tensor(coproduct_admissible(c.root), shuffle_pieces(c.pieces)), Scalar(c.sign));
  if (!p.enhanced()) out += tensor(tensor(tensor_unit(), tensor_unit()), bar_element(p));
  return out;
}

BarTensor3 coassoc_right(const Polygon& p) {
  BarTensor3 out;
  for (const auto& c : admissible_cuts(p))
    out.add_scaled(tensor(bar_element(c.root), coproduct_deconcat(shuffle_pieces(c.pieces))), Scalar(c.sign));
  if (!p.enhanced()) out += tensor(tensor_unit(), coproduct_deconcat(bar_element(p)));
  return out;
}

BarTensor2 shuffle_pairs(const BarTensor2& a, const BarTensor2& b) {
  return bilinear(a, b, [](const BarPair& x, const BarPair& y) {
    return bilinear(shuffle_bar(x.first, y.first), shuffle_bar(x.second, y.second),
                    [](const BarWord& l, const BarWord& r) { return BarTensor2(BarPair{l, r}); });
  });
}

std::string render(const BarWord& w) {
  if (w.empty()) return "1";
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "|";
    for (std::size_t k = 0; k < w[i].size(); ++k) s += (k ? "^" : "") + render(w[i][k]);
  }
  return s + "]";
}

std::string render(const BarComb& c) {
  return render_lincomb(c, [](const BarWord& w) { return render(w); });
}

std::string render(const BarPair& p) { return render(p.first) + " (x) " + render(p.second); }

std::string render(const BarTensor2& c, bool root_right) {
  return render_lincomb(c, [root_right](const BarPair& p) {
    return root_right ? render(BarPair{p.second, p.first}) : render(p);
  });
}

std::string render_latex(const BarWord& w) {
  if (w.empty()) return "1";
  std::string s = "\\big[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "\\,\\big|\\,";
    for (std::size_t k = 0; k < w[i].size(); ++k) s += (k ? " \\wedge " : "") + render_latex(w[i][k]);
  }
  return s + "\\big]";
}

namespace {

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in bar word");
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in bar word");
  out.push_back(cur);
  return out;
}

}  // namespace

BarWord parse_bar_word(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t\n"), b = text.find_last_not_of(" \t\n");
  if (a == std::string::npos) throw ParseError("empty bar word");
  std::string s = text.substr(a, b - a + 1);
  if (s == "1" || s == "[]") return {};
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("a bar word is written [a|b|...]");
  BarWord w;
  for (const auto& letter : split_top(s.substr(1, s.size() - 2), '|')) {
    PolyWedge l;
    for (const auto& poly : split_top(letter, '^')) l.push_back(parse_polygon(poly));
    w.push_back(std::move(l));
  }
  return w;
}

}  // namespace polylog
