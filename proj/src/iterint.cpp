#include "polylog/iterint.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "polylog/bar.hpp"

namespace polylog {

namespace {

IElement unit() { return IElement(IMono{}); }

IElement single(ISymbol s, const Scalar& c = Scalar(1)) { return IElement(IMono{std::move(s)}, c); }

std::vector<std::string> slice(const std::vector<std::string>& a, int from, int to) {  // a[from..to), may be empty
  if (to <= from) return {};
  return {a.begin() + from, a.begin() + to};
}

std::vector<std::string> reversed_slice(const std::vector<std::string>& a, int from, int to) {
  auto v = slice(a, from, to);
  std::reverse(v.begin(), v.end());
  return v;
}

Scalar parity(std::size_t n) { return n % 2 ? Scalar(-1) : Scalar(1); }

}  // namespace

IElement i_product(const IElement& a, const IElement& b) {
  return bilinear(a, b, [](const IMono& x, const IMono& y) {
    IMono m;
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(m));
    return IElement(m);
  });
}

IElement i_normalize(const ISymbol& s, const IRules& rules) {
  std::size_t n = s.mid.size();
  if (n == 0) return unit();
  if (rules.invert_first && !is_zero_atom(s.a0)) {
    IRules plain = rules;
    plain.invert_first = false;
    ISymbol inv{s.aend, std::vector<std::string>(s.mid.rbegin(), s.mid.rend()), s.a0};
    return parity(n) * i_normalize(inv, plain);
  }
  if (is_zero_atom(s.a0)) {
    if (is_zero_atom(s.aend) && rules.zero_between_zeros) return {};
    return single(s);
  }
  if (is_zero_atom(s.aend)) return single({"0", std::vector<std::string>(s.mid.rbegin(), s.mid.rend()), s.a0}, parity(n));
  // path composition through 0
  IElement out;
  int len = static_cast<int>(n);
  for (int k = 0; k <= len; ++k) {
    IElement left = k == 0 ? unit() : single({"0", reversed_slice(s.mid, 0, k), s.a0}, parity(static_cast<std::size_t>(k)));
    IElement right = k == len ? unit() : i_normalize(ISymbol{"0", slice(s.mid, k, len), s.aend}, rules);
    out += i_product(left, right);
  }
  return out;
}

IElement i_normalize(const IElement& e, const IRules& rules) {
  return e.apply([&](const IMono& m) {
    IElement out = unit();
    for (const auto& s : m) out = i_product(out, i_normalize(s, rules));
    return out;
  });
}

ITensor i_coproduct(const ISymbol& s, const IRules& rules) {
  int n = s.degree();
  std::vector<std::string> a;
  a.push_back(s.a0);
  a.insert(a.end(), s.mid.begin(), s.mid.end());
  a.push_back(s.aend);
  ITensor out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx{0};
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    idx.push_back(n + 1);
    ISymbol left{s.a0, {}, s.aend};
    for (std::size_t k = 1; k + 1 < idx.size(); ++k) left.mid.push_back(a[static_cast<std::size_t>(idx[k])]);
    IElement right = unit();
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
      right = i_product(right, i_normalize(ISymbol{a[static_cast<std::size_t>(idx[k])], slice(a, idx[k] + 1, idx[k + 1]),
                                                   a[static_cast<std::size_t>(idx[k + 1])]},
                                           rules));
    out += bilinear(i_normalize(left, rules), right, [](const IMono& x, const IMono& y) { return ITensor(IPair{x, y}); });
  }
  return out;
}

LinComb<ISymbol> i_linear(const IElement& e) {
  LinComb<ISymbol> out;
  for (const auto& [m, c] : e)
    if (m.size() == 1) out.add(m[0], c);
  return out;
}

IWedgeComb i_wedge(const std::vector<ISymbol>& factors, const Scalar& c) {
  auto [w, s] = wedge_normalize(factors, [](const ISymbol&) { return 1; });
  IWedgeComb out;
  if (s != 0) out.add(std::move(w), c * s);
  return out;
}

namespace {

IWedgeComb wedge2(const LinComb<ISymbol>& x, const LinComb<ISymbol>& y) {
  return bilinear(x, y, [](const ISymbol& a, const ISymbol& b) { return i_wedge({a, b}); });
}

LinComb<ISymbol> indecomposable(const ISymbol& s, const IRules& rules) { return i_linear(i_normalize(s, rules)); }

}  // namespace

IWedgeComb i_cobracket(const ISymbol& s, const IRules& rules) {
  if (!is_zero_atom(s.a0)) throw std::invalid_argument("cobracket formula needs a basis symbol I(0; ...; b)");
  int n = s.degree();
  std::vector<std::string> a;
  a.push_back("0");
  a.insert(a.end(), s.mid.begin(), s.mid.end());
  a.push_back(s.aend);
  auto at = [&](int i) { return a[static_cast<std::size_t>(i)]; };
  IWedgeComb out;
  for (int k = 0; k <= n; ++k)
    for (int l = k + 1; l <= n + 1; ++l) {
      ISymbol left{"0", slice(a, 1, k + 1), s.aend};
      auto tail = slice(a, l, n + 1);
      left.mid.insert(left.mid.end(), tail.begin(), tail.end());
      LinComb<ISymbol> right = indecomposable({"0", slice(a, k + 1, l), at(l)}, rules);
      if (k > 0)
        right.add_scaled(indecomposable({"0", reversed_slice(a, k + 1, l), at(k)}, rules),
                         parity(static_cast<std::size_t>(l - k - 1)));
      out += wedge2(indecomposable(left, rules), right);
    }
  return out;
}

IWedgeComb i_cobracket_from_coproduct(const ISymbol& s, const IRules& rules) {
  IWedgeComb out;
  for (const auto& [p, c] : i_coproduct(s, rules))
    if (p.first.size() == 1 && p.second.size() == 1) out += i_wedge({p.first[0], p.second[0]}, c);
  return out;
}

IWedgeComb i_cobracket(const IWedgeComb& w, const IRules& rules) {
  IWedgeComb out;
  for (const auto& [word, c] : w)
    for (std::size_t i = 0; i < word.size(); ++i) {
      Scalar sign = parity(i) * c;
      for (const auto& [pair, d] : i_cobracket(word[i], rules)) {
        std::vector<ISymbol> f(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        f.insert(f.end(), pair.begin(), pair.end());
        f.insert(f.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word.end());
        out += i_wedge(f, sign * d);
      }
    }
  return out;
}

ISymbol polygon_to_i(const Polygon& p) {
  if (p.enhanced()) throw std::invalid_argument("enhanced polygons have no iterated-integral symbol");
  for (const auto& s : p.sides)
    if (is_undecorated(s)) throw std::invalid_argument("undecorated sides have no iterated-integral symbol");
  return {"0", std::vector<std::string>(p.sides.begin(), p.sides.end() - 1), p.sides.back()};
}

IWedgeComb polygon_wedge_to_i(const PolyComb& c, const IRules& rules) {
  IWedgeComb out;
  for (const auto& [w, x] : c) {
    IWedgeComb acc(IWedge{}, x);
    for (const auto& p : w) {
      LinComb<ISymbol> lin = indecomposable(polygon_to_i(p), rules);
      acc = bilinear(acc, lin, [](const IWedge& u, const ISymbol& s) {
        std::vector<ISymbol> f = u;
        f.push_back(s);
        return i_wedge(f);
      });
    }
    out += acc;
  }
  return out;
}

ITensor polygon_coproduct_to_i(const Polygon& p, const IRules& rules) {
  auto tensor = [](const IElement& x, const IElement& y) {
    return bilinear(x, y, [](const IMono& a, const IMono& b) { return ITensor(IPair{a, b}); });
  };
  ITensor out;
  for (const auto& cut : admissible_cuts(p)) {
    IElement right = unit();
    for (const auto& q : cut.pieces) right = i_product(right, i_normalize(polygon_to_i(q), rules));
    out.add_scaled(tensor(i_normalize(polygon_to_i(cut.root), rules), right), Scalar(cut.sign));
  }
  out += tensor(unit(), i_normalize(polygon_to_i(p), rules));
  return out;
}

bool compare_coproducts(const Polygon& p, const IRules& rules) {
  return polygon_coproduct_to_i(p, rules) == i_coproduct(polygon_to_i(p), rules);
}

std::string render(const ISymbol& s) {
  std::string m;
  for (std::size_t i = 0; i < s.mid.size(); ++i) m += (i ? ", " : "") + s.mid[i];
  if (s.mid.empty()) return "I(" + s.a0 + "; " + s.aend + ")";
  return "I(" + s.a0 + "; " + m + "; " + s.aend + ")";
}

std::string render(const IMono& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "*" : "") + render(m[i]);
  return out;
}

std::string render(const IElement& e) {
  return render_lincomb(e, [](const IMono& m) { return render(m); });
}

std::string render(const ITensor& t) {
  return render_lincomb(t, [](const IPair& p) {
    return (p.first.empty() ? std::string("1") : render(p.first)) + " (x) " +
           (p.second.empty() ? std::string("1") : render(p.second));
  });
}

std::string render_wedge(const IWedgeComb& w) {
  return render_lincomb(w, [](const IWedge& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " ^ " : "") + render(f[i]);
    return out;
  });
}

std::string render_latex(const ISymbol& s) {
  std::string m;
  for (std::size_t i = 0; i < s.mid.size(); ++i) m += (i ? ", " : "") + s.mid[i];
  return "I(" + s.a0 + ";\\, " + (s.mid.empty() ? "" : m + ";\\, ") + s.aend + ")";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n"), b = s.find_last_not_of(" \t\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::string atom(const std::string& s) {
  std::string t = trim(s);
  if (t.empty() || t.find_first_of(" \t\n,;()") != std::string::npos) throw ParseError("bad atom '" + s + "'");
  return t;
}

}  // namespace

ISymbol parse_isymbol(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 4 || s.rfind("I(", 0) != 0 || s.back() != ')') throw ParseError("a symbol is written I(a0; a1, ..., an; b)");
  std::string body = s.substr(2, s.size() - 3);
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (true) {
    std::size_t j = body.find(';', i);
    parts.push_back(body.substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  ISymbol out;
  if (parts.size() == 2) {
    out.a0 = atom(parts[0]);
    out.aend = atom(parts[1]);
    return out;
  }
  if (parts.size() != 3) throw ParseError("a symbol has two or three ';'-separated parts");
  out.a0 = atom(parts[0]);
  out.aend = atom(parts[2]);
  std::string mid = trim(parts[1]);
  if (!mid.empty()) {
    std::size_t k = 0;
    while (true) {
      std::size_t j = mid.find(',', k);
      out.mid.push_back(atom(mid.substr(k, j == std::string::npos ? std::string::npos : j - k)));
      if (j == std::string::npos) break;
      k = j + 1;
    }
  }
  return out;
}

}  // namespace polylog
