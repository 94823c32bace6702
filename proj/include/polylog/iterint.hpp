#pragma once
// Formal iterated integrals I(a0; a1..an; a_{n+1}): rewriting to the basis
// I(0; b1..bk; b_{k+1}), coproduct, Lie cobracket and the comparison with
// polygons.  The atom "0" is zero.

#include <string>
#include <utility>
#include <vector>

#include "polylog/algebra.hpp"
#include "polylog/polygons.hpp"

namespace polylog {

struct ISymbol {
  std::string a0;
  std::vector<std::string> mid;
  std::string aend;
  int degree() const { return static_cast<int>(mid.size()); }
  bool operator==(const ISymbol& o) const { return a0 == o.a0 && mid == o.mid && aend == o.aend; }
  bool operator<(const ISymbol& o) const {
    if (mid.size() != o.mid.size()) return mid.size() < o.mid.size();
    if (a0 != o.a0) return a0 < o.a0;
    if (mid != o.mid) return mid < o.mid;
    return aend < o.aend;
  }
};

inline bool is_zero_atom(const std::string& a) { return a == "0"; }

// Commutative monomial in basis symbols, sorted; empty is 1.
using IMono = std::vector<ISymbol>;
using IElement = LinComb<IMono>;
using IPair = std::pair<IMono, IMono>;
using ITensor = LinComb<IPair>;
// Wedge words of basis symbols (degree one each, sorted).
using IWedge = std::vector<ISymbol>;
using IWedgeComb = LinComb<IWedge>;

struct IRules {
  bool zero_between_zeros = true;  // I(0; m; 0) = 0 for nonempty m
  bool invert_first = false;       // apply inversion before path composition
};

IElement i_product(const IElement& a, const IElement& b);
IElement i_normalize(const ISymbol& s, const IRules& rules = {});
IElement i_normalize(const IElement& e, const IRules& rules = {});

ITensor i_coproduct(const ISymbol& s, const IRules& rules = {});

// Linear part of an element: its component on single basis symbols.
LinComb<ISymbol> i_linear(const IElement& e);

IWedgeComb i_wedge(const std::vector<ISymbol>& factors, const Scalar& c = Scalar(1));
// Closed formula on a basis symbol.
IWedgeComb i_cobracket(const ISymbol& s, const IRules& rules = {});
// Oracle: the indecomposable projection of the coproduct, antisymmetrized.
IWedgeComb i_cobracket_from_coproduct(const ISymbol& s, const IRules& rules = {});
// Extension to wedge words as a derivation.
IWedgeComb i_cobracket(const IWedgeComb& w, const IRules& rules = {});

// [a1..a_{n+1}] -> I(0; a1..an; a_{n+1}); rejects undecorated and enhanced sides.
ISymbol polygon_to_i(const Polygon& p);
// Image of a polygon wedge combination as indecomposables.
IWedgeComb polygon_wedge_to_i(const PolyComb& c, const IRules& rules = {});
// Admissible coproduct of p read through polygon_to_i, pieces multiplied.
ITensor polygon_coproduct_to_i(const Polygon& p, const IRules& rules = {});
bool compare_coproducts(const Polygon& p, const IRules& rules = {});

std::string render(const ISymbol& s);
std::string render(const IMono& m);
std::string render(const IElement& e);
std::string render(const ITensor& t);
// IWedgeComb and IElement share a type; wedge combinations render with " ^ ".
std::string render_wedge(const IWedgeComb& w);
std::string render_latex(const ISymbol& s);
// "I(0; x1, x2; 1)" or "I(a; b)".
ISymbol parse_isymbol(const std::string& s);

}  // namespace polylog
