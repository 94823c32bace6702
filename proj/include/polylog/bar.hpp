#pragma once
// Bar construction over the polygon algebra.  A bar word is a sequence of
// letters, each a canonical wedge word of polygons; an enhanced polygon can
// only lead the first letter.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polylog/algebra.hpp"
#include "polylog/polygons.hpp"

namespace polylog {

using BarWord = std::vector<PolyWedge>;
using BarComb = LinComb<BarWord>;
using BarPair = std::pair<BarWord, BarWord>;
using BarTensor2 = LinComb<BarPair>;
using BarTriple = std::tuple<BarWord, BarWord, BarWord>;
using BarTensor3 = LinComb<BarTriple>;

// Pure words: every letter a single polygon.
BarWord bar_word(const std::vector<Polygon>& letters);
bool is_pure(const BarWord& w);
int weight(const BarWord& w);

BarComb bar_D1(const BarWord& w);
BarComb bar_D2(const BarWord& w, Variant v = Variant::Standard);
BarComb bar_D1(const BarComb& c);
BarComb bar_D2(const BarComb& c, Variant v = Variant::Standard);
BarComb bar_D(const BarComb& c, Variant v = Variant::Standard);  // D1 + D2

// Sum over dissections and linear extensions of their dual trees.
BarComb bar_element(const Polygon& p);
bool is_zero_cocycle(const BarComb& b, Variant v = Variant::Standard);

// Words of B(p) with exactly n letters.
BarComb bar_component(const BarComb& b, int letters);

BarComb shuffle_bar(const BarWord& a, const BarWord& b);
BarComb shuffle_bar(const BarComb& a, const BarComb& b);

// Splits every word; for enhanced words the left part keeps the first letter.
// Throws std::invalid_argument on words with wedge letters.
BarTensor2 coproduct_deconcat(const BarComb& b);

// One term sgn(D) B(root) (x) shuffle of B(pieces) per admissible cut.
struct AdmissibleCut {
  int sign = 1;
  Polygon root;
  std::vector<Polygon> pieces;
};
// Dissections whose dual tree has height at most one (the trivial one
// included).  Enhanced polygons use their restricted arrows.
std::vector<AdmissibleCut> admissible_cuts(const Polygon& p);
BarTensor2 coproduct_admissible(const Polygon& p);

// (Delta (x) id) Delta and (id (x) Delta) Delta of B(p), with the left
// application of Delta computed through the admissible formula.
BarTensor3 coassoc_left(const Polygon& p);
BarTensor3 coassoc_right(const Polygon& p);

BarTensor2 shuffle_pairs(const BarTensor2& a, const BarTensor2& b);

std::string render(const BarWord& w);
std::string render(const BarComb& c);
std::string render(const BarPair& p);
std::string render(const BarTensor2& c, bool root_right = false);
std::string render_latex(const BarWord& w);
// "[[1,4]|[2,4]^[3,4]]"; "[]" is the empty word.
BarWord parse_bar_word(const std::string& s);

}  // namespace polylog
