#pragma once
// Symbolic cubical cycles: coordinates are 1 - q or q for a Laurent monomial q
// in constants, parameters (algebraic variables of the parametrizing P^1's) and
// simplicial variables of enhanced chains.  Cycles are kept as coinvariants
// under coordinate permutations twisted by the sign character.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polylog/algebra.hpp"
#include "polylog/polygons.hpp"
#include "polylog/trees.hpp"

namespace polylog {

struct Atom {
  enum class Kind { Constant, Parameter, Topological };
  Kind kind = Kind::Constant;
  std::string name;
  bool operator==(const Atom& o) const { return kind == o.kind && name == o.name; }
  bool operator<(const Atom& o) const { return kind != o.kind ? kind < o.kind : name < o.name; }
};

inline Atom constant(std::string n) { return {Atom::Kind::Constant, std::move(n)}; }
inline Atom parameter(std::string n) { return {Atom::Kind::Parameter, std::move(n)}; }
inline Atom topological(std::string n) { return {Atom::Kind::Topological, std::move(n)}; }

// Exponents are never zero; the empty monomial is 1.  The constant "1" is the
// unit and never stored.
using Monomial = std::map<Atom, int>;
Monomial ratio(const Atom& num, const Atom& den);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, int k);

struct Coord {
  enum class Form { OneMinus, Plain };
  Form form = Form::OneMinus;
  Monomial m;
  bool operator==(const Coord& o) const { return form == o.form && m == o.m; }
  bool operator<(const Coord& o) const { return form != o.form ? form < o.form : m < o.m; }
};

inline Coord one_minus(Monomial m) { return {Coord::Form::OneMinus, std::move(m)}; }
inline Coord plain(Monomial m) { return {Coord::Form::Plain, std::move(m)}; }

// `chain` is empty for algebraic cycles.  For enhanced chains it lists the
// lower end, the simplicial variables in increasing order and the upper end.
struct Cycle {
  std::vector<Coord> coords;
  std::vector<std::string> chain;
  bool operator==(const Cycle& o) const { return coords == o.coords && chain == o.chain; }
  bool operator<(const Cycle& o) const {
    return coords != o.coords ? coords < o.coords : chain < o.chain;
  }
};
using CycleComb = LinComb<Cycle>;

std::vector<Atom> parameters(const Cycle& c);
int codimension(const Cycle& c);  // coordinates minus parameters

// Sorts coordinates and renames parameters to t1, t2, ... so that the result
// is the least representative.  Sign 0 when the cycle vanishes: a coordinate
// identically 1, a repeated coordinate, or an odd symmetry.
std::pair<Cycle, int> cycle_normalize(Cycle raw);
CycleComb cycle_term(Cycle raw, const Scalar& c = Scalar(1));

CycleComb concat(const Cycle& a, const Cycle& b);
CycleComb concat(const CycleComb& a, const CycleComb& b);

enum class FaceStatus { Ok, Empty, Degenerate, UnsupportedExponent };
const char* to_string(FaceStatus s);

enum class Pivot { Least, Greatest };

struct FaceOptions {
  Pivot pivot = Pivot::Least;
  // Exact values for constants; used only to decide whether an all-constant
  // monomial equals 1.  Without values distinct constants are independent.
  const std::map<std::string, Scalar>* values = nullptr;
};

struct Face {
  FaceStatus status = FaceStatus::Empty;
  Cycle cycle;  // raw, not normalized
};

enum class Eps { Zero, Infinity };
Face face(const Cycle& c, int i, Eps eps, const FaceOptions& opt = {});

struct CycleDiff {
  FaceStatus status = FaceStatus::Ok;
  CycleComb value;
  bool ok() const { return status == FaceStatus::Ok; }
};
CycleDiff cycle_differential(const Cycle& c, const FaceOptions& opt = {});
CycleDiff cycle_differential(const CycleComb& c, const FaceOptions& opt = {});
// Only the zero faces, or only the infinity faces, with the alternating sign.
CycleDiff partial_differential(const CycleComb& c, Eps eps, const FaceOptions& opt = {});

bool is_admissible(const Cycle& c, const FaceOptions& opt = {});
bool is_admissible(const CycleComb& c, const FaceOptions& opt = {});

// Largest absolute exponent over the coordinates of all iterated faces.
int max_face_exponent(const Cycle& c);

// Splits a cycle into two factors with disjoint parameters, if possible.
std::optional<std::pair<Cycle, Cycle>> factor(const Cycle& c);

Cycle totaro_cycle(const std::string& a);

// One coordinate per edge in the canonical edge order.  Internal vertices get
// parameters; undecorated leaves give the plain parameter of their parent; in
// enhanced trees the vertices on the marked path get simplicial variables and
// edges between two of them only constrain the chain.
CycleComb forest_cycling(const Forest& f);
CycleComb forest_cycling(const ForestComb& f);
CycleComb cycle_from_polygon(const Polygon& p);

std::string render(const Atom& a);
std::string render(const Monomial& m);
std::string render(const Coord& c);
std::string render(const Cycle& c);
std::string render(const CycleComb& c);
std::string render_latex(const Cycle& c);
// Names t, u, v, w optionally followed by digits are parameters; names inside
// a trailing "with a<=s1<=...<=b" clause are simplicial; everything else is a
// constant.
Cycle parse_cycle(const std::string& s);

}  // namespace polylog
