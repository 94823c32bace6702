#pragma once
// JSON form of every object: {"kind": ..., "data": ...}.  Linear combinations
// carry {"terms": [{"coeff": "p/q", "basis": ...}]}.

#include <json.hpp>

#include "polylog/bar.hpp"
#include "polylog/cycles.hpp"
#include "polylog/iterint.hpp"
#include "polylog/trees.hpp"

namespace polylog {

using Json = nlohmann::json;

Json to_json(const Tree& t);
Json to_json(const Forest& f);
Json to_json(const Polygon& p);
Json to_json(const PolyWedge& w);
Json to_json(const Cycle& c);
Json to_json(const BarWord& w);
Json to_json(const ISymbol& s);
Json to_json(const IMono& m);  // also IWedge

// Readers take the bare data part and throw ParseError on malformed input.
Tree tree_from_json(const Json& j);
Forest forest_from_json(const Json& j);
Polygon polygon_from_json(const Json& j);
Cycle cycle_from_json(const Json& j);
BarWord bar_word_from_json(const Json& j);
ISymbol isymbol_from_json(const Json& j);

Json wrap(const std::string& kind, Json data);
// Checks the kind and returns the data part.
const Json& unwrap(const Json& j, const std::string& kind);

template <class B, class F>
Json comb_to_json(const LinComb<B>& c, F basis) {
  Json terms = Json::array();
  for (const auto& [b, x] : c) terms.push_back({{"coeff", scalar_str(x)}, {"basis", basis(b)}});
  return {{"terms", terms}};
}

template <class B, class F>
LinComb<B> comb_from_json(const Json& j, F basis) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) throw ParseError("expected {\"terms\": [...]}");
  LinComb<B> out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || !t.contains("basis"))
      throw ParseError("a term is {\"coeff\": \"p/q\", \"basis\": ...}");
    Scalar c;
    try {
      c = parse_scalar(t["coeff"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    out.add(basis(t["basis"]), c);
  }
  return out;
}

template <class L, class R, class FL, class FR>
Json pair_to_json(const std::pair<L, R>& p, FL left, FR right) {
  return {{"left", left(p.first)}, {"right", right(p.second)}};
}

}  // namespace polylog
