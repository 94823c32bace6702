#include "polylog/serialize.hpp"

namespace polylog {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str(x));
  return out;
}

const Json& array(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  return j;
}

Json node_json(const Node& n) {
  if (n.external()) return {{"deco", n.deco}};
  Json kids = Json::array();
  for (const auto& k : n.kids) kids.push_back(node_json(k));
  return {{"kids", kids}};
}

Node node_from(const Json& j) {
  if (j.is_object() && j.contains("deco")) return leaf(str(j["deco"]));
  std::vector<Node> kids;
  for (const auto& k : array(field(j, "kids"))) kids.push_back(node_from(k));
  return internal(std::move(kids));
}

const char* kind_name(Atom::Kind k) {
  switch (k) {
    case Atom::Kind::Constant: return "constant";
    case Atom::Kind::Parameter: return "parameter";
    case Atom::Kind::Topological: return "topological";
  }
  return "";
}

Atom atom_from(const Json& j) {
  std::string k = str(field(j, "kind")), name = str(field(j, "name"));
  if (k == "constant") return constant(name);
  if (k == "parameter") return parameter(name);
  if (k == "topological") return topological(name);
  throw ParseError("unknown atom kind '" + k + "'");
}

}  // namespace

Json wrap(const std::string& kind, Json data) { return {{"kind", kind}, {"data", std::move(data)}}; }

const Json& unwrap(const Json& j, const std::string& kind) {
  std::string k = str(field(j, "kind"));
  if (k != kind) throw ParseError("expected kind '" + kind + "', got '" + k + "'");
  return field(j, "data");
}

Json to_json(const Tree& t) { return {{"root", t.root}, {"top", node_json(t.top)}}; }

Json to_json(const Forest& f) {
  Json out = Json::array();
  for (const auto& t : f) out.push_back(to_json(t));
  return out;
}

Json to_json(const Polygon& p) { return {{"sides", p.sides}}; }

Json to_json(const PolyWedge& w) {
  Json out = Json::array();
  for (const auto& p : w) out.push_back(to_json(p));
  return out;
}

Json to_json(const Cycle& c) {
  Json coords = Json::array();
  for (const auto& x : c.coords) {
    Json mono = Json::array();
    for (const auto& [a, e] : x.m) mono.push_back({{"atom", {{"kind", kind_name(a.kind)}, {"name", a.name}}}, {"exp", e}});
    coords.push_back({{"form", x.form == Coord::Form::OneMinus ? "one_minus" : "plain"}, {"monomial", mono}});
  }
  return {{"coords", coords}, {"chain", c.chain}};
}

Json to_json(const BarWord& w) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back(to_json(l));
  return out;
}

Json to_json(const ISymbol& s) { return {{"a0", s.a0}, {"mid", s.mid}, {"aend", s.aend}}; }

Json to_json(const IMono& m) {
  Json out = Json::array();
  for (const auto& s : m) out.push_back(to_json(s));
  return out;
}

Tree tree_from_json(const Json& j) {
  Tree t{str(field(j, "root")), node_from(field(j, "top"))};
  validate(t);
  return t;
}

Forest forest_from_json(const Json& j) {
  Forest f;
  for (const auto& t : array(j)) f.push_back(tree_from_json(t));
  return f;
}

Polygon polygon_from_json(const Json& j) {
  Polygon p{strings(field(j, "sides"))};
  validate(p);
  return p;
}

Cycle cycle_from_json(const Json& j) {
  Cycle c;
  for (const auto& x : array(field(j, "coords"))) {
    Coord k;
    std::string form = str(field(x, "form"));
    if (form == "one_minus")
      k.form = Coord::Form::OneMinus;
    else if (form == "plain")
      k.form = Coord::Form::Plain;
    else
      throw ParseError("unknown coordinate form '" + form + "'");
    for (const auto& f : array(field(x, "monomial"))) {
      const Json& e = field(f, "exp");
      if (!e.is_number_integer() || e.get<int>() == 0) throw ParseError("exponents are nonzero integers");
      k.m = mono_mul(k.m, {{atom_from(field(f, "atom")), e.get<int>()}});
    }
    c.coords.push_back(std::move(k));
  }
  c.chain = strings(field(j, "chain"));
  return c;
}

BarWord bar_word_from_json(const Json& j) {
  BarWord w;
  for (const auto& l : array(j)) {
    PolyWedge letter;
    for (const auto& p : array(l)) letter.push_back(polygon_from_json(p));
    if (letter.empty()) throw ParseError("empty bar letter");
    w.push_back(std::move(letter));
  }
  return w;
}

ISymbol isymbol_from_json(const Json& j) {
  ISymbol s{str(field(j, "a0")), strings(field(j, "mid")), str(field(j, "aend"))};
  // same atom rules as the text form
  return parse_isymbol(render(s));
}

}  // namespace polylog
