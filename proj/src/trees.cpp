#include "polylog/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace polylog {

int compare(const Node& a, const Node& b) {
  if (int c = a.deco.compare(b.deco)) return c < 0 ? -1 : 1;
  if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (int c = compare(a.kids[i], b.kids[i])) return c;
  return 0;
}

int compare(const Tree& a, const Tree& b) {
  if (int c = a.root.compare(b.root)) return c < 0 ? -1 : 1;
  return compare(a.top, b.top);
}

Tree make_tree(std::string root, Node top) { return Tree{std::move(root), std::move(top)}; }
Node leaf(std::string deco) { return Node{std::move(deco), {}}; }
Node internal(std::vector<Node> kids) { return Node{"", std::move(kids)}; }
Tree edge_tree(const std::string& root, const std::string& leaf_deco) { return Tree{root, leaf(leaf_deco)}; }

int edge_count(const Node& n) {
  int e = 1;
  for (const auto& k : n.kids) e += edge_count(k);
  return e;
}
int edge_count(const Tree& t) { return edge_count(t.top); }
int edge_count(const Forest& f) {
  int e = 0;
  for (const auto& t : f) e += edge_count(t);
  return e;
}

static int leaves(const Node& n) {
  if (n.external()) return 1;
  int s = 0;
  for (const auto& k : n.kids) s += leaves(k);
  return s;
}
int leaf_count(const Tree& t) { return leaves(t.top); }

ForestBigrading bigrading(const Tree& t) { return {edge_count(t), leaf_count(t)}; }
ForestBigrading bigrading(const Forest& f) {
  ForestBigrading g;
  for (const auto& t : f) {
    g.n += edge_count(t);
    g.p += leaf_count(t);
  }
  return g;
}

FlatTree flatten(const Tree& t) {
  FlatTree f;
  f.deco.push_back(t.root);
  f.parent.push_back(-1);
  f.kids.emplace_back();
  std::function<void(const Node&, int)> go = [&](const Node& n, int parent) {
    int id = static_cast<int>(f.deco.size());
    f.deco.push_back(n.deco);
    f.parent.push_back(parent);
    f.kids.emplace_back();
    f.kids[parent].push_back(id);
    for (const auto& k : n.kids) go(k, id);
  };
  go(t.top, 0);
  return f;
}

std::vector<Edge> canonical_edge_order(const Tree& t) {
  FlatTree f = flatten(t);
  std::vector<Edge> out;
  for (std::size_t v = 1; v < f.deco.size(); ++v) out.push_back({f.parent[v], static_cast<int>(v)});
  return out;
}

static int canon_node(Node& n) {
  int sign = 1;
  for (auto& k : n.kids) {
    sign *= canon_node(k);
    if (sign == 0) return 0;
  }
  std::vector<int> size(n.kids.size());
  for (std::size_t i = 0; i < n.kids.size(); ++i) size[i] = edge_count(n.kids[i]);
  for (std::size_t i = 1; i < n.kids.size(); ++i) {
    for (std::size_t j = i; j > 0 && n.kids[j] < n.kids[j - 1]; --j) {
      if ((size[j] & 1) && (size[j - 1] & 1)) sign = -sign;
      std::swap(n.kids[j], n.kids[j - 1]);
      std::swap(size[j], size[j - 1]);
    }
  }
  for (std::size_t i = 1; i < n.kids.size(); ++i)
    if ((size[i] & 1) && n.kids[i] == n.kids[i - 1]) return 0;
  return sign;
}

int canonicalize(Tree& t) { return canon_node(t.top); }

static void validate_node(const Node& n, int& marked) {
  if (n.external()) {
    if (n.deco.empty()) throw ParseError("leaf without decoration");
    if (is_second_type(n.deco)) {
      if (n.deco.size() == 1) throw ParseError("empty second-type decoration");
      ++marked;
    }
    return;
  }
  if (!n.deco.empty()) throw ParseError("internal vertex carries a decoration: " + n.deco);
  if (n.kids.size() < 2) throw ParseError("internal vertex of valency < 3");
  for (const auto& k : n.kids) validate_node(k, marked);
}

void validate(const Tree& t) {
  if (t.root.empty() || is_undecorated(t.root) || is_second_type(t.root))
    throw ParseError("root must carry a plain decoration");
  int marked = 0;
  validate_node(t.top, marked);
  if (marked > 1) throw ParseError("more than one second-type leaf");
}

static bool has_marked(const Node& n) {
  if (n.external()) return is_second_type(n.deco);
  for (const auto& k : n.kids)
    if (has_marked(k)) return true;
  return false;
}
bool is_enhanced(const Tree& t) { return has_marked(t.top); }

bool is_generic(const Tree& t) {
  std::set<std::string> seen{strip_marker(t.root)};
  bool ok = true;
  std::function<void(const Node&)> go = [&](const Node& n) {
    if (n.external()) {
      if (!is_undecorated(n.deco) && !seen.insert(strip_marker(n.deco)).second) ok = false;
      return;
    }
    for (const auto& k : n.kids) go(k);
  };
  go(t.top);
  return ok;
}

std::pair<Forest, int> normalize_forest(std::vector<Tree> trees) {
  int sign = 1;
  for (auto& t : trees) {
    sign *= canonicalize(t);
    if (sign == 0) return {{}, 0};
  }
  auto [f, s] = wedge_normalize(std::move(trees), [](const Tree& t) { return edge_count(t); });
  return {std::move(f), sign * s};
}

ForestComb forest_term(std::vector<Tree> trees, const Scalar& c) {
  auto [f, s] = normalize_forest(std::move(trees));
  ForestComb out;
  if (s != 0) out.add(std::move(f), c * s);
  return out;
}

namespace {

struct INode {
  std::string deco;
  int id;  // position of the incoming edge in the canonical order
  std::vector<INode> kids;
};

struct ITree {
  std::string root;
  INode top;
};

INode index_node(const Node& n, int& next) {
  INode r{n.deco, next++, {}};
  for (const auto& k : n.kids) r.kids.push_back(index_node(k, next));
  return r;
}

Node strip_ids(const INode& n) {
  Node r{n.deco, {}};
  for (const auto& k : n.kids) r.kids.push_back(strip_ids(k));
  return r;
}

void preorder_ids(const INode& n, std::vector<int>& out) {
  out.push_back(n.id);
  for (const auto& k : n.kids) preorder_ids(k, out);
}

// Parent of the vertex whose incoming edge has id k, and the child slot.
INode* find_parent(INode& n, int k, std::size_t& slot) {
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    if (n.kids[i].id == k) {
      slot = i;
      return &n;
    }
    if (INode* p = find_parent(n.kids[i], k, slot)) return p;
  }
  return nullptr;
}

int permutation_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

}  // namespace

ForestComb contract_edge(const Tree& t, int k) {
  int next = 0;
  ITree it{t.root, index_node(t.top, next)};
  if (k < 0 || k >= next) throw std::out_of_range("edge index out of range");
  std::vector<ITree> parts;
  if (k == 0) {
    for (auto& g : it.top.kids) parts.push_back({t.root, std::move(g)});
  } else {
    std::size_t slot = 0;
    INode* p = find_parent(it.top, k, slot);
    INode c = std::move(p->kids[slot]);
    if (!c.kids.empty()) {
      auto pos = p->kids.erase(p->kids.begin() + static_cast<std::ptrdiff_t>(slot));
      p->kids.insert(pos, std::make_move_iterator(c.kids.begin()), std::make_move_iterator(c.kids.end()));
      parts.push_back(std::move(it));
    } else {
      std::vector<INode> others;
      for (std::size_t i = 0; i < p->kids.size(); ++i)
        if (i != slot) others.push_back(std::move(p->kids[i]));
      p->kids.clear();
      p->deco = c.deco;
      parts.push_back(std::move(it));
      for (auto& g : others) parts.push_back({strip_marker(c.deco), std::move(g)});
    }
  }
  std::vector<int> seq;
  std::vector<Tree> trees;
  for (const auto& pt : parts) {
    preorder_ids(pt.top, seq);
    trees.push_back(Tree{pt.root, strip_ids(pt.top)});
  }
  int sign = permutation_sign(seq) * ((k & 1) ? -1 : 1);
  return forest_term(std::move(trees), Scalar(sign));
}

ForestComb tree_differential(const Tree& t) {
  ForestComb out;
  int e = edge_count(t);
  if (e <= 1) return out;
  for (int k = 0; k < e; ++k) out += contract_edge(t, k);
  return out;
}

ForestComb tree_differential(const Forest& f) {
  ForestComb out;
  int before = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ForestComb d = tree_differential(f[i]);
    for (const auto& [g, c] : d) {
      std::vector<Tree> trees(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i));
      trees.insert(trees.end(), g.begin(), g.end());
      trees.insert(trees.end(), f.begin() + static_cast<std::ptrdiff_t>(i) + 1, f.end());
      out += forest_term(std::move(trees), (before & 1) ? Scalar(-c) : c);
    }
    before += edge_count(f[i]);
  }
  return out;
}

ForestComb tree_differential(const ForestComb& f) {
  return f.apply([](const Forest& g) { return tree_differential(g); });
}

ForestComb star(const Forest& a, const Forest& b) {
  std::vector<Tree> trees = a;
  trees.insert(trees.end(), b.begin(), b.end());
  return forest_term(std::move(trees));
}

ForestComb star(const ForestComb& a, const ForestComb& b) {
  return bilinear(a, b, [](const Forest& x, const Forest& y) { return star(x, y); });
}

std::string render(const Node& n) {
  if (n.external()) return "(" + n.deco + ")";
  std::string s = "(";
  for (const auto& k : n.kids) s += render(k);
  return s + ")";
}

std::string render(const Tree& t) { return "(" + t.root + " " + render(t.top) + ")"; }

std::string render(const Forest& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " * ";
    s += render(f[i]);
  }
  return s;
}

std::string render(const ForestComb& f) {
  return render_lincomb(f, [](const Forest& g) { return render(g); });
}

std::string render_latex(const Forest& f) {
  if (f.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " \\star ";
    s += "\\mathtt{" + render(f[i]) + "}";
  }
  return s;
}

namespace {

struct TreeParser {
  const std::string& s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree parse error at offset " + std::to_string(i) + ": " + what);
  }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  std::string atom() {
    ws();
    std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' && s[i] != ')') ++i;
    return s.substr(b, i - b);
  }
  Node node() {
    expect('(');
    Node n{atom(), {}};
    ws();
    while (i < s.size() && s[i] == '(') {
      n.kids.push_back(node());
      ws();
    }
    expect(')');
    return n;
  }
};

}  // namespace

Tree parse_tree(const std::string& s) {
  TreeParser p{s};
  p.expect('(');
  std::string root = p.atom();
  if (root.empty()) p.fail("missing root decoration");
  Node top = p.node();
  p.expect(')');
  p.ws();
  if (p.i != s.size()) p.fail("trailing input");
  Tree t{root, std::move(top)};
  validate(t);
  return t;
}

static std::vector<Node> subtrees(int e) {
  std::vector<Node> out;
  if (e == 1) {
    out.push_back(leaf(""));
  } else {
    // compositions of e-1 into at least two parts
    std::vector<int> parts;
    std::function<void(int)> comp = [&](int rest) {
      if (rest == 0) {
        if (parts.size() < 2) return;
        std::vector<Node> kids(parts.size());
        std::function<void(std::size_t)> prod = [&](std::size_t j) {
          if (j == parts.size()) {
            out.push_back(internal(kids));
            return;
          }
          for (auto& sub : subtrees(parts[j])) {
            kids[j] = sub;
            prod(j + 1);
          }
        };
        prod(0);
        return;
      }
      for (int p = 1; p <= rest; ++p) {
        parts.push_back(p);
        comp(rest - p);
        parts.pop_back();
      }
    };
    comp(e - 1);
  }
  return out;
}

std::vector<Tree> tree_shapes(int n) {
  std::vector<Tree> out;
  if (n < 1) return out;
  for (const auto& s : subtrees(n)) out.push_back(Tree{"", s});
  return out;
}

int external_count(const Tree& t) { return 1 + leaf_count(t); }

Tree decorate(const Tree& shape, const std::vector<std::string>& decos) {
  if (static_cast<int>(decos.size()) != external_count(shape)) throw std::invalid_argument("decoration count");
  Tree t = shape;
  t.root = decos[0];
  std::size_t next = 1;
  std::function<void(Node&)> go = [&](Node& n) {
    if (n.external()) {
      n.deco = decos[next++];
      return;
    }
    for (auto& k : n.kids) go(k);
  };
  go(t.top);
  return t;
}

}  // namespace polylog
