#pragma once
// Exact scalars, formal linear combinations, graded wedge words and shuffles.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace polylog {

using Scalar = mpq_class;

std::string scalar_str(const Scalar& c);
Scalar parse_scalar(const std::string& s);  // "p", "-p", "p/q"; throws std::invalid_argument

inline Scalar rational(long n, long d) {
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

// Finite map basis -> nonzero coefficient.  Zero coefficients are never stored,
// so two combinations are equal iff their maps are equal.
template <class B>
class LinComb {
 public:
  using Map = std::map<B, Scalar>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(const B& b, const Scalar& c = Scalar(1)) { add(b, c); }

  void add(const B& b, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(B&& b, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(b), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add_scaled(const LinComb& o, const Scalar& c) {
    if (c == 0) return;
    for (const auto& [b, x] : o.terms_) add(b, x * c);
  }

  Scalar coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    add_scaled(o, Scalar(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add_scaled(o, Scalar(-1));
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  // Linear extension of f: B -> LinComb<C>.
  template <class F>
  auto apply(F f) const -> decltype(f(std::declval<const B&>())) {
    decltype(f(std::declval<const B&>())) out;
    for (const auto& [b, c] : terms_) out.add_scaled(f(b), c);
    return out;
  }

 private:
  Map terms_;
};

// a + c*b
template <class B>
LinComb<B> lincomb_combine(const LinComb<B>& a, const LinComb<B>& b, const Scalar& c) {
  LinComb<B> r = a;
  r.add_scaled(b, c);
  return r;
}

// Bilinear extension of a product on basis elements.
template <class A, class B, class F>
auto bilinear(const LinComb<A>& x, const LinComb<B>& y, F f)
    -> decltype(f(std::declval<const A&>(), std::declval<const B&>())) {
  decltype(f(std::declval<const A&>(), std::declval<const B&>())) out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(f(a, b), ca * cb);
  return out;
}

// Sorts the factors into ascending order, multiplying the sign by (-1)^{pq}
// for every transposition of adjacent factors of degrees p and q.  Returns
// sign 0 when an odd factor appears twice.
template <class B, class Deg>
std::pair<std::vector<B>, int> wedge_normalize(std::vector<B> f, Deg deg) {
  int sign = 1;
  std::vector<int> d(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) d[i] = deg(f[i]);
  for (std::size_t i = 1; i < f.size(); ++i) {
    for (std::size_t j = i; j > 0 && f[j] < f[j - 1]; --j) {
      if ((d[j] & 1) && (d[j - 1] & 1)) sign = -sign;
      std::swap(f[j], f[j - 1]);
      std::swap(d[j], d[j - 1]);
    }
  }
  for (std::size_t i = 1; i < f.size(); ++i)
    if ((d[i] & 1) && !(f[i - 1] < f[i]) && !(f[i] < f[i - 1])) return {std::move(f), 0};
  return {std::move(f), sign};
}

// Words in a tensor algebra; order is significant.
template <class B>
using TensorWord = std::vector<B>;

namespace detail {
template <class B>
void shuffle_rec(const std::vector<B>& u, std::size_t i, const std::vector<B>& v, std::size_t j,
                 std::vector<B>& cur, LinComb<std::vector<B>>& out) {
  if (i == u.size() && j == v.size()) {
    out.add(cur, Scalar(1));
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

template <class B>
LinComb<std::vector<B>> shuffle(const std::vector<B>& u, const std::vector<B>& v) {
  LinComb<std::vector<B>> out;
  std::vector<B> cur;
  cur.reserve(u.size() + v.size());
  detail::shuffle_rec(u, 0, v, 0, cur, out);
  return out;
}

template <class B>
LinComb<std::vector<B>> shuffle(const LinComb<std::vector<B>>& a, const LinComb<std::vector<B>>& b) {
  return bilinear(a, b, [](const std::vector<B>& u, const std::vector<B>& v) { return shuffle(u, v); });
}

// All restricted growth strings of length n: one representative for every
// equality pattern among n labels.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= top + 1; ++b) {
      cur.push_back(b);
      go(std::max(top, b));
      cur.pop_back();
    }
  };
  go(-1);
  return out;
}

// Text rendering of a combination; a basis element rendering as the empty
// string is printed as "1".
template <class B, class R>
std::string render_lincomb(const LinComb<B>& lc, R render) {
  if (lc.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : lc) {
    Scalar a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string body = render(b);
    if (a != 1) {
      os << scalar_str(a);
      if (!body.empty()) os << "*";
    }
    if (body.empty() && a == 1) body = "1";
    os << body;
    first = false;
  }
  return os.str();
}

}  // namespace polylog
