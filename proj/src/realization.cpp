#include "polylog/realization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace polylog {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// log of t_s = C(s-1, m-1) rho^s at s = n + 1
double log_tail_term(long n, int m, double rho) {
  double lc = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(m)) -
              std::lgamma(static_cast<double>(n - m + 2));
  return lc + static_cast<double>(n + 1) * std::log(rho);
}

void check_real(double x, const char* what) {
  if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

struct Nested {
  const NumericConfig& cfg;

  // Integral of f over [a, b] at nesting level `inner` (0 = outermost).  Inner
  // levels run tighter so their rounding noise stays below the outer target.
  double integrate(const std::function<double(double)>& f, double a, double b, int inner, double* l1 = nullptr) {
    double err = 0, norm = 0;
    double tol = std::max(cfg.tolerance * std::pow(0.1, inner), 20 * kEps);
    // rescaled to [0, 1]: the rule's stopping test compares an unscaled error
    // with a scaled estimate, which never passes on short intervals
    double w = b - a;
    auto g = [&](double t) { return w * f(a + w * t); };
    double v = gauss_kronrod<double, 31>::integrate(g, 0.0, 1.0, static_cast<unsigned>(cfg.quadrature_depth), tol,
                                                     &err, &norm);
    if (l1) *l1 = norm;
    last_error = err;
    return v;
  }
  double last_error = 0;
};

}  // namespace

Estimate li_series(const std::vector<int>& ns, const std::vector<double>& zs, const NumericConfig& cfg) {
  if (ns.size() != zs.size()) throw std::invalid_argument("li_series: ns and zs differ in length");
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  int m = static_cast<int>(ns.size());
  if (m == 0) return {1, 0};
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("li_series: indices must be positive");
  double rho = 0, w = 1;
  for (int j = m - 1; j >= 0; --j) {
    check_real(zs[static_cast<std::size_t>(j)], "z");
    w *= std::abs(zs[static_cast<std::size_t>(j)]);
    rho = std::max(rho, w);
  }
  if (rho >= 1) throw NonConvergent("li_series: needs |z_j ... z_m| < 1 for every j");
  if (rho == 0) return {0, 0};

  // partial[i] = sum over k1 < ... < k_{i+1} <= k
  std::vector<double> partial(static_cast<std::size_t>(m), 0), power(static_cast<std::size_t>(m), 1);
  int last = ns.back();
  for (long k = 1; k <= cfg.max_series_terms; ++k) {
    for (int i = m - 1; i >= 0; --i) {
      auto u = static_cast<std::size_t>(i);
      power[u] *= zs[u];
      double below = i == 0 ? 1.0 : partial[u - 1];
      partial[u] += power[u] * below / std::pow(static_cast<double>(k), ns[u]);
    }
    if (k + 2 - m <= 0) continue;
    double q = rho * static_cast<double>(k + 1) / static_cast<double>(k + 2 - m);
    if (q >= 1) continue;
    double tail = std::exp(log_tail_term(k, m, rho) - last * std::log(static_cast<double>(k + 1))) / (1 - q);
    if (tail < cfg.tolerance) {
      double rounding = 4 * kEps * static_cast<double>(k) * std::max(1.0, std::abs(partial.back()));
      return {partial.back(), tail + rounding};
    }
  }
  throw NonConvergent("li_series: tail bound not met within max_series_terms");
}

Estimate iterint_numeric(double x0, const std::vector<double>& xs, double x_end, const NumericConfig& cfg) {
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  check_real(x0, "x0");
  check_real(x_end, "x_end");
  int m = static_cast<int>(xs.size());
  if (m == 0) return {1, 0};
  double len = x_end - x0;
  if (len == 0) return {0, 0};
  // pull back to u in [0, 1]: dt/(t - x) = du/(u - c)
  std::vector<double> c;
  for (double x : xs) {
    check_real(x, "x");
    double ci = (x - x0) / len;
    if (ci >= -kEps && ci <= 1 + kEps) throw SingularPath("the segment passes through a pole at " + std::to_string(x));
    c.push_back(ci);
  }
  Nested q{cfg};
  std::function<double(int, double)> level = [&](int k, double v) -> double {
    double ck = c[static_cast<std::size_t>(k)];
    if (k == 0) return std::log1p(-v / ck);
    return q.integrate([&](double u) { return level(k - 1, u) / (u - ck); }, 0, v, m - 1 - k);
  };
  if (m == 1) return {level(0, 1), 4 * kEps};
  double cm = c.back(), l1 = 0;
  double v = q.integrate([&](double u) { return level(m - 2, u) / (u - cm); }, 0, 1, 0, &l1);
  return {v, q.last_error + 0.2 * cfg.tolerance * std::max(l1, 1.0)};
}

std::vector<double> multiple_log_points(const std::vector<double>& zs) {
  std::vector<double> x(zs.size());
  double p = 1;
  for (std::size_t i = zs.size(); i-- > 0;) {
    p *= zs[i];
    if (p == 0) throw std::invalid_argument("multiple_log_points: z must be nonzero");
    x[i] = 1 / p;
  }
  return x;
}

Estimate simplex_integral(const std::vector<double>& xs, double lo, double hi, const NumericConfig& cfg) {
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!(lo <= hi)) throw std::invalid_argument("simplex_integral: needs lo <= hi");
  int n = static_cast<int>(xs.size());
  if (n == 0) return {1, 0};
  for (double x : xs) {
    check_real(x, "x");
    if (x >= lo && x <= hi) throw SingularPath("pole at " + std::to_string(x) + " inside the simplex");
  }
  Nested q{cfg};
  // top(k, v) integrates s_k..s_n over v <= s_k <= ... <= s_n <= hi
  std::function<double(int, double)> top = [&](int k, double v) -> double {
    double xk = xs[static_cast<std::size_t>(k)];
    if (k == n - 1) return std::log1p((hi - v) / (v - xk));
    return q.integrate([&](double s) { return top(k + 1, s) / (s - xk); }, v, hi, k);
  };
  if (n == 1) return {top(0, lo), 4 * kEps};
  double x0 = xs[0], l1 = 0;
  double v = q.integrate([&](double s) { return top(1, s) / (s - x0); }, lo, hi, 0, &l1);
  return {v, q.last_error + 0.2 * cfg.tolerance * std::max(l1, 1.0)};
}

namespace {

double i1(double x) {
  if (x >= 0 && x <= 1) throw SingularPath("I(0; x; 1) with x in [0, 1]");
  return std::log(std::abs(1 - 1 / x));
}

double di1(double y) { return 1 / (y * (y - 1)); }

}  // namespace

DiffLiResidual check_diff_li(double x1, double x2, double h, const NumericConfig& cfg) {
  if (x1 == x2) throw std::invalid_argument("check_diff_li: needs x1 != x2");
  if (!(h > 0)) throw std::invalid_argument("check_diff_li: needs h > 0");
  auto I11 = [&](double a, double b) { return iterint_numeric(0, {a, b}, 1, cfg).value; };
  DiffLiResidual r;
  r.d1 = (I11(x1 + h, x2) - I11(x1 - h, x2)) / (2 * h);
  r.d2 = (I11(x1, x2 + h) - I11(x1, x2 - h)) / (2 * h);
  double a = i1(x1), b = i1(x2);
  r.rhs1 = a * di1(x2 / x1) * x2 / (x1 * x1) + b * di1(x1 / x2) / x2;
  r.rhs2 = a * di1(x2) - a * di1(x2 / x1) / x1 - b * di1(x1 / x2) * x1 / (x2 * x2);
  r.residual = std::max(std::abs(r.d1 - r.rhs1), std::abs(r.d2 - r.rhs2));
  return r;
}

DoubleLogCheck double_log_cycle_check(double x1, double x2, const NumericConfig& cfg) {
  for (double x : {x1, x2})
    if (x >= 0 && x <= 1) throw SingularPath("pole at " + std::to_string(x) + " on the simplex");
  DoubleLogCheck out;
  out.integral = simplex_integral({x1, x2}, 0, 1, cfg).value;
  out.iterint = iterint_numeric(0, {x1, x2}, 1, cfg).value;
  out.difference = std::abs(out.integral - out.iterint);
  double z1 = x2 / x1, z2 = 1 / x2;
  if (std::abs(z2) < 1 && std::abs(z1 * z2) < 1) {
    try {
      out.series = li_series({1, 1}, {z1, z2}, cfg).value;
      out.difference = std::max({out.difference, std::abs(*out.series - out.integral), std::abs(*out.series - out.iterint)});
    } catch (const NonConvergent&) {
    }
  }
  return out;
}

namespace {

double value_of(const std::string& name, const std::map<std::string, double>& assignment) {
  if (auto it = assignment.find(name); it != assignment.end()) return it->second;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(name, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != name.size()) throw std::invalid_argument("no value assigned to '" + name + "'");
  return v;
}

}  // namespace

Realization realize_bar_entry(const Cycle& chain, const std::map<std::string, double>& assignment,
                              const NumericConfig& cfg) {
  if (chain.chain.size() < 2) throw UnsupportedChain("not a topological chain: " + render(chain));
  Realization r;
  int n = static_cast<int>(chain.coords.size());
  r.two_pi_i_power = -n;
  for (const auto& c : chain.coords)
    for (const auto& [a, e] : c.m)
      if (a.kind == Atom::Kind::Parameter) return r;  // first-type vertex: r = 0
  if (static_cast<int>(chain.chain.size()) != n + 2)
    throw UnsupportedChain("needs one coordinate per simplicial variable: " + render(chain));
  // coordinate 1 - s*K contributes ds/(s - 1/K)
  std::vector<double> xs(static_cast<std::size_t>(n));
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Coord& c = chain.coords[static_cast<std::size_t>(i)];
    if (c.form != Coord::Form::OneMinus) throw UnsupportedChain("plain coordinate in " + render(chain));
    int var = -1;
    double k = 1;
    for (const auto& [a, e] : c.m) {
      if (a.kind == Atom::Kind::Topological) {
        auto pos = std::find(chain.chain.begin() + 1, chain.chain.end() - 1, a.name);
        if (e != 1 || var != -1 || pos == chain.chain.end() - 1)
          throw UnsupportedChain("coordinate " + render(c) + " is not of the form 1 - s/x");
        var = static_cast<int>(pos - chain.chain.begin()) - 1;
      } else {
        k *= std::pow(value_of(a.name, assignment), e);
      }
    }
    if (var == -1 || slot[static_cast<std::size_t>(var)] != -1)
      throw UnsupportedChain("coordinate " + render(c) + " does not use its own simplicial variable");
    slot[static_cast<std::size_t>(var)] = i;
    xs[static_cast<std::size_t>(var)] = 1 / k;
  }
  // reorder coordinates to chain order
  int sign = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (slot[static_cast<std::size_t>(i)] > slot[static_cast<std::size_t>(j)]) sign = -sign;
  double lo = value_of(chain.chain.front(), assignment), hi = value_of(chain.chain.back(), assignment);
  if (!(lo <= hi)) throw UnsupportedChain("chain ends out of order in " + render(chain));
  r.integral = simplex_integral(xs, lo, hi, cfg);
  r.integral.value *= sign;
  return r;
}

Realization realize_bar_entry(const CycleComb& chains, const std::map<std::string, double>& assignment,
                              const NumericConfig& cfg) {
  Realization out;
  bool first = true;
  for (const auto& [c, k] : chains) {
    Realization r = realize_bar_entry(c, assignment, cfg);
    if (!first && r.two_pi_i_power != out.two_pi_i_power)
      throw UnsupportedChain("chains of different dimension in one combination");
    first = false;
    out.two_pi_i_power = r.two_pi_i_power;
    double w = k.get_d();
    out.integral.value += w * r.integral.value;
    out.integral.error += std::abs(w) * r.integral.error;
  }
  return out;
}

}  // namespace polylog
