#pragma once
// Floating-point layer: multiple polylogarithm series, iterated integrals
// along straight real paths, and the integrals attached to topological
// chains.  Everything here is double precision with explicit error bounds.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylog/cycles.hpp"

namespace polylog {

struct NumericConfig {
  double tolerance = 1e-12;
  long max_series_terms = 2'000'000;
  int quadrature_depth = 20;  // bisection depth of the adaptive rule
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConvergent : NumericError {
  using NumericError::NumericError;
};
struct SingularPath : NumericError {
  using NumericError::NumericError;
};
struct UnsupportedChain : NumericError {
  using NumericError::NumericError;
};

struct Estimate {
  double value = 0;
  double error = 0;
};

// Li_{n1..nm}(z1..zm) = sum over 0<k1<...<km of z1^k1...zm^km / (k1^n1...km^nm).
// Needs |z_j z_{j+1} ... z_m| < 1 for every j; the error is a rigorous tail
// bound plus a rounding allowance.
Estimate li_series(const std::vector<int>& ns, const std::vector<double>& zs, const NumericConfig& cfg = {});

// I(x0; xs; x_end) along the segment from x0 to x_end, which must miss every xs[i].
Estimate iterint_numeric(double x0, const std::vector<double>& xs, double x_end, const NumericConfig& cfg = {});

// x_i = 1/(z_i...z_m), so that Li_{1..1}(z) = (-1)^m I(0; x; 1).
std::vector<double> multiple_log_points(const std::vector<double>& zs);

// Integral of prod ds_i/(s_i - x_i) over lo <= s1 <= ... <= sn <= hi, nested from
// the top variable down (the opposite order to iterint_numeric).
Estimate simplex_integral(const std::vector<double>& xs, double lo, double hi, const NumericConfig& cfg = {});

struct DiffLiResidual {
  double residual = 0;  // max over both partial derivatives
  double d1 = 0, d2 = 0;          // finite differences
  double rhs1 = 0, rhs2 = 0;      // right-hand side of the differential formula
};
DiffLiResidual check_diff_li(double x1, double x2, double h, const NumericConfig& cfg = {});

struct DoubleLogCheck {
  double integral = 0;               // topological term over 0 <= s1 <= s2 <= 1
  double iterint = 0;                // I(0; x1, x2; 1)
  std::optional<double> series;      // Li_{1,1}(x2/x1, 1/x2) when it converges
  double difference = 0;             // largest disagreement among the above
};
DoubleLogCheck double_log_cycle_check(double x1, double x2, const NumericConfig& cfg = {});

// The normalization (2 pi i)^{-n} stays symbolic: value * (2 pi i)^two_pi_i_power.
struct Realization {
  Estimate integral;
  int two_pi_i_power = 0;
};

// Chains with an algebraic parameter (a first-type internal vertex) realize to
// exactly 0.  Otherwise every coordinate must be 1 - s_i/x with x a constant;
// constants and chain ends are read from `assignment`, or as numerals.
Realization realize_bar_entry(const Cycle& chain, const std::map<std::string, double>& assignment,
                              const NumericConfig& cfg = {});
Realization realize_bar_entry(const CycleComb& chains, const std::map<std::string, double>& assignment,
                              const NumericConfig& cfg = {});

}  // namespace polylog
