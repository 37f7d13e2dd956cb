#pragma once

#include <functional>

namespace oscfreq {

/// Tolerances shared by quadrature, root-finding and ODE integration.
struct ToleranceProfile {
  double quad_rel_tol = 1e-10;
  double root_tol = 1e-12;
  double ode_rel_tol = 1e-10;
  int max_subdivisions = 2000;

  // Throws DomainError unless every tolerance is > 0 and max_subdivisions >= 1.
  void validate() const;
};

using ScalarFn = std::function<double(double)>;

struct QuadratureResult {
  double value;
  double error_estimate;
  int panels;
};

/// Global adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. The panel with
/// the largest error estimate is bisected until the summed estimate drops to
/// quad_rel_tol * |I| (or a tiny absolute floor). The rule never samples the
/// endpoints. Throws QuadratureError, carrying the best estimate, if
/// max_subdivisions is exhausted first.
QuadratureResult integrate_detailed(const ScalarFn& f, double a, double b, const ToleranceProfile& tol = {});

double integrate(const ScalarFn& f, double a, double b, const ToleranceProfile& tol = {});

struct RootResult {
  double root;
  double bracket_width;
  int iterations;
};

/// Brent's method on a sign-changing bracket. Stops when the bracket is no
/// wider than root_tol * max(1, |root|) or an exact zero is hit. Throws
/// BracketError when g(lo) and g(hi) have the same strict sign.
RootResult find_root_detailed(const ScalarFn& g, double lo, double hi, const ToleranceProfile& tol = {});

double find_root(const ScalarFn& g, double lo, double hi, const ToleranceProfile& tol = {});

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine coefficients).
double ln_gamma(double x);

/// Integral of cos(theta)^a over [0, pi/2], a > -1, in closed form:
/// (sqrt(pi)/2) Gamma((a+1)/2) / Gamma(a/2 + 1).
double cos_power_integral(double a);

}  // namespace oscfreq
