#include "oscfreq/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "oscfreq/errors.hpp"

namespace oscfreq {

void ToleranceProfile::validate() const {
  if (!(quad_rel_tol > 0.0) || !(root_tol > 0.0) || !(ode_rel_tol > 0.0)) {
    throw DomainError("tolerances must be > 0");
  }
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [0,1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double abs_value;  // integral of |f|, for the round-off floor
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel gauss_kronrod_15(const ScalarFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_center = f(center);
  double kronrod = f_center * kWgk[7];
  double gauss = f_center * kWg[3];
  double abs_sum = std::abs(kronrod);

  std::array<double, 7> f_left{};
  std::array<double, 7> f_right{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fl = f(center - dx);
    const double fr = f(center + dx);
    f_left[j] = fl;
    f_right[j] = fr;
    kronrod += kWgk[j] * (fl + fr);
    abs_sum += kWgk[j] * (std::abs(fl) + std::abs(fr));
    if (j % 2 == 1) gauss += kWg[j / 2] * (fl + fr);
  }

  // Spread of f about its mean, used by the QUADPACK error heuristic.
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(f_center - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));
  }

  const double value = kronrod * half;
  const double abs_value = abs_sum * std::abs(half);
  const double res_asc = asc * std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (res_asc != 0.0 && error != 0.0) {
    error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
  }
  if (abs_value > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * abs_value, error);
  }
  return {a, b, value, error, abs_value};
}

}  // namespace

QuadratureResult integrate_detailed(const ScalarFn& f, double a, double b, const ToleranceProfile& tol) {
  tol.validate();
  if (!(a < b)) throw DomainError("integrate requires a < b");

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  Panel first = gauss_kronrod_15(f, a, b);
  double total = first.value;
  double total_err = first.error;
  double total_abs = first.abs_value;
  heap.push(first);

  auto converged = [&] {
    const double target = std::max(tol.quad_rel_tol * std::abs(total), 50.0 * kEps * total_abs);
    return total_err <= target;
  };

  int panels = 1;
  while (!converged()) {
    if (!std::isfinite(total)) {
      throw QuadratureError("integrand produced a non-finite value", total, total_err);
    }
    if (panels >= tol.max_subdivisions) {
      std::ostringstream os;
      os << "quadrature did not converge within " << tol.max_subdivisions << " subdivisions (estimate " << total
         << ", error " << total_err << ")";
      throw QuadratureError(os.str(), total, total_err);
    }
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("quadrature panel reached machine resolution", total, total_err);
    }
    heap.pop();
    Panel left = gauss_kronrod_15(f, worst.a, mid);
    Panel right = gauss_kronrod_15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  // Re-sum from the panels to shed the drift of the running updates.
  double value = 0.0;
  double error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, panels};
}

double integrate(const ScalarFn& f, double a, double b, const ToleranceProfile& tol) {
  return integrate_detailed(f, a, b, tol).value;
}

// ---------------------------------------------------------------------------
// Root finding

RootResult find_root_detailed(const ScalarFn& g, double lo, double hi, const ToleranceProfile& tol) {
  tol.validate();
  double a = lo;
  double b = hi;
  double fa = g(a);
  double fb = g(b);
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if ((fa > 0.0) == (fb > 0.0)) {
    std::ostringstream os;
    os << "no sign change on [" << lo << ", " << hi << "]: g(lo)=" << fa << ", g(hi)=" << fb;
    throw BracketError(os.str());
  }

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  constexpr int kMaxIter = 500;
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    // Half of the admissible final bracket width.
    const double tol1 = std::max(2.0 * kEps * std::abs(b), 0.5 * tol.root_tol * std::max(1.0, std::abs(b)));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return {b, fb == 0.0 ? 0.0 : std::abs(c - b), iter};
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, or secant when only two points differ.
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = g(b);
  }
  return {b, std::abs(c - b), kMaxIter};
}

double find_root(const ScalarFn& g, double lo, double hi, const ToleranceProfile& tol) {
  return find_root_detailed(g, lo, hi, tol).root;
}

// ---------------------------------------------------------------------------
// Special functions

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma requires x > 0");
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - ln_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczosCoeff[0];
  for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) series += kLanczosCoeff[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

double cos_power_integral(double a) {
  if (!(a > -1.0)) throw DomainError("cos_power_integral requires a > -1");
  return 0.5 * std::sqrt(std::numbers::pi) * std::exp(ln_gamma(0.5 * (a + 1.0)) - ln_gamma(0.5 * a + 1.0));
}

}  // namespace oscfreq
