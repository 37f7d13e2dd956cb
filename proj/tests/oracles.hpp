#pragma once

// Brute-force references used only by the tests. None of these share code
// with the library.

#include <cmath>
#include <functional>
#include <random>

namespace oscfreq::testing {

// Composite Simpson on n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 200000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline double bisect(const std::function<double(double)>& g, double lo, double hi, int iters = 200) {
  double glo = g(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Fixed-step classical RK4 for x'' = accel(x) from (x0, 0); returns the
// period from the first downward zero crossing (odd accelerations),
// linearly interpolated. Only suitable for smooth forces.
inline double rk4_period(const std::function<double(double)>& accel, double x0, double dt) {
  double x = x0;
  double v = 0.0;
  double t = 0.0;
  for (long i = 0; i < 100000000; ++i) {
    const double k1x = v, k1v = accel(x);
    const double k2x = v + 0.5 * dt * k1v, k2v = accel(x + 0.5 * dt * k1x);
    const double k3x = v + 0.5 * dt * k2v, k3v = accel(x + 0.5 * dt * k2x);
    const double k4x = v + dt * k3v, k4v = accel(x + dt * k3x);
    const double xn = x + dt / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    const double vn = v + dt / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    if (x > 0.0 && xn <= 0.0) return 4.0 * (t + dt * x / (x - xn));
    x = xn;
    v = vn;
    t += dt;
  }
  return NAN;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace oscfreq::testing
