#include "oscfreq/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oscfreq/errors.hpp"

namespace oscfreq {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kConfinementGrid = 256;

void check_amplitude(double amplitude) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw DomainError("amplitude must be finite and > 0");
}

void check_confined(const OscillatorSpec& spec, double amplitude) {
  if (!(eval_force(spec, amplitude) > 0.0)) {
    std::ostringstream os;
    os << "f(A) <= 0 at A=" << amplitude << ": no turning point at the release amplitude";
    throw NonOscillatoryError(os.str());
  }
  for (int i = 1; i <= kConfinementGrid; ++i) {
    const double psi = kHalfPi * i / kConfinementGrid;
    if (!(potential_drop(spec, amplitude, psi) > 0.0)) {
      std::ostringstream os;
      os << "V(A) <= V(u) at u=" << amplitude * std::cos(psi) << " for A=" << amplitude
         << ": the potential does not confine the motion";
      throw NonOscillatoryError(os.str());
    }
  }
}

}  // namespace

double period_quadrature(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  if (!spec.is_odd()) throw DomainError("period_quadrature requires an odd restoring force");
  check_amplitude(amplitude);
  check_confined(spec, amplitude);
  const double turning_limit = std::sqrt(amplitude / eval_force(spec, amplitude));

  auto integrand = [&](double psi) {
    const double drop = potential_drop(spec, amplitude, psi);
    if (!(drop > 0.0)) {
      if (psi == 0.0) return turning_limit;
      std::ostringstream os;
      os << "V(A) <= V(A cos psi) at psi=" << psi << " for A=" << amplitude;
      throw NonOscillatoryError(os.str());
    }
    return amplitude * std::sin(psi) / std::sqrt(2.0 * drop);
  };
  return 4.0 * integrate(integrand, 0.0, kHalfPi, tol);
}

MixedPeriod exact_period_mixed_detailed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  check_amplitude(amplitude);
  const BranchPair branches = decompose_branches(spec);
  const double energy = eval_potential(branches.plus, amplitude);

  auto excess = [&](double b) { return eval_potential(branches.minus, b) - energy; };
  double hi = amplitude;
  for (int i = 0; excess(hi) < 0.0; ++i) {
    if (i == 200) {
      throw NonOscillatoryError("minus-branch potential never reaches the release energy: no negative turning point");
    }
    hi *= 2.0;
  }
  const double b = find_root(excess, 0.0, hi, tol);

  MixedPeriod out{};
  out.plus_half_period = 0.5 * period_quadrature(branches.plus, amplitude, tol);
  out.minus_half_period = 0.5 * period_quadrature(branches.minus, b, tol);
  out.period = out.plus_half_period + out.minus_half_period;
  out.negative_amplitude = b;
  return out;
}

double exact_period_mixed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  return exact_period_mixed_detailed(spec, amplitude, tol).period;
}

double exact_frequency(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  const double period =
      spec.is_odd() ? period_quadrature(spec, amplitude, tol) : exact_period_mixed(spec, amplitude, tol);
  return kTwoPi / period;
}

// ---------------------------------------------------------------------------
// ODE oracle

namespace {

using State = std::array<double, 2>;  // (u, v)

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
  State y;
  State err;
};

class Stepper {
 public:
  explicit Stepper(const ScalarFn& force) : force_(force) {}

  State rhs(const State& y) const { return {y[1], -force_(y[0])}; }

  StepResult step(const State& y, double h) const {
    const State k1 = rhs(y);
    const State k2 = rhs(combine(y, h, {{a21, k1}}));
    const State k3 = rhs(combine(y, h, {{a31, k1}, {a32, k2}}));
    const State k4 = rhs(combine(y, h, {{a41, k1}, {a42, k2}, {a43, k3}}));
    const State k5 = rhs(combine(y, h, {{a51, k1}, {a52, k2}, {a53, k3}, {a54, k4}}));
    const State k6 = rhs(combine(y, h, {{a61, k1}, {a62, k2}, {a63, k3}, {a64, k4}, {a65, k5}}));
    const State y_new = combine(y, h, {{b1, k1}, {b3, k3}, {b4, k4}, {b5, k5}, {b6, k6}});
    const State k7 = rhs(y_new);
    State err{};
    for (std::size_t i = 0; i < 2; ++i) {
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    }
    return {y_new, err};
  }

 private:
  struct Term {
    double coeff;
    const State& k;
  };

  static State combine(const State& y, double h, std::initializer_list<Term> terms) {
    State out = y;
    for (const Term& t : terms) {
      out[0] += h * t.coeff * t.k[0];
      out[1] += h * t.coeff * t.k[1];
    }
    return out;
  }

  const ScalarFn& force_;
};

constexpr double kEventTimeTol = 1e-12;
constexpr long kMaxSteps = 2'000'000;

}  // namespace

OdeSolution trace_period(const ScalarFn& force, double amplitude, PeriodEvent event, double omega_guess,
                         const ToleranceProfile& tol) {
  tol.validate();
  check_amplitude(amplitude);
  if (!(omega_guess > 0.0)) throw DomainError("omega_guess must be > 0");

  const Stepper stepper(force);
  const double guess_period = kTwoPi / omega_guess;
  const double t_max = 50.0 * guess_period;
  // Local error target sits below the requested tolerance so the global
  // error over a period stays within it.
  const double rtol = 0.1 * tol.ode_rel_tol;
  const std::array<double, 2> atol = {rtol * 1e-3 * amplitude, rtol * 1e-3 * amplitude * omega_guess};
  const double h_max = guess_period / 16.0;

  auto event_value = [event](const State& y) { return event == PeriodEvent::QuarterZeroCrossing ? y[0] : y[1]; };

  OdeSolution sol;
  State y = {amplitude, 0.0};
  double t = 0.0;
  double h = std::min(h_max, 1e-3 * guess_period);
  int turning_points = 0;
  sol.samples.push_back({t, y[0], y[1]});

  while (t < t_max) {
    if (sol.accepted_steps + sol.rejected_steps > kMaxSteps) break;
    const StepResult trial = stepper.step(y, h);
    double norm = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double sc = atol[i] + rtol * std::max(std::abs(y[i]), std::abs(trial.y[i]));
      norm += (trial.err[i] / sc) * (trial.err[i] / sc);
    }
    norm = std::sqrt(0.5 * norm);
    if (!std::isfinite(norm)) {
      ++sol.rejected_steps;
      h *= 0.2;
      continue;
    }
    const double factor = std::clamp(0.9 * std::pow(std::max(norm, 1e-16), -0.2), 0.2, 5.0);
    if (norm > 1.0) {
      ++sol.rejected_steps;
      h *= std::min(1.0, factor);
      if (t + h == t) throw NoOscillationError("ODE step size underflow");
      continue;
    }

    const double g_old = event_value(y);
    const double g_new = event_value(trial.y);
    bool fired = false;
    if (event == PeriodEvent::QuarterZeroCrossing) {
      fired = g_old > 0.0 && g_new <= 0.0;
    } else if (g_old < 0.0 && g_new >= 0.0) {
      ++turning_points;  // negative turning point; keep going
    } else if (g_old > 0.0 && g_new <= 0.0 && turning_points >= 1 && trial.y[0] > 0.0) {
      fired = true;
    }

    if (fired) {
      // Bisect the step length: the event function at s comes from a single
      // RK step of size s taken from the accepted state (t, y).
      double lo = 0.0;
      double hi = h;
      double g_lo = g_old;
      State y_hi = trial.y;
      while (hi - lo > kEventTimeTol) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const State y_mid = stepper.step(y, mid).y;
        const double g_mid = event_value(y_mid);
        if ((g_mid > 0.0) == (g_lo > 0.0) && g_mid != 0.0) {
          lo = mid;
          g_lo = g_mid;
        } else {
          hi = mid;
          y_hi = y_mid;
        }
      }
      const double t_event = t + 0.5 * (lo + hi);
      sol.event_residual = std::abs(event_value(stepper.step(y, 0.5 * (lo + hi)).y));
      sol.samples.push_back({t + hi, y_hi[0], y_hi[1]});
      ++sol.accepted_steps;
      sol.period = event == PeriodEvent::QuarterZeroCrossing ? 4.0 * t_event : t_event;
      return sol;
    }

    t += h;
    y = trial.y;
    ++sol.accepted_steps;
    sol.samples.push_back({t, y[0], y[1]});
    h = std::min(h * factor, h_max);
  }

  std::ostringstream os;
  os << "no period event before t_max=" << t_max << " (A=" << amplitude << ")";
  throw NoOscillationError(os.str());
}

namespace {

// Slope of f at the origin from the terms linear in u; fractional powers
// (p < 1) have unbounded slope there and are skipped.
double linear_slope(const OscillatorSpec& spec) {
  double slope = 0.0;
  for (const auto& term : spec.terms()) {
    const auto& v = term.value();
    if (const auto* odd = std::get_if<OddPower>(&v); odd && odd->exponent == 1.0) slope += odd->coeff;
    if (const auto* wire = std::get_if<StretchedWire>(&v)) slope -= wire->lambda;
  }
  return slope;
}

}  // namespace

OdeSolution trace_period(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  check_amplitude(amplitude);
  const double secant = eval_force(spec, amplitude) / amplitude;
  const double omega_guess = std::sqrt(std::max({secant, std::abs(linear_slope(spec)), 1e-300}));
  const PeriodEvent event = spec.is_odd() ? PeriodEvent::QuarterZeroCrossing : PeriodEvent::FullCycleTurningPoint;
  return trace_period([&spec](double u) { return eval_force(spec, u); }, amplitude, event, omega_guess, tol);
}

double period_ode(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  return trace_period(spec, amplitude, tol).period;
}

}  // namespace oscfreq
