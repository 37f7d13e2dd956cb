#pragma once

// Reference periods from two independent routes: quadrature of the energy
// integral and direct integration of u'' = -f(u).

#include <vector>

#include "oscfreq/model.hpp"
#include "oscfreq/numerics.hpp"

namespace oscfreq {

/// Period of an odd oscillator released from rest at u = A:
///   T = 4 * integral over psi in [0, pi/2] of A sin(psi) / sqrt(2 (V(A) - V(A cos psi))).
/// The substitution u = A cos(psi) removes the turning-point singularity.
/// Throws NonOscillatoryError when V(A) <= V(u) somewhere on [0, A).
double period_quadrature(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

struct MixedPeriod {
  double period;
  double plus_half_period;   // time spent in u > 0
  double minus_half_period;  // time spent in u < 0
  double negative_amplitude; // |u| at the negative turning point
};

/// Exact period of a mixed-parity oscillator released from rest at u = A > 0.
/// The motion in u < 0 follows the minus branch and turns at -B where
/// V_minus(B) = V_plus(A), so T = T_plus(A)/2 + T_minus(B)/2.
MixedPeriod exact_period_mixed_detailed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

double exact_period_mixed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

/// 2 pi over the quadrature period (odd specs) or the mixed-parity period.
double exact_frequency(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

struct OdeSample {
  double t;
  double u;
  double v;  // du/dt
};

enum class PeriodEvent {
  // Odd force: T = 4 * (first time u reaches 0).
  QuarterZeroCrossing,
  // Any force: T = time of the second du/dt = 0 event, which lies at u > 0.
  FullCycleTurningPoint,
};

struct OdeSolution {
  std::vector<OdeSample> samples;  // initial state plus every accepted step
  double period = 0.0;
  double event_residual = 0.0;     // |event function| at the refined event time
  int accepted_steps = 0;
  int rejected_steps = 0;
};

/// Dormand-Prince 5(4) integration of u'' = -force(u) from (A, 0) until the
/// period event. Events are located by bisecting the length of a single RK
/// step from the last accepted state down to 1e-12 in time. Throws
/// NoOscillationError past t_max = 50 * 2pi / omega_guess.
OdeSolution trace_period(const ScalarFn& force, double amplitude, PeriodEvent event, double omega_guess,
                         const ToleranceProfile& tol = {});

/// trace_period for a spec: quarter crossing for odd specs, full cycle for
/// mixed ones, omega_guess = sqrt(max(f(A)/A, |f'(0)|, tiny)).
OdeSolution trace_period(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

double period_ode(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

}  // namespace oscfreq
