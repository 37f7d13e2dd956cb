#pragma once

// Improved amplitude-frequency formulation: two cosine trials collocated at
// cos(w1 t) = cos(w2 t) = k, with k fixed by a quarter-period Galerkin
// condition on the first harmonic.

#include <optional>
#include <string>
#include <vector>

#include "oscfreq/model.hpp"
#include "oscfreq/numerics.hpp"

namespace oscfreq {

struct TrialPair {
  double omega1 = 1.0;
  double omega2 = 2.0;

  void validate() const;
};

struct FrequencyEstimate {
  double omega = 0.0;
  std::optional<double> k;
  std::string method;
  std::optional<double> galerkin_residual;
  int iterations = 0;
  std::vector<std::string> diagnostics;
};

struct PeriodEstimate {
  double period = 0.0;
  std::optional<double> plus_branch_period;
  std::optional<double> minus_branch_period;
  std::string method;
};

/// Trial residual at the collocation point: -omega^2 A k + f(A k).
double residual(const OscillatorSpec& spec, double amplitude, double k, double omega);

/// (w1^2 R2 - w2^2 R1) / (R2 - R1). Collocating both trials at the same k
/// makes this f(Ak)/(Ak) for any trial pair; the residual form is kept as the
/// computational route. Throws DegenerateTrialsError on a zero denominator.
double omega_sq_of_k(const OscillatorSpec& spec, double amplitude, double k, const TrialPair& trials = {});

/// Integral of f(A cos theta) cos theta over [0, pi/2].
double first_harmonic_integral(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

/// G(k) = omega^2(k) A pi/4 - first_harmonic_integral, the quarter-period
/// Galerkin condition after u = A cos(theta).
double galerkin_mismatch(const OscillatorSpec& spec, double amplitude, double k, const ToleranceProfile& tol = {});

struct GalerkinRoot {
  double k;
  double mismatch;      // G at k
  int iterations;       // root-finder iterations
  int sign_changes;     // on the 64-point scan
  std::vector<std::string> diagnostics;
};

/// Root of G in (0,1): scan 64 points on [1e-3, 1 - 1e-9], then Brent on the
/// bracket with the largest k. Odd specs only.
GalerkinRoot solve_k_detailed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

double solve_k(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

/// IAFF frequency with Galerkin k. For a linear force (G identically zero)
/// returns sqrt(f(A)/A) with k absent.
FrequencyEstimate frequency(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

/// Frequency at a fixed collocation value: k = 1 is the t = 0 location,
/// k = 1/2 the omega t = pi/3 location.
FrequencyEstimate frequency_fixed_k(const OscillatorSpec& spec, double amplitude, double k);

/// Per-branch IAFF periods T1 = 2pi/w+, T2 = 2pi/w- and T = (T1 + T2)/2.
/// Odd specs are accepted and give T1 = T2.
PeriodEstimate period_mixed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

}  // namespace oscfreq
