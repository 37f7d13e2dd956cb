#pragma once

#include "oscfreq/iaff.hpp"
#include "oscfreq/model.hpp"
#include "oscfreq/numerics.hpp"

namespace oscfreq {

/// First-order harmonic balance: omega^2 = (4/(pi A)) * integral of
/// f(A cos theta) cos theta over [0, pi/2]. Odd specs only.
FrequencyEstimate hb1_frequency(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol = {});

/// Closed-form first-order harmonic balance for the stretched wire,
/// sqrt(1 - lambda / sqrt(1 + 3A^2/4)).
double belendez_wire_frequency(double lambda, double amplitude);

}  // namespace oscfreq
