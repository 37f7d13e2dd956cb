#include "oscfreq/reference.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "oscfreq/errors.hpp"

namespace oscfreq {

FrequencyEstimate hb1_frequency(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  if (!spec.is_odd()) throw DomainError("hb1_frequency requires an odd restoring force");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw DomainError("amplitude must be finite and > 0");
  const double w_sq = 4.0 / (std::numbers::pi * amplitude) * first_harmonic_integral(spec, amplitude, tol);
  if (!(w_sq > 0.0)) {
    std::ostringstream os;
    os << "harmonic balance gives omega^2 = " << w_sq << " <= 0 at A=" << amplitude;
    throw NonOscillatoryError(os.str());
  }
  FrequencyEstimate est;
  est.omega = std::sqrt(w_sq);
  est.method = "hb1";
  return est;
}

double belendez_wire_frequency(double lambda, double amplitude) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must satisfy 0 < lambda <= 1");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw DomainError("amplitude must be finite and > 0");
  return std::sqrt(1.0 - lambda / std::sqrt(1.0 + 0.75 * amplitude * amplitude));
}

}  // namespace oscfreq
