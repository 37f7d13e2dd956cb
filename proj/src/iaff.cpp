#include "oscfreq/iaff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oscfreq/errors.hpp"

namespace oscfreq {

namespace {

constexpr double kQuarterPi = 0.25 * std::numbers::pi;
constexpr int kScanPoints = 64;
constexpr double kScanLo = 1e-3;
constexpr double kScanHi = 1.0 - 1e-9;

void check_amplitude(double amplitude) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw DomainError("amplitude must be finite and > 0");
}

void check_k(double k) {
  if (!(k > 0.0 && k <= 1.0)) throw DomainError("collocation factor k must lie in (0, 1]");
}

void require_odd(const OscillatorSpec& spec, const char* op) {
  if (!spec.is_odd()) {
    throw DomainError(std::string(op) + " requires an odd restoring force; decompose mixed-parity specs into branches");
  }
}

std::string format_k(double k) {
  std::ostringstream os;
  os << k;
  return os.str();
}

}  // namespace

void TrialPair::validate() const {
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw DomainError("trial frequencies must be > 0");
  if (omega1 == omega2) throw DegenerateTrialsError("trial frequencies must differ");
}

double residual(const OscillatorSpec& spec, double amplitude, double k, double omega) {
  check_amplitude(amplitude);
  const double u = amplitude * k;
  return -omega * omega * u + eval_force(spec, u);
}

double omega_sq_of_k(const OscillatorSpec& spec, double amplitude, double k, const TrialPair& trials) {
  check_amplitude(amplitude);
  check_k(k);
  if (!(trials.omega1 > 0.0) || !(trials.omega2 > 0.0)) throw DomainError("trial frequencies must be > 0");
  const double r1 = residual(spec, amplitude, k, trials.omega1);
  const double r2 = residual(spec, amplitude, k, trials.omega2);
  const double denom = r2 - r1;
  if (denom == 0.0) throw DegenerateTrialsError("R2 - R1 vanished; the trial frequencies must differ");
  const double w1_sq = trials.omega1 * trials.omega1;
  const double w2_sq = trials.omega2 * trials.omega2;
  return (w1_sq * r2 - w2_sq * r1) / denom;
}

double first_harmonic_integral(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  check_amplitude(amplitude);
  return integrate([&](double theta) {
    const double c = std::cos(theta);
    return eval_force(spec, amplitude * c) * c;
  }, 0.0, 0.5 * std::numbers::pi, tol);
}

double galerkin_mismatch(const OscillatorSpec& spec, double amplitude, double k, const ToleranceProfile& tol) {
  const double w_sq = omega_sq_of_k(spec, amplitude, k);
  return w_sq * amplitude * kQuarterPi - first_harmonic_integral(spec, amplitude, tol);
}

GalerkinRoot solve_k_detailed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  require_odd(spec, "solve_k");
  check_amplitude(amplitude);
  tol.validate();

  const double integral = first_harmonic_integral(spec, amplitude, tol);
  auto mismatch = [&](double k) { return omega_sq_of_k(spec, amplitude, k) * amplitude * kQuarterPi - integral; };

  std::array<double, kScanPoints> ks{};
  std::array<double, kScanPoints> gs{};
  double max_abs_g = 0.0;
  double max_abs_w = 0.0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double k = kScanLo + (kScanHi - kScanLo) * i / (kScanPoints - 1);
    ks[i] = k;
    gs[i] = mismatch(k);
    max_abs_g = std::max(max_abs_g, std::abs(gs[i]));
    max_abs_w = std::max(max_abs_w, std::abs(omega_sq_of_k(spec, amplitude, k)));
  }

  const double scale = kQuarterPi * amplitude * max_abs_w + std::abs(integral);
  if (max_abs_g <= 10.0 * tol.quad_rel_tol * scale) {
    throw DegenerateGalerkinError(
        "Galerkin mismatch vanishes for every k (linear restoring force); omega does not depend on k");
  }

  std::vector<int> brackets;
  for (int i = 0; i + 1 < kScanPoints; ++i) {
    if (gs[i] == 0.0 || (gs[i] > 0.0) != (gs[i + 1] > 0.0)) brackets.push_back(i);
  }
  if (gs[kScanPoints - 1] == 0.0) brackets.push_back(kScanPoints - 2);
  if (brackets.empty()) {
    std::ostringstream os;
    os << "Galerkin mismatch has no sign change for k in (" << kScanLo << ", " << kScanHi << ") at A=" << amplitude;
    throw GalerkinRootError(os.str());
  }

  GalerkinRoot out{};
  out.sign_changes = static_cast<int>(brackets.size());
  const int i = brackets.back();
  const RootResult root = find_root_detailed(mismatch, ks[i], ks[i + 1], tol);
  out.k = root.root;
  out.iterations = root.iterations;
  out.mismatch = mismatch(root.root);
  if (brackets.size() > 1) {
    std::ostringstream os;
    os << brackets.size() << " sign changes of the Galerkin mismatch; kept the largest root k=" << out.k;
    out.diagnostics.push_back(os.str());
  }
  return out;
}

double solve_k(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  return solve_k_detailed(spec, amplitude, tol).k;
}

FrequencyEstimate frequency(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  require_odd(spec, "frequency");
  check_amplitude(amplitude);

  FrequencyEstimate est;
  est.method = "iaff";
  double w_sq;
  try {
    GalerkinRoot root = solve_k_detailed(spec, amplitude, tol);
    w_sq = omega_sq_of_k(spec, amplitude, root.k);
    est.k = root.k;
    est.galerkin_residual = root.mismatch;
    est.iterations = root.iterations;
    est.diagnostics = std::move(root.diagnostics);
  } catch (const DegenerateGalerkinError&) {
    w_sq = eval_force(spec, amplitude) / amplitude;
    est.diagnostics.emplace_back("linear restoring force: k is arbitrary");
  }
  if (!(w_sq > 0.0)) {
    std::ostringstream os;
    os << "omega^2 = " << w_sq << " <= 0 at A=" << amplitude << ": the force does not restore";
    throw NonOscillatoryError(os.str());
  }
  est.omega = std::sqrt(w_sq);
  return est;
}

FrequencyEstimate frequency_fixed_k(const OscillatorSpec& spec, double amplitude, double k) {
  const double w_sq = omega_sq_of_k(spec, amplitude, k);
  if (!(w_sq > 0.0)) {
    std::ostringstream os;
    os << "omega^2 = " << w_sq << " <= 0 at A=" << amplitude << ", k=" << k;
    throw NonOscillatoryError(os.str());
  }
  FrequencyEstimate est;
  est.omega = std::sqrt(w_sq);
  est.k = k;
  est.method = "fixed-k(" + format_k(k) + ")";
  return est;
}

PeriodEstimate period_mixed(const OscillatorSpec& spec, double amplitude, const ToleranceProfile& tol) {
  const BranchPair branches = decompose_branches(spec);
  const double w_plus = frequency(branches.plus, amplitude, tol).omega;
  const double w_minus = frequency(branches.minus, amplitude, tol).omega;
  PeriodEstimate est;
  est.plus_branch_period = 2.0 * std::numbers::pi / w_plus;
  est.minus_branch_period = 2.0 * std::numbers::pi / w_minus;
  est.period = 0.5 * (*est.plus_branch_period + *est.minus_branch_period);
  est.method = "iaff";
  return est;
}

}  // namespace oscfreq
