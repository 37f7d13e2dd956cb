#pragma once

// Method dispatch and amplitude sweeps. evaluate_sweep spreads amplitudes
// over OpenMP threads; evaluate_sweep_serial is the reference it must match
// bit for bit.

#include <optional>
#include <string>
#include <vector>

#include "oscfreq/model.hpp"
#include "oscfreq/numerics.hpp"

namespace oscfreq {

enum class MethodKind { Iaff, FixedK, Hb1, Belendez, ExactQuad, ExactOde };

struct Method {
  MethodKind kind = MethodKind::Iaff;
  double k = 0.0;  // FixedK only

  // "iaff", "fixed-k", "hb1", "belendez", "exact-quad", "exact-ode"
  std::string name() const;
  bool is_exact() const noexcept { return kind == MethodKind::ExactQuad || kind == MethodKind::ExactOde; }

  static Method parse(const std::string& token, std::optional<double> k = std::nullopt);
};

struct EvalContext {
  ToleranceProfile tol;
  // Stretched-wire lambda, needed by the closed-form harmonic balance.
  std::optional<double> wire_lambda;
};

struct MethodResult {
  double omega = 0.0;
  double period = 0.0;
  std::optional<double> plus_branch_period;
  std::optional<double> minus_branch_period;
  std::optional<double> k;
};

/// Runs one method at one amplitude. Mixed-parity specs: approximate methods
/// run per branch at amplitude A and average the branch periods; exact-quad
/// uses the energy-matched branch periods; exact-ode integrates a full cycle.
MethodResult evaluate_method(const OscillatorSpec& spec, double amplitude, const Method& method,
                             const EvalContext& ctx);

std::vector<double> amplitude_grid(double start, double end, int count, bool log_spaced);

struct SweepRow {
  double amplitude = 0.0;
  std::vector<double> omega;    // one per requested method
  double omega_exact = 0.0;     // exact-quad reference
  std::vector<double> err_pct;  // 100 |omega - omega_exact| / omega_exact, non-exact methods only
};

std::vector<SweepRow> evaluate_sweep(const OscillatorSpec& spec, const std::vector<double>& amplitudes,
                                     const std::vector<Method>& methods, const EvalContext& ctx);

std::vector<SweepRow> evaluate_sweep_serial(const OscillatorSpec& spec, const std::vector<double>& amplitudes,
                                            const std::vector<Method>& methods, const EvalContext& ctx);

}  // namespace oscfreq
