#include "oscfreq/sweep.hpp"

#include <cmath>
#include <exception>
#include <numbers>

#include "oscfreq/errors.hpp"
#include "oscfreq/exact.hpp"
#include "oscfreq/iaff.hpp"
#include "oscfreq/reference.hpp"

namespace oscfreq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

MethodResult from_omega(double omega, std::optional<double> k = std::nullopt) {
  MethodResult r;
  r.omega = omega;
  r.period = kTwoPi / omega;
  r.k = k;
  return r;
}

MethodResult from_period(double period) {
  MethodResult r;
  r.period = period;
  r.omega = kTwoPi / period;
  return r;
}

// Odd-spec frequency for an approximate method.
double approx_omega(const OscillatorSpec& spec, double amplitude, const Method& method, const EvalContext& ctx,
                    std::optional<double>& k_out) {
  switch (method.kind) {
    case MethodKind::Iaff: {
      const FrequencyEstimate est = frequency(spec, amplitude, ctx.tol);
      k_out = est.k;
      return est.omega;
    }
    case MethodKind::FixedK:
      k_out = method.k;
      return frequency_fixed_k(spec, amplitude, method.k).omega;
    case MethodKind::Hb1:
      return hb1_frequency(spec, amplitude, ctx.tol).omega;
    default:
      throw DomainError("not an approximate method: " + method.name());
  }
}

SweepRow evaluate_row(const OscillatorSpec& spec, double amplitude, const std::vector<Method>& methods,
                      const EvalContext& ctx) {
  SweepRow row;
  row.amplitude = amplitude;
  row.omega_exact = evaluate_method(spec, amplitude, Method{MethodKind::ExactQuad}, ctx).omega;
  row.omega.reserve(methods.size());
  for (const Method& m : methods) {
    const double omega = evaluate_method(spec, amplitude, m, ctx).omega;
    row.omega.push_back(omega);
    if (!m.is_exact()) row.err_pct.push_back(100.0 * std::abs(omega - row.omega_exact) / row.omega_exact);
  }
  return row;
}

}  // namespace

std::string Method::name() const {
  switch (kind) {
    case MethodKind::Iaff:
      return "iaff";
    case MethodKind::FixedK:
      return "fixed-k";
    case MethodKind::Hb1:
      return "hb1";
    case MethodKind::Belendez:
      return "belendez";
    case MethodKind::ExactQuad:
      return "exact-quad";
    case MethodKind::ExactOde:
      return "exact-ode";
  }
  return "?";
}

Method Method::parse(const std::string& token, std::optional<double> k) {
  if (token == "iaff") return {MethodKind::Iaff};
  if (token == "hb1") return {MethodKind::Hb1};
  if (token == "belendez") return {MethodKind::Belendez};
  if (token == "exact-quad") return {MethodKind::ExactQuad};
  if (token == "exact-ode") return {MethodKind::ExactOde};
  if (token == "fixed-k") {
    if (!k) throw DomainError("method fixed-k needs a collocation value (--k)");
    if (!(*k > 0.0 && *k <= 1.0)) throw DomainError("fixed-k collocation value must lie in (0, 1]");
    return {MethodKind::FixedK, *k};
  }
  throw DomainError("unknown method '" + token + "'");
}

MethodResult evaluate_method(const OscillatorSpec& spec, double amplitude, const Method& method,
                             const EvalContext& ctx) {
  switch (method.kind) {
    case MethodKind::ExactQuad:
      if (spec.is_odd()) return from_period(period_quadrature(spec, amplitude, ctx.tol));
      {
        const MixedPeriod mp = exact_period_mixed_detailed(spec, amplitude, ctx.tol);
        MethodResult r = from_period(mp.period);
        r.plus_branch_period = 2.0 * mp.plus_half_period;
        r.minus_branch_period = 2.0 * mp.minus_half_period;
        return r;
      }
    case MethodKind::ExactOde:
      return from_period(period_ode(spec, amplitude, ctx.tol));
    case MethodKind::Belendez:
      if (!ctx.wire_lambda) throw DomainError("belendez applies only to the stretched-wire presets (needs lambda)");
      return from_omega(belendez_wire_frequency(*ctx.wire_lambda, amplitude));
    default:
      break;
  }

  if (spec.is_odd()) {
    std::optional<double> k;
    const double omega = approx_omega(spec, amplitude, method, ctx, k);
    return from_omega(omega, k);
  }
  const BranchPair branches = decompose_branches(spec);
  std::optional<double> k_plus;
  std::optional<double> k_minus;
  const double t_plus = kTwoPi / approx_omega(branches.plus, amplitude, method, ctx, k_plus);
  const double t_minus = kTwoPi / approx_omega(branches.minus, amplitude, method, ctx, k_minus);
  MethodResult r = from_period(0.5 * (t_plus + t_minus));
  r.plus_branch_period = t_plus;
  r.minus_branch_period = t_minus;
  return r;
}

std::vector<double> amplitude_grid(double start, double end, int count, bool log_spaced) {
  if (count < 2) throw DomainError("an amplitude sweep needs at least 2 points");
  if (!(start > 0.0) || !(end > 0.0)) throw DomainError("sweep amplitudes must be > 0");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / (count - 1);
    out[i] = log_spaced ? std::exp(std::log(start) + s * (std::log(end) - std::log(start)))
                        : start + s * (end - start);
  }
  out.front() = start;
  out.back() = end;
  return out;
}

std::vector<SweepRow> evaluate_sweep_serial(const OscillatorSpec& spec, const std::vector<double>& amplitudes,
                                            const std::vector<Method>& methods, const EvalContext& ctx) {
  std::vector<SweepRow> rows;
  rows.reserve(amplitudes.size());
  for (double a : amplitudes) rows.push_back(evaluate_row(spec, a, methods, ctx));
  return rows;
}

std::vector<SweepRow> evaluate_sweep(const OscillatorSpec& spec, const std::vector<double>& amplitudes,
                                     const std::vector<Method>& methods, const EvalContext& ctx) {
  const auto n = static_cast<std::ptrdiff_t>(amplitudes.size());
  std::vector<SweepRow> rows(amplitudes.size());
  std::vector<std::exception_ptr> errors(amplitudes.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[i] = evaluate_row(spec, amplitudes[i], methods, ctx);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  // Report the failure at the smallest amplitude index, as the serial loop would.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace oscfreq
