#include "oscfreq/model.hpp"

#include <cmath>
#include <sstream>

#include "oscfreq/errors.hpp"

namespace oscfreq {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sgn(double u) noexcept { return (u > 0.0) - (u < 0.0); }

void check_power(double coeff, double exponent) {
  if (!std::isfinite(coeff)) throw DomainError("power term coefficient must be finite");
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw DomainError("power term exponent must be finite and > 0");
  }
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "lambda must satisfy 0 < lambda <= 1, got " << lambda;
    throw DomainError(os.str());
  }
}

// 1 - cos(psi)^q without cancellation for small psi.
double one_minus_cos_pow(double psi, double q) noexcept {
  const double s = std::sin(0.5 * psi);
  const double log_cos = std::log1p(-2.0 * s * s);
  return -std::expm1(q * log_cos);
}

}  // namespace

ForceTerm ForceTerm::odd_power(double coeff, double exponent) {
  check_power(coeff, exponent);
  return ForceTerm(OddPower{coeff, exponent});
}

ForceTerm ForceTerm::even_power(double coeff, double exponent) {
  check_power(coeff, exponent);
  return ForceTerm(EvenPower{coeff, exponent});
}

ForceTerm ForceTerm::stretched_wire(double lambda) {
  check_lambda(lambda);
  return ForceTerm(StretchedWire{lambda});
}

double ForceTerm::force(double u) const noexcept {
  return std::visit(
      Overloaded{
          [u](const OddPower& t) { return t.coeff * sgn(u) * std::pow(std::abs(u), t.exponent); },
          [u](const EvenPower& t) { return t.coeff * std::pow(std::abs(u), t.exponent); },
          [u](const StretchedWire& t) { return -t.lambda * u / std::sqrt(1.0 + u * u); },
      },
      value_);
}

double ForceTerm::potential(double u) const noexcept {
  return std::visit(
      Overloaded{
          [u](const OddPower& t) {
            const double q = t.exponent + 1.0;
            return t.coeff * std::pow(std::abs(u), q) / q;
          },
          [u](const EvenPower& t) {
            const double q = t.exponent + 1.0;
            return t.coeff * sgn(u) * std::pow(std::abs(u), q) / q;
          },
          [u](const StretchedWire& t) {
            // sqrt(1+u^2) - 1 = u^2 / (sqrt(1+u^2) + 1)
            return -t.lambda * u * u / (std::sqrt(1.0 + u * u) + 1.0);
          },
      },
      value_);
}

double ForceTerm::potential_drop(double amplitude, double psi) const noexcept {
  const double a = amplitude;
  return std::visit(
      Overloaded{
          [&](const OddPower& t) {
            const double q = t.exponent + 1.0;
            return t.coeff * std::pow(a, q) / q * one_minus_cos_pow(psi, q);
          },
          [&](const EvenPower& t) {
            const double q = t.exponent + 1.0;
            return t.coeff * std::pow(a, q) / q * one_minus_cos_pow(psi, q);
          },
          [&](const StretchedWire& t) {
            const double c = std::cos(psi);
            const double s = std::sin(psi);
            const double r_full = std::sqrt(1.0 + a * a);
            const double r_part = std::sqrt(1.0 + a * a * c * c);
            return -t.lambda * a * a * s * s / (r_full + r_part);
          },
      },
      value_);
}

OscillatorSpec::OscillatorSpec(std::vector<ForceTerm> terms, std::string label)
    : terms_(std::move(terms)), label_(std::move(label)) {
  if (terms_.empty()) throw DomainError("terms non-empty: an oscillator needs at least one force term");
}

Parity OscillatorSpec::parity() const noexcept {
  for (const auto& term : terms_) {
    if (const auto* even = std::get_if<EvenPower>(&term.value()); even && even->coeff != 0.0) {
      return Parity::Mixed;
    }
  }
  return Parity::Odd;
}

double eval_force(const OscillatorSpec& spec, double u) noexcept {
  double sum = 0.0;
  for (const auto& term : spec.terms()) sum += term.force(u);
  return sum;
}

double eval_potential(const OscillatorSpec& spec, double u) noexcept {
  double sum = 0.0;
  for (const auto& term : spec.terms()) sum += term.potential(u);
  return sum;
}

double potential_drop(const OscillatorSpec& spec, double amplitude, double psi) noexcept {
  double sum = 0.0;
  for (const auto& term : spec.terms()) sum += term.potential_drop(amplitude, psi);
  return sum;
}

BranchPair decompose_branches(const OscillatorSpec& spec) {
  std::vector<ForceTerm> plus;
  std::vector<ForceTerm> minus;
  plus.reserve(spec.terms().size());
  minus.reserve(spec.terms().size());
  for (const auto& term : spec.terms()) {
    if (const auto* even = std::get_if<EvenPower>(&term.value())) {
      plus.push_back(ForceTerm::odd_power(even->coeff, even->exponent));
      minus.push_back(ForceTerm::odd_power(-even->coeff, even->exponent));
    } else {
      plus.push_back(term);
      minus.push_back(term);
    }
  }
  const auto& label = spec.label();
  return {OscillatorSpec(std::move(plus), label.empty() ? "" : label + " (u>0)"),
          OscillatorSpec(std::move(minus), label.empty() ? "" : label + " (u<0)")};
}

OscillatorSpec taylor_cubic(double lambda) {
  check_lambda(lambda);
  return OscillatorSpec({ForceTerm::odd_power(1.0 - lambda, 1.0), ForceTerm::odd_power(0.5 * lambda, 3.0)},
                        "stretched-wire-cubic");
}

ScaledWire stretched_wire_from_physical(const PhysicalWireParams& p) {
  if (!(p.mass > 0.0) || !(p.stiffness > 0.0) || !(p.half_length > 0.0)) {
    throw DomainError("mass, stiffness and half-length must be > 0");
  }
  if (!(p.half_gap >= p.half_length)) {
    throw DomainError("half-separation d must be >= natural half-length a");
  }
  const double lambda = p.half_length / p.half_gap;
  OscillatorSpec spec({ForceTerm::odd_power(1.0, 1.0), ForceTerm::stretched_wire(lambda)}, "stretched-wire");
  return {std::move(spec), std::sqrt(p.mass / (2.0 * p.stiffness)), p.half_gap};
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"stretched-wire", "stretched-wire-cubic", "power-3-4",
                                                 "mixed-parity"};
  return names;
}

namespace {

double require(const std::map<std::string, double>& params, const std::string& key, const std::string& preset) {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError("preset '" + preset + "' requires parameter '" + key + "'");
  return it->second;
}

}  // namespace

OscillatorSpec preset(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "stretched-wire") {
    const double lambda = require(params, "lambda", name);
    return OscillatorSpec({ForceTerm::odd_power(1.0, 1.0), ForceTerm::stretched_wire(lambda)}, name);
  }
  if (name == "stretched-wire-cubic") {
    return taylor_cubic(require(params, "lambda", name));
  }
  if (name == "power-3-4") {
    return OscillatorSpec({ForceTerm::odd_power(1.0, 0.75)}, name);
  }
  if (name == "mixed-parity") {
    const double eps = require(params, "epsilon", name);
    return OscillatorSpec(
        {ForceTerm::odd_power(1.0, 1.0), ForceTerm::even_power(eps, 2.0), ForceTerm::odd_power(1.0, 3.0)}, name);
  }
  throw DomainError("unknown preset '" + name + "'");
}

}  // namespace oscfreq
