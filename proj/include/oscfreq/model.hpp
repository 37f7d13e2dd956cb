#pragma once

// Restoring-force algebra for conservative oscillators u'' + f(u) = 0.

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace oscfreq {

// c * sgn(u) * |u|^p
struct OddPower {
  double coeff;
  double exponent;
  friend bool operator==(const OddPower&, const OddPower&) = default;
};

// c * |u|^p
struct EvenPower {
  double coeff;
  double exponent;
  friend bool operator==(const EvenPower&, const EvenPower&) = default;
};

// -lambda * u / sqrt(1 + u^2)
struct StretchedWire {
  double lambda;
  friend bool operator==(const StretchedWire&, const StretchedWire&) = default;
};

/// One additive component of f(u). Construct through the factories, which
/// enforce p > 0 (finite) and 0 < lambda <= 1.
class ForceTerm {
 public:
  using Variant = std::variant<OddPower, EvenPower, StretchedWire>;

  static ForceTerm odd_power(double coeff, double exponent);
  static ForceTerm even_power(double coeff, double exponent);
  static ForceTerm stretched_wire(double lambda);

  const Variant& value() const noexcept { return value_; }

  double force(double u) const noexcept;
  double potential(double u) const noexcept;
  // V(A) - V(A cos psi) for A > 0, psi in [0, pi/2], free of cancellation
  // near psi = 0.
  double potential_drop(double amplitude, double psi) const noexcept;

  friend bool operator==(const ForceTerm&, const ForceTerm&) = default;

 private:
  explicit ForceTerm(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

enum class Parity { Odd, Mixed };

/// Ordered, non-empty list of force terms. Terms are stored exactly as given
/// and evaluated in list order.
class OscillatorSpec {
 public:
  explicit OscillatorSpec(std::vector<ForceTerm> terms, std::string label = {});

  const std::vector<ForceTerm>& terms() const noexcept { return terms_; }
  const std::string& label() const noexcept { return label_; }

  // Mixed iff some EvenPower term has a nonzero coefficient.
  Parity parity() const noexcept;
  bool is_odd() const noexcept { return parity() == Parity::Odd; }

  friend bool operator==(const OscillatorSpec&, const OscillatorSpec&) = default;

 private:
  std::vector<ForceTerm> terms_;
  std::string label_;
};

double eval_force(const OscillatorSpec& spec, double u) noexcept;

// V with V(0) = 0 and dV/du = f.
double eval_potential(const OscillatorSpec& spec, double u) noexcept;

// V(A) - V(A cos psi), accurate to round-off relative to the result itself.
double potential_drop(const OscillatorSpec& spec, double amplitude, double psi) noexcept;

struct BranchPair {
  OscillatorSpec plus;
  OscillatorSpec minus;
};

/// Splits a mixed-parity force into two odd forces: EvenPower(c,p) becomes
/// OddPower(+c,p) in the plus branch and OddPower(-c,p) in the minus branch.
/// The plus branch agrees with f on u > 0; the minus branch, as an odd
/// function, agrees with f on u < 0.
BranchPair decompose_branches(const OscillatorSpec& spec);

/// (1 - lambda) u + (lambda/2) u^3, the small-amplitude form of the
/// stretched-wire force.
OscillatorSpec taylor_cubic(double lambda);

struct PhysicalWireParams {
  double mass;        // kg
  double stiffness;   // N/m
  double half_length; // a, m
  double half_gap;    // d, m
};

struct ScaledWire {
  OscillatorSpec spec;
  double time_scale;  // seconds per unit of dimensionless time
  double length_scale;  // metres per unit of u
};

/// Nondimensionalizes m x'' + 2k x - 2k a x / sqrt(d^2 + x^2) = 0 with
/// u = x/d and tau = t * sqrt(2k/m), giving u'' + u - lambda u / sqrt(1+u^2)
/// with lambda = a/d.
ScaledWire stretched_wire_from_physical(const PhysicalWireParams& params);

/// Named example oscillators: "stretched-wire" (lambda), "stretched-wire-cubic"
/// (lambda), "power-3-4", "mixed-parity" (epsilon).
OscillatorSpec preset(const std::string& name, const std::map<std::string, double>& params);

const std::vector<std::string>& preset_names();

}  // namespace oscfreq
