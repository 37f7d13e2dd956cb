#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "oscfreq/errors.hpp"
#include "oscfreq/model.hpp"

using namespace oscfreq;
namespace ot = oscfreq::testing;

namespace {

OscillatorSpec sgn_form_mixed(double eps) {
  return OscillatorSpec(
      {ForceTerm::odd_power(1.0, 1.0), ForceTerm::odd_power(eps, 2.0), ForceTerm::odd_power(1.0, 3.0)});
}

OscillatorSpec random_odd_spec() {
  std::vector<ForceTerm> terms;
  const int n = 1 + static_cast<int>(ot::uniform(0.0, 3.0));
  for (int i = 0; i < n; ++i) terms.push_back(ForceTerm::odd_power(ot::uniform(0.1, 2.0), ot::uniform(0.2, 4.0)));
  if (ot::uniform(0.0, 1.0) < 0.5) terms.push_back(ForceTerm::stretched_wire(ot::uniform(0.05, 1.0)));
  return OscillatorSpec(std::move(terms));
}

}  // namespace

TEST(EvalForce, CubicWireAtLambdaOne) {
  EXPECT_DOUBLE_EQ(eval_force(taylor_cubic(1.0), 1.0), 0.5);
}

TEST(EvalForce, SignedSquareIsOdd) {
  EXPECT_DOUBLE_EQ(eval_force(sgn_form_mixed(1.0), -2.0), -14.0);
}

TEST(EvalForce, MixedParityPresetKeepsEvenTerm) {
  // u + u^2 + u^3 at u = -2
  EXPECT_DOUBLE_EQ(eval_force(preset("mixed-parity", {{"epsilon", 1.0}}), -2.0), -6.0);
}

TEST(EvalForce, EquilibriumAtOrigin) {
  EXPECT_EQ(eval_force(preset("stretched-wire", {{"lambda", 0.5}}), 0.0), 0.0);
}

TEST(EvalPotential, Examples) {
  const OscillatorSpec cubic({ForceTerm::odd_power(1.0, 3.0)});
  EXPECT_DOUBLE_EQ(eval_potential(cubic, 1.7), std::pow(1.7, 4) / 4.0);

  const double a = 1.3;
  EXPECT_NEAR(eval_potential(sgn_form_mixed(1.0), a), a * a / 2 + a * a * a / 3 + std::pow(a, 4) / 4, 1e-14);

  EXPECT_EQ(eval_potential(preset("stretched-wire", {{"lambda", 0.5}}), 0.0), 0.0);
}

TEST(EvalPotential, MatchesEnergyIntegrandOfMixedOscillator) {
  // 2 (V(A) - V(x)) = A^2 - x^2 + (2/3) eps (A^3 - x^3) + (1/2)(A^4 - x^4)
  const OscillatorSpec spec = preset("mixed-parity", {{"epsilon", 1.0}});
  const double a = 2.0;
  for (double x : {0.0, 0.5, 1.0, 1.9}) {
    const double want = a * a - x * x + 2.0 / 3.0 * (a * a * a - x * x * x) + 0.5 * (std::pow(a, 4) - std::pow(x, 4));
    EXPECT_NEAR(2.0 * (eval_potential(spec, a) - eval_potential(spec, x)), want, 1e-12);
  }
}

TEST(EvalPotential, DerivativeIsForce) {
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ForceTerm> terms = random_odd_spec().terms();
    terms.push_back(ForceTerm::even_power(ot::uniform(-1.0, 1.0), ot::uniform(0.3, 3.0)));
    const OscillatorSpec spec(terms);
    for (double mag : {1e-3, 0.01, 0.3, 1.0, 4.0, 10.0}) {
      for (double u : {mag, -mag}) {
        const double h = 1e-5 * std::abs(u);
        const double fd = (eval_potential(spec, u + h) - eval_potential(spec, u - h)) / (2.0 * h);
        const double f = eval_force(spec, u);
        EXPECT_LE(std::abs(fd - f), 1e-6 * std::max(std::abs(f), 1e-300) + 1e-12) << "u=" << u;
      }
    }
  }
}

TEST(PotentialDrop, AgreesWithDirectDifference) {
  for (int trial = 0; trial < 30; ++trial) {
    const OscillatorSpec spec = random_odd_spec();
    const double a = ot::uniform(0.05, 8.0);
    for (double psi : {0.3, 0.8, 1.2, 1.5707963267948966}) {
      const double direct = eval_potential(spec, a) - eval_potential(spec, a * std::cos(psi));
      EXPECT_NEAR(potential_drop(spec, a, psi), direct, 1e-11 * std::abs(eval_potential(spec, a)) + 1e-15);
    }
  }
}

TEST(PotentialDrop, SmallAngleLimit) {
  // V(A) - V(A cos psi) ~ f(A) A psi^2 / 2 as psi -> 0
  const OscillatorSpec spec = preset("stretched-wire", {{"lambda", 0.7}});
  const double a = 1.5;
  const double psi = 1e-7;
  EXPECT_NEAR(potential_drop(spec, a, psi) / (0.5 * eval_force(spec, a) * a * psi * psi), 1.0, 1e-7);
}

TEST(Parity, Classification) {
  EXPECT_TRUE(taylor_cubic(0.5).is_odd());
  EXPECT_TRUE(sgn_form_mixed(1.0).is_odd());
  EXPECT_EQ(preset("mixed-parity", {{"epsilon", 1.0}}).parity(), Parity::Mixed);
  EXPECT_EQ(preset("mixed-parity", {{"epsilon", 0.0}}).parity(), Parity::Odd);
}

TEST(Parity, OddSpecsAreOddFunctions) {
  for (int trial = 0; trial < 50; ++trial) {
    const OscillatorSpec spec = random_odd_spec();
    const double u = ot::uniform(-10.0, 10.0);
    EXPECT_DOUBLE_EQ(eval_force(spec, -u), -eval_force(spec, u));
  }
}

TEST(DecomposeBranches, MixedParityGivesPlusAndMinusEpsilon) {
  const BranchPair b = decompose_branches(preset("mixed-parity", {{"epsilon", 1.0}}));
  for (double u : {0.3, 1.0, 2.5}) {
    EXPECT_DOUBLE_EQ(eval_force(b.plus, u), u + u * u + u * u * u);
    EXPECT_DOUBLE_EQ(eval_force(b.minus, u), u - u * u + u * u * u);
    EXPECT_DOUBLE_EQ(eval_force(b.plus, -u), -eval_force(b.plus, u));
  }
  EXPECT_TRUE(b.plus.is_odd());
  EXPECT_TRUE(b.minus.is_odd());
}

TEST(DecomposeBranches, OddSpecUnchanged) {
  const OscillatorSpec spec = taylor_cubic(0.3);
  const BranchPair b = decompose_branches(spec);
  EXPECT_EQ(b.plus.terms(), spec.terms());
  EXPECT_EQ(b.minus.terms(), spec.terms());
}

TEST(DecomposeBranches, ZeroEpsilonGivesEqualBranches) {
  const BranchPair b = decompose_branches(preset("mixed-parity", {{"epsilon", 0.0}}));
  for (double u : {0.1, 1.0, 3.0}) EXPECT_EQ(eval_force(b.plus, u), eval_force(b.minus, u));
}

TEST(DecomposeBranches, BranchesAgreeWithForceOnTheirHalfLine) {
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ForceTerm> terms = random_odd_spec().terms();
    terms.push_back(ForceTerm::even_power(ot::uniform(-2.0, 2.0), ot::uniform(0.5, 3.0)));
    const OscillatorSpec spec(terms);
    const BranchPair b = decompose_branches(spec);
    const double u = ot::uniform(1e-3, 10.0);
    EXPECT_NEAR(eval_force(b.plus, u), eval_force(spec, u), 1e-12 * std::abs(eval_force(spec, u)) + 1e-14);
    EXPECT_NEAR(eval_force(b.minus, -u), eval_force(spec, -u), 1e-12 * std::abs(eval_force(spec, -u)) + 1e-14);
  }
}

TEST(TaylorCubic, Coefficients) {
  const OscillatorSpec half = taylor_cubic(0.5);
  EXPECT_DOUBLE_EQ(eval_force(half, 2.0), 0.5 * 2.0 + 0.25 * 8.0);
  const OscillatorSpec one = taylor_cubic(1.0);
  EXPECT_DOUBLE_EQ(eval_force(one, 2.0), 4.0);
  const OscillatorSpec tiny = taylor_cubic(1e-12);
  EXPECT_NEAR(eval_force(tiny, 0.7), 0.7, 1e-11);
}

TEST(TaylorCubic, RejectsLambdaOutOfRange) {
  EXPECT_THROW(taylor_cubic(0.0), DomainError);
  EXPECT_THROW(taylor_cubic(1.01), DomainError);
}

TEST(TaylorCubic, FifthOrderAgreementWithWire) {
  for (double lambda : {0.2, 0.5, 1.0}) {
    const OscillatorSpec cubic = taylor_cubic(lambda);
    const OscillatorSpec wire = preset("stretched-wire", {{"lambda", lambda}});
    auto gap = [&](double u) { return std::abs(eval_force(cubic, u) - eval_force(wire, u)); };
    // Leading error is (3/8) lambda u^5: doubling u scales it by 32.
    EXPECT_NEAR(gap(0.02) / gap(0.01), 32.0, 0.1);
    EXPECT_NEAR(gap(0.04) / gap(0.02), 32.0, 0.1);
    EXPECT_NEAR(gap(0.01) / std::pow(0.01, 5), 0.375 * lambda, 1e-3);
  }
}

TEST(PhysicalWire, UnitNormalization) {
  const ScaledWire w = stretched_wire_from_physical({1.0, 0.5, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(w.time_scale, 1.0);
  EXPECT_DOUBLE_EQ(eval_force(w.spec, 1.0), 1.0 - 0.5 / std::sqrt(2.0));
}

TEST(PhysicalWire, UnstretchedHasNoLinearRestoring) {
  const ScaledWire w = stretched_wire_from_physical({1.0, 1.0, 1.5, 1.5});
  const double h = 1e-4;
  EXPECT_NEAR(eval_force(w.spec, h) / h, 0.0, 1e-7);
}

TEST(PhysicalWire, RejectsCompressedWire) {
  EXPECT_THROW(stretched_wire_from_physical({1.0, 1.0, 2.0, 1.0}), DomainError);
  EXPECT_THROW(stretched_wire_from_physical({0.0, 1.0, 1.0, 2.0}), DomainError);
}

TEST(Presets, Examples) {
  const OscillatorSpec p = preset("power-3-4", {});
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms()[0], ForceTerm::odd_power(1.0, 0.75));

  EXPECT_EQ(preset("stretched-wire-cubic", {{"lambda", 0.5}}).terms(), taylor_cubic(0.5).terms());

  const OscillatorSpec m = preset("mixed-parity", {{"epsilon", 1.0}});
  EXPECT_EQ(m.terms()[1], ForceTerm::even_power(1.0, 2.0));
}

TEST(Presets, Errors) {
  EXPECT_THROW(preset("duffing", {}), DomainError);
  EXPECT_THROW(preset("stretched-wire", {}), DomainError);
  EXPECT_THROW(preset("mixed-parity", {{"lambda", 1.0}}), DomainError);
}

TEST(ForceTerm, Validation) {
  EXPECT_THROW(ForceTerm::odd_power(1.0, 0.0), DomainError);
  EXPECT_THROW(ForceTerm::even_power(1.0, -1.0), DomainError);
  EXPECT_THROW(ForceTerm::stretched_wire(0.0), DomainError);
  EXPECT_THROW(OscillatorSpec({}), DomainError);
}
