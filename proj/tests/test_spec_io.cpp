#include <gtest/gtest.h>

#include "oracles.hpp"
#include "oscfreq/errors.hpp"
#include "oscfreq/spec_io.hpp"

using namespace oscfreq;
namespace ot = oscfreq::testing;

namespace {

std::string parse_error(const std::string& doc) {
  try {
    parse_spec(doc);
  } catch (const SpecParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseSpec, FractionalPower) {
  const OscillatorSpec spec = parse_spec(R"({"terms":[{"kind":"odd_power","coeff":1,"exponent":0.75}]})");
  EXPECT_EQ(spec.terms(), preset("power-3-4", {}).terms());
}

TEST(ParseSpec, CubicWire) {
  const OscillatorSpec spec = parse_spec(
      R"({"terms":[{"kind":"odd_power","coeff":0.5,"exponent":1},{"kind":"odd_power","coeff":0.25,"exponent":3}]})");
  EXPECT_EQ(spec.terms(), taylor_cubic(0.5).terms());
}

TEST(ParseSpec, AllKindsAndLabel) {
  const OscillatorSpec spec = parse_spec(R"({"label":"wire+","terms":[
      {"kind":"odd_power","coeff":1,"exponent":1},
      {"kind":"even_power","coeff":-0.5,"exponent":2},
      {"kind":"stretched_wire","lambda":0.25}]})");
  EXPECT_EQ(spec.label(), "wire+");
  EXPECT_EQ(spec.terms()[1], ForceTerm::even_power(-0.5, 2.0));
  EXPECT_EQ(spec.terms()[2], ForceTerm::stretched_wire(0.25));
}

TEST(ParseSpec, ErrorsCarryFieldPath) {
  EXPECT_NE(parse_error(R"({"terms":[]})").find("terms non-empty"), std::string::npos);
  EXPECT_EQ(parse_error(R"({"terms":[)").rfind("$:", 0), 0u);
  EXPECT_EQ(parse_error(R"([1,2])").rfind("$:", 0), 0u);
  EXPECT_EQ(parse_error(R"({})").rfind("terms:", 0), 0u);
  EXPECT_EQ(parse_error(R"({"terms":[{"kind":"odd_power","coeff":1,"exponent":1},{"kind":"cubic"}]})").rfind(
                "terms[1].kind:", 0),
            0u);
  EXPECT_EQ(parse_error(R"({"terms":[{"kind":"odd_power","coeff":1}]})").rfind("terms[0].exponent:", 0), 0u);
  EXPECT_EQ(parse_error(R"({"terms":[{"kind":"odd_power","coeff":"1","exponent":1}]})").rfind("terms[0].coeff:", 0),
            0u);
  EXPECT_EQ(parse_error(R"({"terms":[{"kind":"odd_power","coeff":1,"exponent":-2}]})").rfind("terms[0]:", 0), 0u);
  EXPECT_EQ(parse_error(R"({"terms":[{"kind":"stretched_wire","lambda":1.5}]})").rfind("terms[0]:", 0), 0u);
  EXPECT_EQ(parse_error(R"({"label":3,"terms":[{"kind":"stretched_wire","lambda":0.5}]})").rfind("label:", 0), 0u);
}

TEST(SerializeSpec, RoundTripsRandomSpecs) {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ForceTerm> terms;
    const int n = 1 + trial % 4;
    for (int i = 0; i < n; ++i) {
      const double pick = ot::uniform(0.0, 3.0);
      if (pick < 1.0) {
        terms.push_back(ForceTerm::odd_power(ot::uniform(-5.0, 5.0), ot::uniform(1e-3, 7.0)));
      } else if (pick < 2.0) {
        terms.push_back(ForceTerm::even_power(ot::uniform(-5.0, 5.0), ot::uniform(1e-3, 7.0)));
      } else {
        terms.push_back(ForceTerm::stretched_wire(ot::uniform(1e-6, 1.0)));
      }
    }
    const OscillatorSpec spec(terms, trial % 2 ? "spec " + std::to_string(trial) : "");
    EXPECT_EQ(parse_spec(serialize_spec(spec)), spec);
  }
}
