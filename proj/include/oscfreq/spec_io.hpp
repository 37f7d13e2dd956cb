#pragma once

// JSON spec documents:
//   {"label": "...", "terms": [
//      {"kind": "odd_power" | "even_power", "coeff": c, "exponent": p},
//      {"kind": "stretched_wire", "lambda": l}]}

#include <string>

#include "oscfreq/model.hpp"

namespace oscfreq {

/// Throws SpecParseError whose message starts with the offending field path,
/// e.g. "terms[1].exponent: ...".
OscillatorSpec parse_spec(const std::string& document);

std::string serialize_spec(const OscillatorSpec& spec);

}  // namespace oscfreq
