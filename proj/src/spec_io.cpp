#include "oscfreq/spec_io.hpp"

#include <nlohmann/json.hpp>

#include "oscfreq/errors.hpp"

namespace oscfreq {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw SpecParseError(path + ": " + message);
}

double number_field(const json& obj, const std::string& key, const std::string& path) {
  const std::string field = path + "." + key;
  auto it = obj.find(key);
  if (it == obj.end()) fail(field, "missing");
  if (!it->is_number()) fail(field, "expected a number");
  return it->get<double>();
}

ForceTerm parse_term(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
  auto kind_it = node.find("kind");
  if (kind_it == node.end()) fail(path + ".kind", "missing");
  if (!kind_it->is_string()) fail(path + ".kind", "expected a string");
  const auto kind = kind_it->get<std::string>();
  try {
    if (kind == "odd_power") {
      return ForceTerm::odd_power(number_field(node, "coeff", path), number_field(node, "exponent", path));
    }
    if (kind == "even_power") {
      return ForceTerm::even_power(number_field(node, "coeff", path), number_field(node, "exponent", path));
    }
    if (kind == "stretched_wire") {
      return ForceTerm::stretched_wire(number_field(node, "lambda", path));
    }
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown kind '" + kind + "' (expected odd_power, even_power or stretched_wire)");
}

}  // namespace

OscillatorSpec parse_spec(const std::string& document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    fail("$", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected an object");

  std::string label;
  if (auto it = root.find("label"); it != root.end() && !it->is_null()) {
    if (!it->is_string()) fail("label", "expected a string");
    label = it->get<std::string>();
  }

  auto terms_it = root.find("terms");
  if (terms_it == root.end()) fail("terms", "missing");
  if (!terms_it->is_array()) fail("terms", "expected an array");
  if (terms_it->empty()) fail("terms", "terms non-empty: at least one force term is required");

  std::vector<ForceTerm> terms;
  terms.reserve(terms_it->size());
  for (std::size_t i = 0; i < terms_it->size(); ++i) {
    terms.push_back(parse_term((*terms_it)[i], "terms[" + std::to_string(i) + "]"));
  }
  return OscillatorSpec(std::move(terms), std::move(label));
}

std::string serialize_spec(const OscillatorSpec& spec) {
  json terms = json::array();
  for (const auto& term : spec.terms()) {
    const auto& v = term.value();
    if (const auto* t = std::get_if<OddPower>(&v)) {
      terms.push_back({{"kind", "odd_power"}, {"coeff", t->coeff}, {"exponent", t->exponent}});
    } else if (const auto* t = std::get_if<EvenPower>(&v)) {
      terms.push_back({{"kind", "even_power"}, {"coeff", t->coeff}, {"exponent", t->exponent}});
    } else if (const auto* t = std::get_if<StretchedWire>(&v)) {
      terms.push_back({{"kind", "stretched_wire"}, {"lambda", t->lambda}});
    }
  }
  json root;
  if (!spec.label().empty()) root["label"] = spec.label();
  root["terms"] = std::move(terms);
  return root.dump(2) + "\n";
}

}  // namespace oscfreq
