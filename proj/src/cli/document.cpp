#include "cpulse/document.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>

#include <json.hpp>

namespace cpulse {

using nlohmann::json;

double to_degrees(double rad) { return rad * (180.0 / std::numbers::pi); }
double to_radians(double deg) { return deg * (std::numbers::pi / 180.0); }

double tidy(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return std::abs(r - x) <= 8 * std::numeric_limits<double>::epsilon() * std::abs(x) ? r : x;
}

SequenceDocument make_document(const PulseSequence& seq, ModelKind model) {
  SequenceDocument doc;
  doc.name = seq.name();
  doc.target_theta_deg = tidy(to_degrees(seq.target_theta()));
  doc.error_model = std::string(model_tag(model));
  for (const auto& p : seq.pulses())
    doc.pulses.push_back({tidy(to_degrees(p.angle())), tidy(to_degrees(p.phase()))});
  for (const auto& [key, value] : seq.metadata()) doc.metadata[key] = tidy(to_degrees(value));
  return doc;
}

SequenceDocument make_document(const PulseSequence& seq) { return make_document(seq, seq.native_model()); }

std::string serialize(const SequenceDocument& doc, int indent) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["name"] = doc.name;
  j["target_theta_deg"] = doc.target_theta_deg;
  j["error_model"] = doc.error_model;
  j["convention"] = doc.convention;
  j["pulses"] = json::array();
  for (const auto& p : doc.pulses) j["pulses"].push_back({{"angle_deg", p.angle_deg}, {"phase_deg", p.phase_deg}});
  j["metadata"] = json::object();
  for (const auto& [k, v] : doc.metadata) j["metadata"][k] = v;
  return j.dump(indent);
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw DocumentError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw DocumentError(std::string(what) + " must be finite");
  return v;
}

}  // namespace

SequenceDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");

  SequenceDocument doc;
  const auto& version = field(j, "schema_version");
  if (!version.is_number_integer()) throw DocumentError("schema_version must be an integer");
  doc.schema_version = version.get<int>();
  if (doc.schema_version != kDocumentSchemaVersion)
    throw DocumentError("unsupported schema_version " + std::to_string(doc.schema_version));

  const auto& name = field(j, "name");
  if (!name.is_string()) throw DocumentError("name must be a string");
  doc.name = name.get<std::string>();
  doc.target_theta_deg = finite_number(field(j, "target_theta_deg"), "target_theta_deg");

  const auto& model = field(j, "error_model");
  if (!model.is_string()) throw DocumentError("error_model must be a string");
  doc.error_model = model.get<std::string>();
  try {
    parse_model_tag(doc.error_model);
  } catch (const std::invalid_argument&) {
    throw DocumentError("unknown error_model '" + doc.error_model + "'");
  }

  const auto& conv = field(j, "convention");
  if (!conv.is_string() || conv.get<std::string>() != kChronological)
    throw DocumentError("convention must be \"chronological\"");

  const auto& pulses = field(j, "pulses");
  if (!pulses.is_array() || pulses.empty()) throw DocumentError("pulses must be a non-empty array");
  for (const auto& p : pulses) {
    if (!p.is_object()) throw DocumentError("each pulse must be an object");
    PulseEntry e{finite_number(field(p, "angle_deg"), "angle_deg"), finite_number(field(p, "phase_deg"), "phase_deg")};
    if (e.angle_deg < 0.0) throw DocumentError("pulse angles must be non-negative");
    doc.pulses.push_back(e);
  }

  if (j.contains("metadata")) {
    const auto& meta = j.at("metadata");
    if (!meta.is_object()) throw DocumentError("metadata must be an object");
    for (const auto& [k, v] : meta.items()) doc.metadata[k] = finite_number(v, "metadata value");
  }
  return doc;
}

PulseSequence to_sequence(const SequenceDocument& doc) {
  PulseSequence seq(doc.name, to_radians(doc.target_theta_deg), {}, parse_model_tag(doc.error_model));
  for (const auto& p : doc.pulses) seq.push(to_radians(p.angle_deg), to_radians(p.phase_deg));
  for (const auto& [k, v] : doc.metadata) seq.set_meta(k, to_radians(v));
  return seq;
}

}  // namespace cpulse
