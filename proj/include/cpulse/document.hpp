#ifndef CPULSE_DOCUMENT_HPP
#define CPULSE_DOCUMENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpulse/sequence.hpp"

namespace cpulse {

inline constexpr int kDocumentSchemaVersion = 1;
inline constexpr const char* kChronological = "chronological";

struct PulseEntry {
  double angle_deg = 0.0;
  double phase_deg = 0.0;
  bool operator==(const PulseEntry&) const = default;
};

// Serialized form of a pulse sequence; every angle in degrees.
struct SequenceDocument {
  int schema_version = kDocumentSchemaVersion;
  std::string name;
  double target_theta_deg = 0.0;
  std::string error_model;
  std::string convention = kChronological;
  std::vector<PulseEntry> pulses;
  std::map<std::string, double> metadata;

  bool operator==(const SequenceDocument&) const = default;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double to_degrees(double rad);
double to_radians(double deg);
// x snapped to 12 significant digits when it differs from that only by rounding noise.
double tidy(double x);

SequenceDocument make_document(const PulseSequence& seq, ModelKind model);
SequenceDocument make_document(const PulseSequence& seq);

std::string serialize(const SequenceDocument& doc, int indent = 2);
// Throws DocumentError on malformed JSON or a schema violation.
SequenceDocument parse_document(const std::string& text);

PulseSequence to_sequence(const SequenceDocument& doc);

}  // namespace cpulse

#endif  // CPULSE_DOCUMENT_HPP
