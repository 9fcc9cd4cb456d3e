#ifndef CPULSE_CATALOG_HPP
#define CPULSE_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpulse/sequence.hpp"

namespace cpulse {

struct CatalogEntry {
  std::string name;
  ModelKind model;
  // Error order under `model`.
  int expected_order;
  // Only defined for theta = pi.
  bool fixed_pi;
  // Largest admissible target angle (radians) when not fixed.
  double max_theta;
  std::string summary;
};

class UnknownSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Target angle outside the range where the sequence's phases have a solution.
class UnsolvableAngle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_catalog_entry(std::string_view name);

// Builds a named catalog sequence for target angle theta (radians).
// Throws UnknownSequence or UnsolvableAngle.
PulseSequence build_catalog_sequence(std::string_view name, double theta);

}  // namespace cpulse

#endif  // CPULSE_CATALOG_HPP
