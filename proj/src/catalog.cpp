#include "cpulse/catalog.hpp"

#include <cmath>
#include <numbers>

#include "cpulse/sequences.hpp"

namespace cpulse {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleSlack = 1e-9;

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  using M = ModelKind;
  static const std::vector<CatalogEntry> entries = {
      {"simple", M::PulseLength, 1, false, 4 * kPi, "single uncorrected pulse"},
      {"bb1", M::PulseLength, 3, false, 4 * kPi, "broadband BB1 sequence"},
      {"sk1", M::PulseLength, 2, false, 4 * kPi, "pulse followed by a first order X1 correction"},
      {"sk2", M::PulseLength, 3, false, 4 * kPi, "sk1 plus a direct Z2' commutator correction"},
      {"sk2rot", M::PulseLength, 3, false, 4 * kPi, "sk1 plus an X2' correction rotated onto z"},
      {"sk3", M::PulseLength, 4, true, kPi, "BB1(180) plus a phase-shifted X3 correction"},
      {"corpse", M::OffResonance, 2, false, 2 * kPi, "CORPSE (n = 1, 1, 0)"},
      {"short-corpse", M::OffResonance, 2, false, 2 * kPi, "short CORPSE (n = 0, 1, 0)"},
      {"or-first", M::OffResonance, 2, true, kPi, "180 pulse plus a Y1' correction"},
      {"or-first-general", M::OffResonance, 2, false, 2 * kPi, "pulse plus Y1' and B1 corrections"},
      {"or-second-corpse", M::OffResonance, 3, true, kPi, "or-first plus a CORPSE-rotated Z2' term"},
      {"or-second-xz", M::OffResonance, 3, true, kPi, "or-first plus Z2' and X2 terms"},
      {"or-timesym", M::OffResonance, 2, true, kPi, "Y1, 180 pulse, Y1' (time symmetric)"},
      {"simultaneous", M::Simultaneous, 2, true, kPi, "eight pulses tolerant to both error kinds"},
  };
  return entries;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

PulseSequence build_catalog_sequence(std::string_view name, double theta) {
  const auto entry = find_catalog_entry(name);
  if (!entry) throw UnknownSequence("unknown sequence '" + std::string(name) + "'");
  if (!std::isfinite(theta)) throw UnsolvableAngle("target angle must be finite");
  if (entry->fixed_pi) {
    if (std::abs(theta - kPi) > kAngleSlack)
      throw UnsolvableAngle(entry->name + " is only defined for a 180 degree target");
    theta = kPi;
  } else if (theta <= 0.0 || theta > entry->max_theta + kAngleSlack) {
    throw UnsolvableAngle(entry->name + ": target angle outside (0, " +
                          std::to_string(entry->max_theta * 180.0 / kPi) + "] degrees");
  }

  if (name == "simple") return simple_pulse(theta, ModelKind::PulseLength);
  if (name == "bb1") return bb1(theta);
  if (name == "sk1") return sk_corrected(theta, SkOrder::First);
  if (name == "sk2") return sk_corrected(theta, SkOrder::Second);
  if (name == "sk2rot") return sk_corrected(theta, SkOrder::SecondRotated);
  if (name == "sk3") return sk_corrected(theta, SkOrder::Third);
  if (name == "corpse") return corpse(theta, CorpsePreset::Corpse);
  if (name == "short-corpse") return corpse(theta, CorpsePreset::ShortCorpse);
  if (name == "or-first") return or_corrected(OrCorrected::FirstPi);
  if (name == "or-first-general") return or_corrected(OrCorrected::FirstGeneral, theta);
  if (name == "or-second-corpse") return or_corrected(OrCorrected::SecondCorpseRotated);
  if (name == "or-second-xz") return or_corrected(OrCorrected::SecondXZ);
  if (name == "or-timesym") return or_corrected(OrCorrected::TimeSymmetric);
  return or_corrected(OrCorrected::SimultaneousPi);
}

}  // namespace cpulse
