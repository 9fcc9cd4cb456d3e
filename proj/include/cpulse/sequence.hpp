#ifndef CPULSE_SEQUENCE_HPP
#define CPULSE_SEQUENCE_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpulse/pulse.hpp"

namespace cpulse {

// Ordered pulse list, stored chronologically: pulses()[0] acts first.
// The propagator is therefore P[n-1] * ... * P[1] * P[0].
class PulseSequence {
 public:
  PulseSequence() = default;
  PulseSequence(std::string name, double target_theta, std::vector<Pulse> pulses = {},
                ModelKind native_model = ModelKind::PulseLength);

  const std::string& name() const { return name_; }
  double target_theta() const { return target_theta_; }
  ModelKind native_model() const { return native_model_; }
  const std::vector<Pulse>& pulses() const { return pulses_; }
  std::size_t size() const { return pulses_.size(); }
  bool empty() const { return pulses_.empty(); }

  // Solver outputs, in radians.
  const std::map<std::string, double>& metadata() const { return metadata_; }
  std::optional<double> meta(const std::string& key) const;

  PulseSequence& rename(std::string name);
  PulseSequence& set_target(double theta);
  PulseSequence& set_native_model(ModelKind kind);
  PulseSequence& set_meta(const std::string& key, double value);

  PulseSequence& push(const Pulse& p);
  PulseSequence& push(double angle, double phase) { return push(Pulse(angle, phase)); }
  // Appends `later` so that it acts after the current pulses. Metadata is merged.
  PulseSequence& then(const PulseSequence& later);

  // Total nominal rotation angle of all pulses.
  double total_angle() const;

 private:
  std::string name_;
  double target_theta_ = 0.0;
  ModelKind native_model_ = ModelKind::PulseLength;
  std::vector<Pulse> pulses_;
  std::map<std::string, double> metadata_;
};

// Chronological concatenation: `first` acts, then each subsequent part.
PulseSequence concat(std::initializer_list<PulseSequence> parts);

// Reversed pulse order with every phase advanced by pi. Exact inverse under
// pulse-length errors.
PulseSequence reversed_inverse(const PulseSequence& seq);

// Every pulse phase advanced by dphase (mod 2pi).
PulseSequence shift_phases(const PulseSequence& seq, double dphase);

// Product of the per-pulse propagators, first pulse rightmost.
// Throws std::invalid_argument on an empty sequence.
Unitary2 compose(const PulseSequence& seq, const ErrorModel& m);

// Ideal rotation U(theta, 0) targeted by a sequence.
inline Unitary2 target_rotation(double theta) { return rotation(theta, 0.0); }

}  // namespace cpulse

#endif  // CPULSE_SEQUENCE_HPP
