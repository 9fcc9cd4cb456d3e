#include "cpulse/sequence.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>

namespace cpulse {

PulseSequence::PulseSequence(std::string name, double target_theta, std::vector<Pulse> pulses,
                             ModelKind native_model)
    : name_(std::move(name)),
      target_theta_(target_theta),
      native_model_(native_model),
      pulses_(std::move(pulses)) {}

std::optional<double> PulseSequence::meta(const std::string& key) const {
  auto it = metadata_.find(key);
  if (it == metadata_.end()) return std::nullopt;
  return it->second;
}

PulseSequence& PulseSequence::rename(std::string name) {
  name_ = std::move(name);
  return *this;
}

PulseSequence& PulseSequence::set_target(double theta) {
  target_theta_ = theta;
  return *this;
}

PulseSequence& PulseSequence::set_native_model(ModelKind kind) {
  native_model_ = kind;
  return *this;
}

PulseSequence& PulseSequence::set_meta(const std::string& key, double value) {
  metadata_[key] = value;
  return *this;
}

PulseSequence& PulseSequence::push(const Pulse& p) {
  pulses_.push_back(p);
  return *this;
}

PulseSequence& PulseSequence::then(const PulseSequence& later) {
  pulses_.insert(pulses_.end(), later.pulses_.begin(), later.pulses_.end());
  for (const auto& [k, v] : later.metadata_) metadata_.try_emplace(k, v);
  return *this;
}

double PulseSequence::total_angle() const {
  double total = 0.0;
  for (const auto& p : pulses_) total += p.angle();
  return total;
}

PulseSequence concat(std::initializer_list<PulseSequence> parts) {
  PulseSequence out;
  for (const auto& part : parts) out.then(part);
  return out;
}

PulseSequence reversed_inverse(const PulseSequence& seq) {
  PulseSequence out(seq.name() + "_inv", -seq.target_theta(), {}, seq.native_model());
  for (auto it = seq.pulses().rbegin(); it != seq.pulses().rend(); ++it)
    out.push(it->shifted(std::numbers::pi));
  return out;
}

PulseSequence shift_phases(const PulseSequence& seq, double dphase) {
  PulseSequence out(seq.name(), seq.target_theta(), {}, seq.native_model());
  for (const auto& p : seq.pulses()) out.push(p.shifted(dphase));
  for (const auto& [k, v] : seq.metadata()) out.set_meta(k, v);
  return out;
}

Unitary2 compose(const PulseSequence& seq, const ErrorModel& m) {
  if (seq.empty()) throw std::invalid_argument("cannot compose an empty pulse sequence");
  Unitary2 acc = Unitary2::identity();
  for (const auto& p : seq.pulses()) acc = propagator(p, m) * acc;
  return acc;
}

}  // namespace cpulse
