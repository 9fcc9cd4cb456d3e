#ifndef CPULSE_PULSE_HPP
#define CPULSE_PULSE_HPP

#include <string_view>

#include "cpulse/su2.hpp"

namespace cpulse {

// A single hard rotation about an axis in the xy plane.
// Angle is non-negative; phase is kept in [0, 2pi).
class Pulse {
 public:
  // Throws std::invalid_argument for non-finite input or a negative angle.
  Pulse(double angle, double phase);

  // Accepts a negative angle and rewrites it as (|angle|, phase + pi).
  // Only meaningful for ideal or pulse-length-error rotations.
  static Pulse normalized(double angle, double phase);

  double angle() const { return angle_; }
  double phase() const { return phase_; }

  Pulse shifted(double dphase) const { return Pulse(angle_, phase_ + dphase); }

  friend bool operator==(const Pulse&, const Pulse&) = default;

 private:
  double angle_;
  double phase_;
};

enum class ModelKind { PulseLength, OffResonance, Simultaneous };

std::string_view model_tag(ModelKind kind);
// Accepts "ple", "ore", "sim"; throws std::invalid_argument otherwise.
ModelKind parse_model_tag(std::string_view tag);

// Systematic error acting on every pulse of a sequence.
class ErrorModel {
 public:
  static ErrorModel ideal() { return ErrorModel(ModelKind::PulseLength, 0.0, 0.0); }
  static ErrorModel pulse_length(double epsilon) {
    return ErrorModel(ModelKind::PulseLength, epsilon, 0.0);
  }
  static ErrorModel off_resonance(double f) { return ErrorModel(ModelKind::OffResonance, 0.0, f); }
  static ErrorModel simultaneous(double epsilon, double f) {
    return ErrorModel(ModelKind::Simultaneous, epsilon, f);
  }
  // Places a single scalar error value on the axis that `kind` perturbs.
  // Simultaneous models receive (x, x).
  static ErrorModel along(ModelKind kind, double x);

  ModelKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }
  double f() const { return f_; }

 private:
  ErrorModel(ModelKind kind, double epsilon, double f);

  ModelKind kind_;
  double epsilon_;
  double f_;
};

// exp[-i theta (X cos phi + Y sin phi) / 2]
Unitary2 rotation(double theta, double phi);

// exp[-i theta (Z) / 2]
Unitary2 z_rotation(double theta);

// Erroneous propagator of one pulse.
//   PulseLength:  rotation(theta (1 + eps), phi)
//   OffResonance: exp[-i theta (X cos phi + Y sin phi + f Z) / 2]
//   Simultaneous: exp[-i theta ((1 + eps)(X cos phi + Y sin phi) + f Z) / 2]
Unitary2 propagator(const Pulse& p, const ErrorModel& m);

// Raw-angle form. A negative angle is rewritten through the phase for
// pulse-length errors and rejected whenever an off-resonance term is present.
Unitary2 propagator(double theta, double phi, const ErrorModel& m);

// |Tr(V U^dagger)| / 2, insensitive to global phase.
double fidelity(const Unitary2& v, const Unitary2& u);

// 1 - fidelity(v, u), evaluated from the Pauli part of V U^dagger so that
// values down to ~1e-30 keep full relative precision.
double infidelity(const Unitary2& v, const Unitary2& u);

}  // namespace cpulse

#endif  // CPULSE_PULSE_HPP
