#include "cpulse/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cpulse {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_phase(double phase) {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

// exp[-i theta (n . sigma) / 2] for an unnormalised real axis n.
Unitary2 axis_exponential(double theta, double nx, double ny, double nz) {
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  const double half = 0.5 * theta * norm;
  // sin(half) / norm, continuous through norm -> 0
  const double s = norm > 1e-300 ? std::sin(half) / norm : 0.5 * theta;
  const double c = std::cos(half);
  const cplx i{0.0, 1.0};
  return {cplx{c, -s * nz}, -i * s * cplx{nx, -ny}, -i * s * cplx{nx, ny}, cplx{c, s * nz}};
}

}  // namespace

Pulse::Pulse(double angle, double phase) {
  require_finite(angle, "pulse angle");
  require_finite(phase, "pulse phase");
  if (angle < 0.0) throw std::invalid_argument("pulse angle must be non-negative");
  angle_ = angle;
  phase_ = reduce_phase(phase);
}

Pulse Pulse::normalized(double angle, double phase) {
  require_finite(angle, "pulse angle");
  if (angle < 0.0) return Pulse(-angle, phase + std::numbers::pi);
  return Pulse(angle, phase);
}

std::string_view model_tag(ModelKind kind) {
  switch (kind) {
    case ModelKind::PulseLength:
      return "ple";
    case ModelKind::OffResonance:
      return "ore";
    case ModelKind::Simultaneous:
      return "sim";
  }
  return "ple";
}

ModelKind parse_model_tag(std::string_view tag) {
  if (tag == "ple") return ModelKind::PulseLength;
  if (tag == "ore") return ModelKind::OffResonance;
  if (tag == "sim") return ModelKind::Simultaneous;
  throw std::invalid_argument("unknown error model '" + std::string(tag) + "'");
}

ErrorModel::ErrorModel(ModelKind kind, double epsilon, double f)
    : kind_(kind), epsilon_(epsilon), f_(f) {
  require_finite(epsilon, "pulse-length error");
  require_finite(f, "off-resonance fraction");
}

ErrorModel ErrorModel::along(ModelKind kind, double x) {
  switch (kind) {
    case ModelKind::PulseLength:
      return pulse_length(x);
    case ModelKind::OffResonance:
      return off_resonance(x);
    case ModelKind::Simultaneous:
      return simultaneous(x, x);
  }
  return pulse_length(x);
}

Unitary2 rotation(double theta, double phi) {
  require_finite(theta, "rotation angle");
  require_finite(phi, "rotation phase");
  return axis_exponential(theta, std::cos(phi), std::sin(phi), 0.0);
}

Unitary2 z_rotation(double theta) {
  require_finite(theta, "rotation angle");
  return axis_exponential(theta, 0.0, 0.0, 1.0);
}

Unitary2 propagator(const Pulse& p, const ErrorModel& m) {
  const double scale = 1.0 + m.epsilon();
  return axis_exponential(p.angle(), scale * std::cos(p.phase()), scale * std::sin(p.phase()),
                          m.f());
}

Unitary2 propagator(double theta, double phi, const ErrorModel& m) {
  require_finite(theta, "rotation angle");
  if (theta < 0.0 && m.kind() != ModelKind::PulseLength)
    throw std::invalid_argument("negative rotation angles are undefined under off-resonance errors");
  return propagator(Pulse::normalized(theta, phi), m);
}

double fidelity(const Unitary2& v, const Unitary2& u) { return 0.5 * std::abs((v * u.adjoint()).trace()); }

double infidelity(const Unitary2& v, const Unitary2& u) {
  // V U^dagger = e^{ig} (cos a I - i sin a n.sigma): the Pauli part carries sin^2 a
  // and 1 - |cos a| = sin^2 a / (1 + |cos a|).
  const auto d = pauli_decompose(v * u.adjoint());
  const double s2 = std::norm(d.cx) + std::norm(d.cy) + std::norm(d.cz);
  return s2 / (1.0 + std::abs(d.c0));
}

}  // namespace cpulse
