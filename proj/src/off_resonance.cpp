#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cpulse/sequences.hpp"

namespace cpulse {

namespace {

constexpr double kPi = std::numbers::pi;

PulseSequence pi_pulses(std::initializer_list<double> phases) {
  PulseSequence seq;
  for (double ph : phases) seq.push(kPi, ph);
  return seq;
}

PulseSequence named(PulseSequence seq, std::string name, double target = 0.0) {
  seq.rename(std::move(name));
  seq.set_target(target);
  seq.set_native_model(ModelKind::OffResonance);
  return seq;
}

}  // namespace

CorpseAngles corpse_angles(double theta, int na, int nb, int nc) {
  if (!std::isfinite(theta)) throw std::invalid_argument("corpse: target angle must be finite");
  if (na < 0 || nb < 0 || nc < 0) throw std::invalid_argument("corpse: integers must be non-negative");
  const double k = std::asin(std::sin(theta / 2.0) / 2.0);
  CorpseAngles out;
  out.na = na;
  out.nb = nb;
  out.nc = nc;
  out.theta_a = na * 2.0 * kPi + theta / 2.0 - k;
  out.theta_b = nb * 2.0 * kPi - 2.0 * k;
  out.theta_c = nc * 2.0 * kPi + theta / 2.0 - k;
  return out;
}

PulseSequence corpse(double theta, int na, int nb, int nc, double phase) {
  const auto a = corpse_angles(theta, na, nb, nc);
  if (!(a.theta_a > 0.0 && a.theta_b > 0.0 && a.theta_c > 0.0))
    throw std::invalid_argument("corpse: every segment angle must be positive");
  PulseSequence seq("corpse", theta, {}, ModelKind::OffResonance);
  seq.push(a.theta_a, phase).push(a.theta_b, phase + kPi).push(a.theta_c, phase);
  return seq;
}

PulseSequence corpse(double theta, CorpsePreset preset, double phase) {
  if (preset == CorpsePreset::ShortCorpse) return corpse(theta, 0, 1, 0, phase).rename("short-corpse");
  return corpse(theta, 1, 1, 0, phase);
}

namespace ore {

PulseSequence b1(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("B1: phase must be finite");
  if (phi < 0.0) phi = kPi - phi;
  PulseSequence seq;
  if (phi > 0.0) seq.push(phi, 0.0).push(2.0 * phi, kPi).push(phi, 0.0);
  return named(seq, "B1");
}

PulseSequence y1_prime(double phi) {
  return named(pi_pulses({kPi - phi, -phi, kPi + phi, phi}), "Y1prime");
}

PulseSequence x1(double phi) {
  return named(pi_pulses({1.5 * kPi + phi, 0.5 * kPi + phi, 1.5 * kPi - phi, 0.5 * kPi - phi}), "X1");
}

PulseSequence y1(double phi) { return named(pi_pulses({phi, kPi + phi, -phi, kPi - phi}), "Y1"); }

PulseSequence x1_prime(double phi) {
  return named(pi_pulses({0.5 * kPi - phi, 1.5 * kPi - phi, 0.5 * kPi + phi, 1.5 * kPi + phi}), "X1prime");
}

// X1' and Y1' stand in for the inverses of X1 and Y1 (correct to first order).
PulseSequence z2(double phi) {
  return named(concat({y1_prime(phi), x1_prime(phi), y1(phi), x1(phi)}), "Z2");
}

PulseSequence z2_prime(double phi) {
  return named(concat({x1_prime(phi), y1_prime(phi), x1(phi), y1(phi)}), "Z2prime");
}

PulseSequence x2(double phi) {
  return named(concat({b1(1.5 * kPi), y1_prime(phi), b1(0.5 * kPi), y1(phi)}), "X2");
}

}  // namespace ore

PulseSequence or_pure_error(OreTerm kind, double phi) {
  switch (kind) {
    case OreTerm::B1:
      return ore::b1(phi);
    case OreTerm::Y1prime:
      return ore::y1_prime(phi);
    case OreTerm::X1:
      return ore::x1(phi);
    case OreTerm::Y1:
      return ore::y1(phi);
    case OreTerm::X1prime:
      return ore::x1_prime(phi);
    case OreTerm::Z2:
      return ore::z2(phi);
    case OreTerm::Z2prime:
      return ore::z2_prime(phi);
    case OreTerm::X2:
      return ore::x2(phi);
  }
  throw std::invalid_argument("unknown off-resonance pure error term");
}

PulseSequence or_corrected(OrCorrected variant, double theta) {
  const double phi1 = std::acos(-0.25);
  PulseSequence seq("", kPi, {Pulse(kPi, 0.0)}, ModelKind::OffResonance);

  switch (variant) {
    case OrCorrected::FirstPi:
      seq.then(ore::y1_prime(phi1));
      seq.set_meta("phi1", phi1);
      return seq.rename("or-first");

    case OrCorrected::FirstGeneral: {
      if (!std::isfinite(theta) || theta <= 0.0 || theta > 2.0 * kPi + 1e-12)
        throw std::invalid_argument("or-first-general: target angle must lie in (0, 2pi]");
      const double s = std::sin(theta / 2.0);
      const double phi_y = std::acos(-s * s / 4.0);
      double phi_z = -std::asin(std::sin(theta) / 4.0);
      if (std::abs(phi_z) < 1e-12) phi_z = 0.0;
      PulseSequence out("or-first-general", theta, {Pulse(theta, 0.0)}, ModelKind::OffResonance);
      out.then(ore::y1_prime(phi_y)).then(ore::b1(phi_z));
      out.set_meta("phi1y", phi_y).set_meta("phi1z", phi_z);
      return out;
    }

    case OrCorrected::SecondCorpseRotated: {
      const double psi2 = std::atan(kPi / (2.0 * std::sqrt(15.0)));
      const double phi2 = std::acos(std::pow(60.0 + kPi * kPi, 0.25) / (8.0 * std::sqrt(2.0)));
      seq.then(ore::y1_prime(phi1))
          .then(corpse(psi2, CorpsePreset::Corpse, 1.5 * kPi))
          .then(ore::z2_prime(phi2))
          .then(corpse(psi2, CorpsePreset::Corpse, 0.5 * kPi));
      seq.set_meta("phi1", phi1).set_meta("phi2", phi2).set_meta("psi2", psi2);
      return seq.rename("or-second-corpse");
    }

    case OrCorrected::SecondXZ: {
      const double phi2x = std::acos(-kPi / 64.0);
      const double phi2z = std::acos(std::pow(15.0, 0.25) / 8.0);
      seq.then(ore::y1_prime(phi1)).then(ore::z2_prime(phi2z)).then(ore::x2(phi2x));
      seq.set_meta("phi1", phi1).set_meta("phi2x", phi2x).set_meta("phi2z", phi2z);
      return seq.rename("or-second-xz");
    }

    case OrCorrected::TimeSymmetric: {
      const double phi1p = std::acos(-0.125);
      PulseSequence out = ore::y1(phi1p);
      out.then(seq).then(ore::y1_prime(phi1p));
      out.set_target(kPi).set_native_model(ModelKind::OffResonance);
      out.set_meta("phi1_prime", phi1p);
      return out.rename("or-timesym");
    }

    case OrCorrected::SimultaneousPi: {
      PulseSequence out("simultaneous", kPi, {}, ModelKind::Simultaneous);
      out.push(kPi, 0.0)
          .push(kPi, phi1)
          .push(2.0 * kPi, 3.0 * phi1)
          .push(kPi, phi1)
          .push(kPi, kPi - phi1)
          .push(kPi, -phi1)
          .push(kPi, kPi + phi1)
          .push(kPi, phi1);
      out.set_meta("phi1", phi1);
      return out;
    }
  }
  throw std::invalid_argument("unknown off-resonance corrected sequence");
}

}  // namespace cpulse
