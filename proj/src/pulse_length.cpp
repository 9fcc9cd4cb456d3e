#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cpulse/error_series.hpp"
#include "cpulse/sequences.hpp"

namespace cpulse {

namespace {

constexpr double kPi = std::numbers::pi;

void require_theta_range(double theta, double hi, const char* who) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta > hi + 1e-12)
    throw std::invalid_argument(std::string(who) + ": target angle out of range");
}

PulseSequence named(PulseSequence seq, std::string name, double target = 0.0) {
  seq.rename(std::move(name));
  seq.set_target(target);
  seq.set_native_model(ModelKind::PulseLength);
  return seq;
}

PulseSequence two_pi_pair(double first_phase, double second_phase) {
  PulseSequence seq;
  seq.push(2.0 * kPi, first_phase).push(2.0 * kPi, second_phase);
  return seq;
}

PulseSequence sandwich_onto_z(const PulseSequence& inner) {
  PulseSequence seq;
  seq.push(kPi / 2.0, kPi / 2.0);
  seq.then(inner);
  seq.push(kPi / 2.0, 3.0 * kPi / 2.0);
  return seq;
}

}  // namespace

double bb1_phase(double theta) { return std::acos(-theta / (4.0 * kPi)); }

double second_order_phase(double theta) {
  const double q = 16.0 * kPi * kPi * theta * theta - std::pow(theta, 4);
  return std::acos(std::pow(std::max(q, 0.0), 0.25) / (8.0 * kPi));
}

double six_pulse_beta(double theta) {
  return std::acos(-theta * std::sqrt(std::max(16.0 * kPi * kPi - theta * theta, 0.0)) /
                   (32.0 * kPi * kPi));
}

namespace ple {

PulseSequence x1(double phi) { return named(two_pi_pair(-phi, phi), "X1"); }
PulseSequence y1(double phi) { return named(two_pi_pair(kPi / 2.0 - phi, kPi / 2.0 + phi), "Y1"); }
PulseSequence x1_inv(double phi) { return named(reversed_inverse(x1(phi)), "X1inv"); }
PulseSequence y1_inv(double phi) { return named(reversed_inverse(y1(phi)), "Y1inv"); }

PulseSequence z1(double phi) { return named(sandwich_onto_z(x1(phi)), "Z1"); }
PulseSequence z1_inv(double phi) { return named(sandwich_onto_z(x1_inv(phi)), "Z1inv"); }

// Group commutator A B A^-1 B^-1 in product notation acts B^-1 first.
PulseSequence z2(double phi) {
  return named(concat({y1_inv(phi), x1_inv(phi), y1(phi), x1(phi)}), "Z2");
}

PulseSequence z2_prime(double phi) {
  return named(concat({x1_inv(phi), y1_inv(phi), x1(phi), y1(phi)}), "Z2prime");
}

PulseSequence z2_general(double alpha, double beta) {
  return named(concat({y1_inv(beta), x1_inv(alpha), y1(beta), x1(alpha)}), "Z2general");
}

PulseSequence six_pulse_z2(double beta) {
  PulseSequence seq = y1_inv(beta);
  seq.push(2.0 * kPi, kPi);
  seq.then(y1(beta));
  seq.push(2.0 * kPi, 0.0);
  return named(seq, "SixPulseZ2");
}

PulseSequence x2_prime(double phi) {
  return named(concat({y1_inv(phi), z1_inv(phi), y1(phi), z1(phi)}), "X2prime");
}

PulseSequence x3(double phi) {
  return named(concat({z2_prime(phi), y1_inv(phi), z2(phi), y1(phi)}), "X3");
}

}  // namespace ple

PulseSequence ple_pure_error(PleTerm kind, double phi, double beta) {
  switch (kind) {
    case PleTerm::X1:
      return ple::x1(phi);
    case PleTerm::Y1:
      return ple::y1(phi);
    case PleTerm::X1inv:
      return ple::x1_inv(phi);
    case PleTerm::Y1inv:
      return ple::y1_inv(phi);
    case PleTerm::Z1:
      return ple::z1(phi);
    case PleTerm::Z1inv:
      return ple::z1_inv(phi);
    case PleTerm::Z2:
      return ple::z2(phi);
    case PleTerm::Z2prime:
      return ple::z2_prime(phi);
    case PleTerm::Z2general:
      return ple::z2_general(phi, beta);
    case PleTerm::SixPulseZ2:
      return ple::six_pulse_z2(phi);
    case PleTerm::X2prime:
      return ple::x2_prime(phi);
    case PleTerm::X3:
      return ple::x3(phi);
  }
  throw std::invalid_argument("unknown pulse-length pure error term");
}

PulseSequence simple_pulse(double theta, ModelKind model) {
  PulseSequence seq("simple", theta, {Pulse(theta, 0.0)}, model);
  return seq;
}

PulseSequence bb1(double theta) {
  require_theta_range(theta, 4.0 * kPi, "bb1");
  const double pa = bb1_phase(theta);
  PulseSequence seq("bb1", theta);
  seq.push(theta, 0.0).push(kPi, pa).push(2.0 * kPi, 3.0 * pa).push(kPi, pa);
  seq.set_meta("phi_a", pa);
  return seq;
}

namespace {

// Degree-3 generator (x, y) of BB1(pi) followed by X3(phi) shifted by delta.
std::array<double, 2> third_order_components(const MatrixSeries& bb1_residual, double phi,
                                             double delta) {
  constexpr int kDegree = 3;
  const auto correction = sequence_series(shift_phases(ple::x3(phi), delta), ModelKind::PulseLength, kDegree);
  const auto total = normalize_phase(correction * bb1_residual);
  const auto w = pauli_term(total, 3, 0).generator();
  return {w[0], w[1]};
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

}  // namespace

ThirdOrderSolution solve_third_order(double phi3_guess, double delta_guess) {
  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-10;
  constexpr double kStep = 1e-6;

  const auto bb1_res = residual(bb1(kPi), kPi, ModelKind::PulseLength, 3);
  auto eval = [&](double p, double d) { return third_order_components(bb1_res, p, d); };
  auto norm = [](const std::array<double, 2>& r) { return std::hypot(r[0], r[1]); };

  ThirdOrderSolution cur{phi3_guess, delta_guess, 0, 0.0};
  auto r = eval(cur.phi3, cur.delta);
  cur.residual_norm = norm(r);

  while (cur.residual_norm > kTolerance) {
    if (cur.iterations >= kMaxIterations)
      throw SolverFailure("third-order phase solver did not converge", cur);
    ++cur.iterations;

    const auto rp_plus = eval(cur.phi3 + kStep, cur.delta);
    const auto rp_minus = eval(cur.phi3 - kStep, cur.delta);
    const auto rd_plus = eval(cur.phi3, cur.delta + kStep);
    const auto rd_minus = eval(cur.phi3, cur.delta - kStep);
    const double j00 = (rp_plus[0] - rp_minus[0]) / (2 * kStep);
    const double j10 = (rp_plus[1] - rp_minus[1]) / (2 * kStep);
    const double j01 = (rd_plus[0] - rd_minus[0]) / (2 * kStep);
    const double j11 = (rd_plus[1] - rd_minus[1]) / (2 * kStep);
    const double det = j00 * j11 - j01 * j10;
    if (std::abs(det) < 1e-300) throw SolverFailure("singular Jacobian in third-order solver", cur);
    const double dp = -(j11 * r[0] - j01 * r[1]) / det;
    const double dd = -(-j10 * r[0] + j00 * r[1]) / det;

    double lambda = 1.0;
    for (;;) {
      const double p = cur.phi3 + lambda * dp;
      const double d = cur.delta + lambda * dd;
      const auto trial = eval(p, d);
      if (norm(trial) < cur.residual_norm || lambda < 1e-6) {
        cur.phi3 = p;
        cur.delta = d;
        r = trial;
        cur.residual_norm = norm(trial);
        break;
      }
      lambda *= 0.5;
    }
  }

  // Only cos^3(phi3) and the direction matter at third order; pick the acute phase.
  const double c = std::cos(cur.phi3);
  ThirdOrderSolution out = cur;
  out.phi3 = std::acos(std::abs(c));
  out.delta = wrap_angle(c < 0.0 ? cur.delta + kPi : cur.delta);
  out.residual_norm = norm(eval(out.phi3, out.delta));
  return out;
}

ThirdOrderSolution solve_third_order() {
  // Start from the values quoted in the literature for this construction.
  return solve_third_order(73.1 * kPi / 180.0, -1.6 * kPi / 180.0);
}

PulseSequence sk_corrected(double theta, SkOrder order, SkSigns signs) {
  require_theta_range(theta, 4.0 * kPi, "sk_corrected");
  if (order == SkOrder::Third && std::abs(theta - kPi) > 1e-12)
    throw std::domain_error("third order pulse-length correction is only available for theta = pi");

  if (order == SkOrder::Third) {
    const auto sol = solve_third_order();
    PulseSequence seq = bb1(kPi);
    seq.then(shift_phases(ple::x3(sol.phi3), sol.delta));
    seq.rename("sk3");
    seq.set_meta("phi3", sol.phi3).set_meta("delta", sol.delta);
    return seq;
  }

  const double phi1 = signs.phi1_positive ? bb1_phase(theta) : -bb1_phase(theta);
  PulseSequence seq("sk1", theta, {Pulse(theta, 0.0)});
  seq.then(ple::x1(phi1));
  seq.set_meta("phi1", phi1);
  if (order == SkOrder::First) return seq;

  // A negative phi1 flips the sign of the second order error.
  const bool flip = !signs.phi1_positive;
  if (order == SkOrder::SecondSixPulse) {
    const double beta = flip ? kPi - six_pulse_beta(theta) : six_pulse_beta(theta);
    seq.then(ple::six_pulse_z2(beta));
    seq.rename("sk2six");
    seq.set_meta("beta", beta);
    return seq;
  }

  double phi2 = second_order_phase(theta);
  if (!signs.phi2_inner_positive) phi2 = kPi - phi2;
  if (!signs.phi2_outer_positive) phi2 = -phi2;
  seq.set_meta("phi2", phi2);

  if (order == SkOrder::Second) {
    seq.then(flip ? ple::z2(phi2) : ple::z2_prime(phi2));
    seq.rename("sk2");
    return seq;
  }

  // Rotated form: the Z2' term is built as an X2' term carried onto z by
  // erroneous pi/2 pulses, itself assembled from Z1 and Y1.
  const auto x_term = flip ? concat({ple::z1_inv(phi2), ple::y1_inv(phi2), ple::z1(phi2), ple::y1(phi2)})
                           : ple::x2_prime(phi2);
  seq.then(sandwich_onto_z(x_term));
  seq.rename("sk2rot");
  return seq;
}

}  // namespace cpulse
