#ifndef CPULSE_SEQUENCES_HPP
#define CPULSE_SEQUENCES_HPP

#include <stdexcept>
#include <string>

#include "cpulse/sequence.hpp"

namespace cpulse {

// ---------------------------------------------------------------------------
// Phase solvers
// ---------------------------------------------------------------------------

// arccos(-theta / 4pi): BB1 phase and first-order pulse-length correction.
double bb1_phase(double theta);
// arccos((16 pi^2 theta^2 - theta^4)^(1/4) / (8 pi)), both signs positive.
double second_order_phase(double theta);
// arccos(-theta sqrt(16 pi^2 - theta^2) / (32 pi^2)) for the six-pulse z term.
double six_pulse_beta(double theta);

// ---------------------------------------------------------------------------
// Pulse-length error family (2pi pulse pure error terms)
// ---------------------------------------------------------------------------

namespace ple {

// 1 - 2i pi cos(phi) eps X
PulseSequence x1(double phi);
PulseSequence y1(double phi);
PulseSequence x1_inv(double phi);
PulseSequence y1_inv(double phi);
// X1 sandwiched between pi/2 pulses, carrying its error onto Z.
PulseSequence z1(double phi);
PulseSequence z1_inv(double phi);
// 1 -/+ 8i pi^2 cos^2(phi) eps^2 Z
PulseSequence z2(double phi);
PulseSequence z2_prime(double phi);
// 1 - 8i pi^2 cos(alpha) cos(beta) eps^2 Z
PulseSequence z2_general(double alpha, double beta);
// 1 - 4i pi^2 cos(beta) eps^2 Z with six pulses
PulseSequence six_pulse_z2(double beta);
// Commutator of Z1 and Y1: 1 + 8i pi^2 cos^2(phi) eps^2 X
PulseSequence x2_prime(double phi);
// 1 - 32i pi^3 cos^3(phi) eps^3 X
PulseSequence x3(double phi);

}  // namespace ple

enum class PleTerm { X1, Y1, X1inv, Y1inv, Z1, Z1inv, Z2, Z2prime, Z2general, SixPulseZ2, X2prime, X3 };

// Dispatches to the ple:: constructors. `beta` is used by Z2general (as its
// second phase) and ignored elsewhere; SixPulseZ2 takes its phase from `phi`.
PulseSequence ple_pure_error(PleTerm kind, double phi, double beta = 0.0);

PulseSequence simple_pulse(double theta, ModelKind model = ModelKind::PulseLength);

// chronological [V(theta,0), V(pi,pa), V(2pi,3pa), V(pi,pa)], pa = arccos(-theta/4pi)
// Throws std::invalid_argument unless 0 < theta <= 4pi.
PulseSequence bb1(double theta);

enum class SkOrder { First, Second, SecondRotated, SecondSixPulse, Third };

// Sign choices for the first and second order correction phases.
struct SkSigns {
  bool phi1_positive = true;
  bool phi2_outer_positive = true;
  bool phi2_inner_positive = true;
};

PulseSequence sk_corrected(double theta, SkOrder order, SkSigns signs = {});

struct ThirdOrderSolution {
  double phi3 = 0.0;
  double delta = 0.0;
  int iterations = 0;
  double residual_norm = 0.0;
};

class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, ThirdOrderSolution best)
      : std::runtime_error(what), best_(best) {}
  const ThirdOrderSolution& best() const { return best_; }

 private:
  ThirdOrderSolution best_;
};

// Phase and phase shift of an X3 term cancelling the third order error of
// BB1(pi). Damped Newton on the two in-plane generator components of the
// degree-3 residual. Returns phi3 in (0, pi/2] and delta in (-pi, pi].
ThirdOrderSolution solve_third_order(double phi3_guess, double delta_guess);
ThirdOrderSolution solve_third_order();

// ---------------------------------------------------------------------------
// Off-resonance family
// ---------------------------------------------------------------------------

struct CorpseAngles {
  int na = 0, nb = 0, nc = 0;
  double theta_a = 0.0, theta_b = 0.0, theta_c = 0.0;
};

CorpseAngles corpse_angles(double theta, int na, int nb, int nc);

enum class CorpsePreset { Corpse, ShortCorpse };

// chronological [V(ta, phase), V(tb, phase + pi), V(tc, phase)]
PulseSequence corpse(double theta, CorpsePreset preset = CorpsePreset::Corpse, double phase = 0.0);
PulseSequence corpse(double theta, int na, int nb, int nc, double phase = 0.0);

namespace ore {

// 1 - 2i sin(phi) f Z. A negative phi is realised as B1(pi - phi), which has
// the same first order term with non-negative pulse angles.
PulseSequence b1(double phi);
// 1 + 4i cos(phi) f Y
PulseSequence y1_prime(double phi);
// 1 - 4i cos(phi) f X
PulseSequence x1(double phi);
// 1 - 4i cos(phi) f Y
PulseSequence y1(double phi);
// 1 + 4i cos(phi) f X
PulseSequence x1_prime(double phi);
// 1 -/+ 32i cos^2(phi) f^2 Z
PulseSequence z2(double phi);
PulseSequence z2_prime(double phi);
// 1 - 16i cos(phi) f^2 X
PulseSequence x2(double phi);

}  // namespace ore

enum class OreTerm { B1, Y1prime, X1, Y1, X1prime, Z2, Z2prime, X2 };

PulseSequence or_pure_error(OreTerm kind, double phi);

enum class OrCorrected { FirstPi, FirstGeneral, SecondCorpseRotated, SecondXZ, TimeSymmetric, SimultaneousPi };

// `theta` is only read by FirstGeneral (0 < theta <= 2pi); the others are
// 180 degree pulses.
PulseSequence or_corrected(OrCorrected variant, double theta = 0.0);

}  // namespace cpulse

#endif  // CPULSE_SEQUENCES_HPP
