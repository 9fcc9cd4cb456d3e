#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "cpulse/error_series.hpp"
#include "cpulse/sequences.hpp"
#include "oracles.hpp"

using namespace cpulse;
using std::numbers::pi;

namespace {

constexpr double kDeg = pi / 180.0;
const double kPhis[] = {0.0, 0.37, 1.2, 2.05, 4.4};

std::optional<int> order_of(const PulseSequence& seq, ModelKind model) {
  return leading_error(normalize_phase(residual(seq, model))).order;
}

// Degree-d Pauli vector of a sequence whose target is the identity.
PauliVector term(const PulseSequence& seq, ModelKind model, int d) {
  const auto a = normalize_phase(residual(seq, Unitary2::identity(), model, d));
  return model == ModelKind::OffResonance ? pauli_term(a, 0, d) : pauli_term(a, d, 0);
}

void check_vector(const PauliVector& v, cplx x, cplx y, cplx z, double tol = 1e-9) {
  CHECK(std::abs(v.x - x) < tol);
  CHECK(std::abs(v.y - y) < tol);
  CHECK(std::abs(v.z - z) < tol);
}

const cplx I{0.0, 1.0};

}  // namespace

TEST_CASE("BB1") {
  CHECK(bb1(pi).meta("phi_a").value() / kDeg == doctest::Approx(104.4775).epsilon(1e-6));
  CHECK(bb1(2 * pi).meta("phi_a").value() / kDeg == doctest::Approx(120.0).epsilon(1e-12));
  for (double theta : {pi / 2, pi, 3 * pi / 2}) CHECK(order_of(bb1(theta), ModelKind::PulseLength) == 3);
  const auto seq = bb1(pi / 2);
  REQUIRE(seq.size() == 4);
  const double pa = std::acos(-1.0 / 8.0);
  CHECK(seq.pulses()[0] == Pulse(pi / 2, 0.0));
  CHECK(seq.pulses()[1] == Pulse(pi, pa));
  CHECK(seq.pulses()[2] == Pulse(2 * pi, 3 * pa));
  CHECK(seq.pulses()[3] == Pulse(pi, pa));
  CHECK_THROWS_AS(bb1(0.0), std::invalid_argument);
  CHECK_THROWS_AS(bb1(4 * pi + 0.01), std::invalid_argument);
  CHECK_NOTHROW(bb1(4 * pi));
}

TEST_CASE("pulse-length pure error terms") {
  const auto P = ModelKind::PulseLength;
  for (double phi : kPhis) {
    const double c = std::cos(phi);
    check_vector(term(ple::x1(phi), P, 1), -I * 2.0 * pi * c, 0.0, 0.0);
    check_vector(term(ple::y1(phi), P, 1), 0.0, -I * 2.0 * pi * c, 0.0);
    check_vector(term(ple::x1_inv(phi), P, 1), I * 2.0 * pi * c, 0.0, 0.0);
    check_vector(term(ple::y1_inv(phi), P, 1), 0.0, I * 2.0 * pi * c, 0.0);
    check_vector(term(ple::z1(phi), P, 1), 0.0, 0.0, -I * 2.0 * pi * c);
    check_vector(term(ple::z1_inv(phi), P, 1), 0.0, 0.0, I * 2.0 * pi * c);
    for (auto seq : {ple::z2(phi), ple::z2_prime(phi), ple::x2_prime(phi), ple::x3(phi)})
      CHECK(term(seq, P, 1).norm() < 1e-10);
    check_vector(term(ple::z2(phi), P, 2), 0.0, 0.0, -I * 8.0 * pi * pi * c * c);
    check_vector(term(ple::z2_prime(phi), P, 2), 0.0, 0.0, I * 8.0 * pi * pi * c * c);
    // Commutator of Z1 and Y1 points along z x y = -x.
    check_vector(term(ple::x2_prime(phi), P, 2), I * 8.0 * pi * pi * c * c, 0.0, 0.0);
    CHECK(term(ple::x3(phi), P, 2).norm() < 1e-9);
    check_vector(term(ple::x3(phi), P, 3), -I * 32.0 * std::pow(pi, 3) * c * c * c, 0.0, 0.0, 1e-8);

    const double beta = 2.6 - phi;
    check_vector(term(ple::z2_general(phi, beta), P, 2), 0.0, 0.0,
                 -I * 8.0 * pi * pi * c * std::cos(beta));
    CHECK(term(ple::six_pulse_z2(phi), P, 1).norm() < 1e-10);
    check_vector(term(ple::six_pulse_z2(phi), P, 2), 0.0, 0.0, -I * 4.0 * pi * pi * c);
    CHECK(ple::six_pulse_z2(phi).size() == 6);
  }
  const auto ref = oracle::residual_coefficient(ple::x3(0.4), 0.0, false, 3);
  CHECK(std::abs(ref.x + I * 32.0 * std::pow(pi, 3) * std::pow(std::cos(0.4), 3)) < 1e-7);
}

TEST_CASE("pure error dispatch") {
  CHECK(ple_pure_error(PleTerm::X3, 0.3).size() == ple::x3(0.3).size());
  CHECK(ple_pure_error(PleTerm::Z2general, 0.3, 0.9).pulses() == ple::z2_general(0.3, 0.9).pulses());
  CHECK(or_pure_error(OreTerm::X2, 0.3).pulses() == ore::x2(0.3).pulses());
}

TEST_CASE("pulse-length inverses are exact") {
  for (double phi : kPhis)
    for (double e : {-0.3, 0.05, 0.2}) {
      const auto m = ErrorModel::pulse_length(e);
      CHECK(distance(compose(ple::x1_inv(phi), m) * compose(ple::x1(phi), m), Mat2::identity()) <= 1e-12);
      CHECK(distance(compose(ple::y1_inv(phi), m) * compose(ple::y1(phi), m), Mat2::identity()) <= 1e-12);
    }
}

TEST_CASE("pi/2 sandwich rotates an x error onto z") {
  for (double phi : kPhis) {
    const auto rotated = concat({PulseSequence("", 0, {Pulse(pi / 2, pi / 2)}), ple::x1(phi),
                                 PulseSequence("", 0, {Pulse(pi / 2, 3 * pi / 2)})});
    const auto a = normalize_phase(residual(rotated, Unitary2::identity(), ModelKind::PulseLength, 1));
    const auto b = normalize_phase(residual(ple::x1(phi), Unitary2::identity(), ModelKind::PulseLength, 1));
    CHECK(std::abs(pauli_term(a, 1, 0).z - pauli_term(b, 1, 0).x) < 1e-10);
  }
}

TEST_CASE("off-resonance pure error terms") {
  const auto F = ModelKind::OffResonance;
  for (double phi : kPhis) {
    const double c = std::cos(phi), s = std::sin(phi);
    if (!ore::b1(phi).empty()) check_vector(term(ore::b1(phi), F, 1), 0.0, 0.0, -I * 2.0 * s);
    check_vector(term(ore::y1_prime(phi), F, 1), 0.0, I * 4.0 * c, 0.0);
    check_vector(term(ore::x1(phi), F, 1), -I * 4.0 * c, 0.0, 0.0);
    check_vector(term(ore::y1(phi), F, 1), 0.0, -I * 4.0 * c, 0.0);
    check_vector(term(ore::x1_prime(phi), F, 1), I * 4.0 * c, 0.0, 0.0);
    for (auto seq : {ore::z2(phi), ore::z2_prime(phi), ore::x2(phi)}) CHECK(term(seq, F, 1).norm() < 1e-10);
    check_vector(term(ore::z2(phi), F, 2), 0.0, 0.0, -I * 32.0 * c * c);
    check_vector(term(ore::z2_prime(phi), F, 2), 0.0, 0.0, I * 32.0 * c * c);
    check_vector(term(ore::x2(phi), F, 2), -I * 16.0 * c, 0.0, 0.0);
    // X1' stands in for the inverse of X1 to first order.
    CHECK(leading_error(normalize_phase(residual(concat({ore::x1(phi), ore::x1_prime(phi)}), Unitary2::identity(), F)))
              .order.value_or(99) >= 2);
  }
}

TEST_CASE("negative B1 phases") {
  for (double phi : {-0.3, -1.0, -2.5}) {
    const auto seq = ore::b1(phi);
    for (const auto& p : seq.pulses()) CHECK(p.angle() > 0.0);
    check_vector(term(seq, ModelKind::OffResonance, 1), 0.0, 0.0, -I * 2.0 * std::sin(phi));
    CHECK(distance(compose(seq, ErrorModel::off_resonance(0.0)), Mat2::identity()) < 1e-14);
  }
  CHECK(ore::b1(0.0).empty());
}

TEST_CASE("Solovay-Kitaev style corrections") {
  SUBCASE("first order") {
    const auto seq = sk_corrected(pi, SkOrder::First);
    CHECK(seq.size() == 3);
    CHECK(order_of(seq, ModelKind::PulseLength) == 2);
    CHECK(seq.meta("phi1").value() == doctest::Approx(std::acos(-0.25)));
  }
  SUBCASE("second order") {
    const auto seq = sk_corrected(pi, SkOrder::Second);
    CHECK(seq.size() == 11);
    CHECK(seq.meta("phi2").value() / kDeg == doctest::Approx(75.759).epsilon(1e-5));
    CHECK(std::cos(seq.meta("phi2").value()) == doctest::Approx(std::pow(15.0, 0.25) / 8).epsilon(1e-14));
    for (double theta : {pi / 4, pi / 2, pi, 3 * pi / 2, 3 * pi}) {
      CHECK(order_of(sk_corrected(theta, SkOrder::Second), ModelKind::PulseLength) == 3);
      CHECK(order_of(sk_corrected(theta, SkOrder::SecondRotated), ModelKind::PulseLength) == 3);
      CHECK(order_of(sk_corrected(theta, SkOrder::SecondSixPulse), ModelKind::PulseLength) == 3);
    }
  }
  SUBCASE("every sign choice keeps second order correction") {
    for (int mask = 0; mask < 8; ++mask) {
      const SkSigns signs{(mask & 1) == 0, (mask & 2) == 0, (mask & 4) == 0};
      for (auto order : {SkOrder::Second, SkOrder::SecondRotated})
        CHECK_MESSAGE(order_of(sk_corrected(2.0, order, signs), ModelKind::PulseLength) == 3, "mask " << mask);
      CHECK(order_of(sk_corrected(2.0, SkOrder::First, signs), ModelKind::PulseLength) == 2);
    }
    CHECK(order_of(sk_corrected(2.0, SkOrder::SecondSixPulse, {false, true, true}), ModelKind::PulseLength) == 3);
  }
  SUBCASE("third order") {
    const auto seq = sk_corrected(pi, SkOrder::Third);
    CHECK(order_of(seq, ModelKind::PulseLength) == 4);
    CHECK(seq.size() == 4 + 20);
    CHECK_THROWS_AS(sk_corrected(pi / 2, SkOrder::Third), std::domain_error);
  }
  SUBCASE("range") {
    CHECK_THROWS_AS(sk_corrected(0.0, SkOrder::First), std::invalid_argument);
    CHECK_THROWS_AS(sk_corrected(13.0, SkOrder::Second), std::invalid_argument);
  }
}

TEST_CASE("third order phase solver") {
  const auto sol = solve_third_order();
  CHECK(sol.residual_norm <= 1e-10);
  CHECK(sol.phi3 > 0.0);
  CHECK(sol.phi3 <= pi / 2);
  CHECK(sol.delta > -pi);
  CHECK(sol.delta <= pi);
  const auto full = concat({bb1(pi), shift_phases(ple::x3(sol.phi3), sol.delta)});
  const auto a = normalize_phase(residual(full, pi, ModelKind::PulseLength, 3));
  CHECK(pauli_term(a, 3, 0).norm() <= 1e-9);
  // cos^3(phi3) 32 pi^3 must equal the BB1 third order magnitude.
  const auto b = normalize_phase(residual(bb1(pi), pi, ModelKind::PulseLength, 3));
  CHECK(32 * std::pow(pi, 3) * std::pow(std::cos(sol.phi3), 3) == doctest::Approx(pauli_term(b, 3, 0).norm()).epsilon(1e-9));
  // Any starting point in the basin gives the same canonical root.
  const auto other = solve_third_order(100 * kDeg, 30 * kDeg);
  CHECK(other.phi3 == doctest::Approx(sol.phi3).epsilon(1e-8));
  CHECK(other.delta == doctest::Approx(sol.delta).epsilon(1e-8));
}

TEST_CASE("CORPSE") {
  const auto a = corpse_angles(pi, 1, 1, 0);
  CHECK(a.theta_a == doctest::Approx(2 * pi + pi / 3).epsilon(1e-14));
  CHECK(a.theta_b == doctest::Approx(2 * pi - pi / 3).epsilon(1e-14));
  CHECK(a.theta_c == doctest::Approx(pi / 3).epsilon(1e-14));
  const auto seq = corpse(pi);
  REQUIRE(seq.size() == 3);
  CHECK(seq.pulses()[1].phase() == doctest::Approx(pi));
  for (double theta : {pi / 2, pi}) {
    CHECK(order_of(corpse(theta), ModelKind::OffResonance) == 2);
    CHECK(order_of(corpse(theta, CorpsePreset::ShortCorpse), ModelKind::OffResonance) == 2);
  }
  CHECK(corpse(pi, CorpsePreset::ShortCorpse).name() == "short-corpse");
  CHECK_THROWS_AS(corpse(pi, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(corpse_angles(pi, -1, 0, 0), std::invalid_argument);
}

TEST_CASE("CORPSE pair is a third order identity") {
  for (double theta : {pi / 3, pi / 2, pi})
    for (auto preset : {CorpsePreset::Corpse, CorpsePreset::ShortCorpse}) {
      const auto pair = concat({corpse(theta, preset, 0.0), corpse(theta, preset, pi)});
      const auto r = leading_error(normalize_phase(residual(pair, Unitary2::identity(), ModelKind::OffResonance)));
      REQUIRE(r.order.has_value());
      CHECK(*r.order >= 3);
    }
  PulseSequence plain("pair", 0.0, {Pulse(1.0, 0.0), Pulse(1.0, pi)});
  CHECK(order_of(plain, ModelKind::OffResonance) == 1);
}

TEST_CASE("off-resonance corrected sequences") {
  const auto first = or_corrected(OrCorrected::FirstPi);
  CHECK(first.meta("phi1").value() / kDeg == doctest::Approx(104.4775).epsilon(1e-6));
  CHECK(first.size() == 5);
  CHECK(order_of(first, ModelKind::OffResonance) == 2);

  const auto rot = or_corrected(OrCorrected::SecondCorpseRotated);
  CHECK(rot.meta("psi2").value() / kDeg == doctest::Approx(22.08).epsilon(1e-3));
  CHECK(rot.meta("phi2").value() / kDeg == doctest::Approx(75.2).epsilon(1e-3));
  CHECK(order_of(rot, ModelKind::OffResonance) == 3);

  const auto xz = or_corrected(OrCorrected::SecondXZ);
  CHECK(xz.meta("phi2x").value() / kDeg == doctest::Approx(92.81).epsilon(1e-3));
  CHECK(xz.meta("phi2z").value() / kDeg == doctest::Approx(75.76).epsilon(1e-3));
  CHECK(order_of(xz, ModelKind::OffResonance) == 3);

  const auto sym = or_corrected(OrCorrected::TimeSymmetric);
  CHECK(sym.meta("phi1_prime").value() / kDeg == doctest::Approx(97.18).epsilon(1e-3));
  CHECK(order_of(sym, ModelKind::OffResonance) == 2);
  CHECK(sym.size() == 9);

  for (double deg : {60.0, 120.0, 180.0, 240.0, 300.0}) {
    const auto g = or_corrected(OrCorrected::FirstGeneral, deg * kDeg);
    CHECK_MESSAGE(order_of(g, ModelKind::OffResonance) == 2, deg);
  }
  CHECK(or_corrected(OrCorrected::FirstGeneral, pi).size() == 5);
  CHECK_THROWS_AS(or_corrected(OrCorrected::FirstGeneral, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(or_corrected(OrCorrected::FirstGeneral, 2 * pi + 0.1), std::invalid_argument);
}

TEST_CASE("time-symmetric fidelity is even in f") {
  const auto sym = fidelity_series(residual(or_corrected(OrCorrected::TimeSymmetric), ModelKind::OffResonance));
  for (int k = 1; k <= kDefaultSeriesDegree; k += 2) CHECK(std::abs(sym.coeff(0, k)) < 1e-10);
  const auto first = fidelity_series(residual(or_corrected(OrCorrected::FirstPi), ModelKind::OffResonance));
  CHECK(std::abs(first.coeff(0, 5)) > 1.0);
}

TEST_CASE("simultaneous error pulse") {
  const auto seq = or_corrected(OrCorrected::SimultaneousPi);
  CHECK(seq.size() == 8);
  CHECK(seq.native_model() == ModelKind::Simultaneous);
  const auto f = fidelity_series(residual(seq, ModelKind::Simultaneous));
  CHECK(-f.coeff(0, 4).real() == doctest::Approx(15.0 / 8).epsilon(1e-6));
  CHECK(-f.coeff(6, 0).real() == doctest::Approx(5 * std::pow(pi, 6) / 1024).epsilon(1e-6));
  CHECK(-f.coeff(2, 2).real() == doctest::Approx(169 * pi * pi / 32).epsilon(1e-6));
  CHECK(f.coeff(2, 2).real() == doctest::Approx(oracle::fidelity_coefficient(seq, pi, 2, 2)).epsilon(1e-6));
  CHECK(order_of(seq, ModelKind::PulseLength) == 3);
  CHECK(order_of(seq, ModelKind::OffResonance) == 2);
}

TEST_CASE("phase shifts") {
  const auto seq = bb1(1.3);
  CHECK(shift_phases(seq, 0.0).pulses() == seq.pulses());

  const double d = 0.7;
  const auto shifted = shift_phases(seq, d);
  const auto a = leading_error(normalize_phase(residual(shifted, rotation(1.3, d), ModelKind::PulseLength)));
  CHECK(a.order == 3);

  const auto v0 = term(ple::x3(0.5), ModelKind::PulseLength, 3);
  const auto v1 = term(shift_phases(ple::x3(0.5), d), ModelKind::PulseLength, 3);
  const cplx rotated = std::polar(1.0, d) * (v0.x + I * v0.y);
  CHECK(std::abs((v1.x + I * v1.y) - rotated) < 1e-8);
  CHECK(std::abs(v1.z) < 1e-8);
}

TEST_CASE("sequence container") {
  PulseSequence seq("demo", 1.0);
  seq.push(1.0, 0.5).push(2.0, 1.0);
  CHECK(seq.total_angle() == doctest::Approx(3.0));
  const auto inv = reversed_inverse(seq);
  CHECK(inv.name() == "demo_inv");
  CHECK(inv.target_theta() == -1.0);
  CHECK(inv.pulses()[0] == Pulse(2.0, 1.0 + pi));
  CHECK(inv.pulses()[1] == Pulse(1.0, 0.5 + pi));
  PulseSequence later("later", 0.0);
  later.push(0.3, 0.0).set_meta("k", 2.0);
  seq.set_meta("k", 1.0).then(later);
  CHECK(seq.size() == 3);
  CHECK(seq.meta("k") == 1.0);
  CHECK_FALSE(seq.meta("missing").has_value());
}
