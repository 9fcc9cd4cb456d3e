#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cpulse/catalog.hpp"
#include "cpulse/error_series.hpp"
#include "cpulse/sequences.hpp"
#include "cpulse/verification.hpp"

using namespace cpulse;
using std::numbers::pi;

namespace {

constexpr double kDeg = pi / 180.0;

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k] / n;
    my += y[k] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<Variant> variants(std::initializer_list<const char*> names) {
  std::vector<Variant> out;
  for (const char* n : names) {
    std::string name = n;
    out.push_back({name, [name](double t) { return build_catalog_sequence(name, t); }});
  }
  return out;
}

}  // namespace

TEST_CASE("grids") {
  const auto g = geometric_grid(1e-4, 1e-1, 25);
  REQUIRE(g.size() == 25);
  CHECK(g.front() == 1e-4);
  CHECK(g.back() == 1e-1);
  CHECK(g[12] == doctest::Approx(std::sqrt(1e-5)).epsilon(1e-12));
  CHECK(linear_grid(0.0, 0.0, 1) == std::vector<double>{0.0});
  CHECK(linear_grid(-1.0, 1.0, 3) == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(linear_grid(1.0, 0.0, 3), std::invalid_argument);
}

TEST_CASE("order estimation examples") {
  const auto s = estimate_order(simple_pulse(pi), ModelKind::PulseLength);
  CHECK(s.slope == doctest::Approx(2.0).epsilon(0.01));
  CHECK(s.order == 1);
  const auto b = estimate_order(bb1(pi), ModelKind::PulseLength);
  CHECK(b.slope == doctest::Approx(6.0).epsilon(0.01));
  CHECK(b.order == 3);
  const auto c = estimate_order(corpse(pi), ModelKind::OffResonance);
  CHECK(c.order == 2);
  CHECK(c.clean_points >= 2);
  CHECK(c.fit_residual < 0.1);
}

TEST_CASE("slope fit uses only the clean window") {
  // Synthetic data: y = x^4 except for garbage outside [1e-14, 1e-2].
  auto grid = geometric_grid(1e-4, 1e-1, 25);
  std::vector<double> y;
  for (double x : grid) {
    double v = std::pow(x, 4);
    if (v < 1e-14) v = 1e-30;
    if (v > 1e-2) v = 1.0;
    y.push_back(v);
  }
  SweepOptions all;
  all.max_fit_points = 0;
  const auto r = fit_order(grid, y, all);
  CHECK(r.slope == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.order == 2);
}

TEST_CASE("ambiguous and degenerate sweeps are flagged") {
  auto grid = geometric_grid(1e-4, 1e-1, 25);
  std::vector<double> y;
  for (double x : grid) y.push_back(std::pow(x, 5));
  const auto r = fit_order(grid, y);
  CHECK_FALSE(r.order.has_value());
  CHECK(r.ambiguous);

  std::vector<double> zeros(grid.size(), 0.0);
  const auto z = fit_order(grid, zeros);
  CHECK(z.beyond_resolution);
  CHECK_FALSE(z.order.has_value());
  CHECK_THROWS_AS(fit_order(grid, std::vector<double>(3, 1.0)), std::invalid_argument);
}

TEST_CASE("numeric and series orders agree across the catalog") {
  for (const auto& entry : catalog()) {
    // CORPSE has a nearly vanishing f^4 coefficient away from pi; covered separately.
    const bool angles = !entry.fixed_pi && entry.name != "corpse";
    for (double theta : angles ? std::vector<double>{pi / 2, pi} : std::vector<double>{pi}) {
      const auto seq = build_catalog_sequence(entry.name, theta);
      const auto target = target_rotation(theta);
      const auto report = leading_error(normalize_phase(residual(seq, target, entry.model)));
      const auto sweep = estimate_order(seq, entry.model, target);
      REQUIRE(report.order.has_value());
      CHECK_MESSAGE(sweep.order == report.order, entry.name << " at " << theta / kDeg);
      REQUIRE(report.infidelity_degree.has_value());
      const auto fit = fit_leading_coefficient(seq, entry.model, target, *report.infidelity_degree);
      REQUIRE_FALSE(fit.noise_floor_reached);
      CHECK_MESSAGE(fit.value == doctest::Approx(report.infidelity_coefficient).epsilon(0.005),
                    entry.name << " at " << theta / kDeg);
    }
  }
}

TEST_CASE("small leading coefficients need a lower floor") {
  const auto seq = corpse(pi / 3);
  const auto target = target_rotation(pi / 3);
  const auto standard = estimate_order(seq, ModelKind::OffResonance, target);
  CHECK(standard.order != 2);
  SweepOptions deep;
  deep.lo = 1e-6;
  deep.hi = 1e-3;
  deep.floor = 1e-28;
  CHECK(estimate_order(seq, ModelKind::OffResonance, target, deep).order == 2);
}

TEST_CASE("coefficient fits") {
  const auto target = target_rotation(pi);
  CHECK(fit_leading_coefficient(bb1(pi), ModelKind::PulseLength, target, 6).value ==
        doctest::Approx(5 * std::pow(pi, 6) / 1024).epsilon(0.005));
  CHECK(fit_leading_coefficient(or_corrected(OrCorrected::FirstPi), ModelKind::OffResonance, target, 4).value ==
        doctest::Approx((60 + pi * pi) / 32).epsilon(0.005));
  CHECK(fit_leading_coefficient(corpse(pi), ModelKind::OffResonance, target, 4).value ==
        doctest::Approx((12 + pi * pi - 4 * std::sqrt(3.0) * pi) / 32).epsilon(0.005));

  SweepOptions linear;
  linear.extrapolation_points = 2;
  const auto two = fit_leading_coefficient(bb1(pi), ModelKind::PulseLength, target, 6, linear);
  CHECK(two.points.size() == 2);
  CHECK(two.value == doctest::Approx(5 * std::pow(pi, 6) / 1024).epsilon(0.005));

  const auto flat = fit_leading_coefficient(concat({ple::x1(0.3), ple::x1_inv(0.3)}), ModelKind::PulseLength,
                                            Unitary2::identity(), 2);
  CHECK(flat.noise_floor_reached);
}

TEST_CASE("crossover scan") {
  std::vector<double> theta;
  for (int d = 10; d <= 180; ++d) theta.push_back(d * kDeg);
  const auto t = crossover_scan(variants({"bb1", "sk2rot"}), theta);
  REQUIRE(t.crossover.size() == 1);
  REQUIRE(t.crossover[0].has_value());
  CHECK(*t.crossover[0] / kDeg == doctest::Approx(168.0).epsilon(2.0 / 168.0));
  const double ratio = t.magnitude[0].back() / t.magnitude[1].back();
  CHECK(ratio > 1.05);
  CHECK(ratio < 1.15);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (theta[k] < *t.crossover[0] - 1e-9) CHECK(t.magnitude[0][k] < t.magnitude[1][k]);
    if (theta[k] > *t.crossover[0] + 1e-9) CHECK(t.magnitude[0][k] > t.magnitude[1][k]);
  }

  std::vector<double> x, y;
  for (std::size_t k = 0; k < theta.size(); ++k)
    if (theta[k] >= 30 * kDeg - 1e-12 && theta[k] <= 150 * kDeg + 1e-12) {
      x.push_back(theta[k]);
      y.push_back(t.magnitude[0][k]);
    }
  CHECK(pearson(x, y) >= 0.99);

  const auto same = crossover_scan(variants({"bb1", "bb1"}), theta);
  CHECK(same.identical[0]);
  CHECK_FALSE(same.crossover[0].has_value());

  CHECK_THROWS_AS(crossover_scan(variants({"bb1"}), theta), std::invalid_argument);
  CHECK_THROWS_AS(crossover_scan(variants({"bb1", "simple"}), theta), std::invalid_argument);
}

TEST_CASE("inverse quality") {
  for (double theta : {pi / 2, pi}) {
    PulseSequence fwd("fwd", theta, {Pulse(theta, 0.0)});
    PulseSequence back("back", -theta, {Pulse(theta, pi)});
    CHECK(inverse_quality(fwd, back, ModelKind::OffResonance).order == 1);
    const auto pair = inverse_quality(corpse(theta), corpse(theta, CorpsePreset::Corpse, pi), ModelKind::OffResonance);
    REQUIRE(pair.order.has_value());
    CHECK(*pair.order >= 3);
  }
  const auto exact = inverse_quality(ple::x1(0.8), ple::x1_inv(0.8), ModelKind::PulseLength);
  CHECK(exact.beyond_resolution);
  CHECK_FALSE(exact.order.has_value());
}

TEST_CASE("fidelity surface") {
  const auto seq = or_corrected(OrCorrected::SimultaneousPi);
  const auto target = target_rotation(pi);
  const auto zero = fidelity_surface(seq, {0.0}, {0.0}, target);
  CHECK(zero.infidelity[0] <= 1e-14);

  const auto grid = linear_grid(-0.03, 0.03, 25);
  const auto surface = fidelity_surface(seq, grid, grid, target);
  CHECK(surface.infidelity.size() == 625);
  const auto fit = fit_surface(surface, 4, 8);
  CHECK(fit.coefficient(2, 2) == doctest::Approx(169 * pi * pi / 32).epsilon(0.01));
  CHECK(fit.coefficient(0, 4) == doctest::Approx(15.0 / 8).epsilon(0.01));
  CHECK(fit.coefficient(6, 0) == doctest::Approx(5 * std::pow(pi, 6) / 1024).epsilon(0.01));

  // Along f = 0 the pulse behaves like BB1.
  const auto eps_only = fidelity_surface(seq, geometric_grid(1e-2, 1e-1, 8), {0.0}, target);
  const auto bb = infidelity_curve(bb1(pi), ModelKind::PulseLength, target, geometric_grid(1e-2, 1e-1, 8));
  for (std::size_t k = 0; k < bb.size(); ++k) CHECK(eps_only.infidelity[k] == doctest::Approx(bb[k]).epsilon(1e-9));

  CHECK_THROWS_AS(fit_surface(fidelity_surface(seq, {0.1}, {0.1}, target), 4, 8), std::invalid_argument);
}

TEST_CASE("time-symmetric surface is even in f") {
  const auto seq = or_corrected(OrCorrected::TimeSymmetric);
  const auto target = target_rotation(pi);
  const auto eps = linear_grid(-0.05, 0.05, 7);
  const auto f = linear_grid(-0.1, 0.1, 11);
  const auto s = fidelity_surface(seq, eps, f, target);
  for (std::size_t a = 0; a < eps.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b) CHECK(std::abs(s.at(a, b) - s.at(a, f.size() - 1 - b)) <= 1e-12);
}

TEST_CASE("parallel sweeps are deterministic") {
  const auto grid = geometric_grid(1e-4, 1e-1, 64);
  const auto a = infidelity_curve(sk_corrected(pi, SkOrder::Third), ModelKind::PulseLength, target_rotation(pi), grid);
  const auto b = infidelity_curve(sk_corrected(pi, SkOrder::Third), ModelKind::PulseLength, target_rotation(pi), grid);
  CHECK(a == b);
  for (std::size_t k = 0; k < grid.size(); ++k)
    CHECK(a[k] == infidelity(compose(sk_corrected(pi, SkOrder::Third), ErrorModel::pulse_length(grid[k])),
                             target_rotation(pi)));
}
