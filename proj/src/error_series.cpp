#include "cpulse/error_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpulse {

MatrixSeries propagator_series(const Pulse& p, ModelKind model, int degree) {
  const bool has_eps = model != ModelKind::OffResonance;
  const bool has_f = model != ModelKind::PulseLength;
  const auto one = ScalarSeries::constant(degree, 1.0);
  const auto eps = has_eps ? ScalarSeries::epsilon(degree) : ScalarSeries(degree);
  const auto f = has_f ? ScalarSeries::off_resonance(degree) : ScalarSeries(degree);

  // Axis n = ((1+eps) cos phi, (1+eps) sin phi, f), |n| = sqrt(1 + g).
  const auto scale = one + eps;
  const auto g = eps * cplx{2.0, 0.0} + eps * eps + f * f;
  const auto norm = series_compose_analytic(g, AnalyticFn::Sqrt1p);
  const auto inv_norm = series_compose_analytic(norm - one, AnalyticFn::Recip1p);

  // Half angle a = theta |n| / 2 = theta / 2 + shift.
  const double half = 0.5 * p.angle();
  const auto shift = (norm - one) * cplx{half, 0.0};
  const auto cos_shift = series_compose_analytic(shift, AnalyticFn::Cos);
  const auto sin_shift = series_compose_analytic(shift, AnalyticFn::Sin);
  const auto cos_a = cos_shift * cplx{std::cos(half), 0.0} - sin_shift * cplx{std::sin(half), 0.0};
  const auto sin_a = sin_shift * cplx{std::cos(half), 0.0} + cos_shift * cplx{std::sin(half), 0.0};
  const auto s = sin_a * inv_norm;

  const cplx i{0.0, 1.0};
  const auto sx = s * scale * cplx{std::cos(p.phase()), 0.0};
  const auto sy = s * scale * cplx{std::sin(p.phase()), 0.0};
  const auto sz = s * f;
  // cos a I - i s (n . sigma)
  return {cos_a - sz * i, (sx - sy * i) * (-i), (sx + sy * i) * (-i), cos_a + sz * i};
}

MatrixSeries sequence_series(const PulseSequence& seq, ModelKind model, int degree) {
  if (seq.empty()) throw std::invalid_argument("cannot expand an empty pulse sequence");
  MatrixSeries acc = MatrixSeries::identity(degree);
  for (const auto& p : seq.pulses()) acc = propagator_series(p, model, degree) * acc;
  return acc;
}

MatrixSeries residual(const PulseSequence& seq, const Unitary2& target, ModelKind model,
                      int degree) {
  return sequence_series(seq, model, degree) * MatrixSeries::constant(degree, target.adjoint());
}

MatrixSeries residual(const PulseSequence& seq, double target_theta, ModelKind model, int degree) {
  return residual(seq, target_rotation(target_theta), model, degree);
}

MatrixSeries residual(const PulseSequence& seq, ModelKind model, int degree) {
  return residual(seq, seq.target_theta(), model, degree);
}

MatrixSeries normalize_phase(const MatrixSeries& a) {
  const cplx t0 = 0.5 * a.coeff(0, 0).trace();
  const double mag = std::abs(t0);
  if (mag < 1e-12) return a;
  return a * std::conj(t0 / mag);
}

double PauliVector::norm() const { return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z)); }

std::array<double, 3> PauliVector::generator() const {
  const cplx i{0.0, 1.0};
  return {(i * x).real(), (i * y).real(), (i * z).real()};
}

PauliVector pauli_term(const MatrixSeries& a, int eps_power, int f_power) {
  const auto d = pauli_decompose(a.coeff(eps_power, f_power));
  return {d.cx, d.cy, d.cz};
}

ScalarSeries fidelity_series(const MatrixSeries& a) {
  const auto t = a.half_trace();
  const double t0 = std::abs(t.constant_term());
  if (std::abs(t0 - 1.0) > 1e-9)
    throw std::invalid_argument("not a residual: |Tr(A(0))/2| differs from 1");
  const int n = a.degree();
  // T conj(T) = t0^2 (1 + h) with h(0) = 0.
  auto h = t * t.conj() * cplx{1.0 / (t0 * t0), 0.0};
  h.set_coeff(0, 0, 0.0);
  auto fid = series_compose_analytic(h, AnalyticFn::Sqrt1p) * cplx{t0, 0.0};
  // Real for real variables; drop rounding dust in the imaginary parts.
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) fid.set_coeff(d - j, j, fid.coeff(d - j, j).real());
  return fid;
}

ErrorTermReport leading_error(const MatrixSeries& raw, double zero_tol) {
  const auto a = normalize_phase(raw);
  const int n = a.degree();
  ErrorTermReport report;
  report.truncation_degree = n;

  for (int d = 1; d <= n && !report.order; ++d) {
    for (int j = 0; j <= d; ++j) {
      const auto v = pauli_term(a, d - j, j);
      if (v.norm() > zero_tol) report.terms.push_back({d - j, j, v});
    }
    if (!report.terms.empty()) report.order = d;
  }
  if (!report.terms.empty()) {
    const auto best = std::max_element(report.terms.begin(), report.terms.end(),
                                       [](const auto& l, const auto& r) { return l.v.norm() < r.v.norm(); });
    report.pauli = best->v;
  }

  const auto fid = fidelity_series(a);
  for (int d = 1; d <= n && !report.infidelity_degree; ++d) {
    for (int j = 0; j <= d; ++j) {
      const double c = -fid.coeff(d - j, j).real();
      if (std::abs(c) > zero_tol) {
        report.infidelity_terms.push_back({d - j, j, c});
        report.infidelity_coefficient += c;
      }
    }
    if (!report.infidelity_terms.empty()) report.infidelity_degree = d;
  }
  return report;
}

}  // namespace cpulse
