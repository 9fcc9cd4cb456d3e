#include "cpulse/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cpulse {

namespace {

std::size_t coefficient_count(int degree) {
  return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

// Taylor coefficients about 0 of the named function, k = 0..n.
std::vector<double> taylor_coefficients(AnalyticFn fn, int n) {
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  double factorial = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    const auto idx = static_cast<std::size_t>(k);
    switch (fn) {
      case AnalyticFn::Sin:
        if (k % 2 == 1) c[idx] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) / factorial;
        break;
      case AnalyticFn::Cos:
        if (k % 2 == 0) c[idx] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) / factorial;
        break;
      case AnalyticFn::Sqrt1p:
        // binomial(1/2, k)
        c[idx] = k == 0 ? 1.0 : c[idx - 1] * (0.5 - (k - 1)) / k;
        break;
      case AnalyticFn::Recip1p:
        c[idx] = k % 2 == 0 ? 1.0 : -1.0;
        break;
    }
  }
  return c;
}

}  // namespace

ScalarSeries::ScalarSeries(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxSeriesDegree)
    throw std::invalid_argument("series degree must lie in [0, " + std::to_string(kMaxSeriesDegree) +
                                "]");
  c_.assign(coefficient_count(degree), cplx{});
}

ScalarSeries ScalarSeries::constant(int degree, cplx value) {
  ScalarSeries s(degree);
  s.c_[0] = value;
  return s;
}

ScalarSeries ScalarSeries::epsilon(int degree) {
  ScalarSeries s(degree);
  if (degree >= 1) s.set_coeff(1, 0, 1.0);
  return s;
}

ScalarSeries ScalarSeries::off_resonance(int degree) {
  ScalarSeries s(degree);
  if (degree >= 1) s.set_coeff(0, 1, 1.0);
  return s;
}

cplx ScalarSeries::coeff(int i, int j) const {
  if (i < 0 || j < 0) throw std::invalid_argument("negative series exponent");
  if (i + j > degree_) return {};
  return c_[index(i, j)];
}

void ScalarSeries::set_coeff(int i, int j, cplx value) {
  if (i < 0 || j < 0 || i + j > degree_)
    throw std::invalid_argument("series exponent outside the truncation degree");
  c_[index(i, j)] = value;
}

double ScalarSeries::max_abs_at_degree(int d) const {
  if (d < 0 || d > degree_) return 0.0;
  double out = 0.0;
  for (int j = 0; j <= d; ++j) out = std::max(out, std::abs(c_[index(d - j, j)]));
  return out;
}

cplx ScalarSeries::evaluate(double eps, double f) const {
  // Horner in eps for each power of f, then Horner in f.
  cplx total{};
  for (int j = degree_; j >= 0; --j) {
    cplx inner{};
    for (int i = degree_ - j; i >= 0; --i) inner = inner * eps + c_[index(i, j)];
    total = total * f + inner;
  }
  return total;
}

ScalarSeries ScalarSeries::conj() const {
  ScalarSeries out(*this);
  for (auto& z : out.c_) z = std::conj(z);
  return out;
}

void ScalarSeries::require_same_degree(const ScalarSeries& o) const {
  if (o.degree_ != degree_)
    throw std::invalid_argument("series degree mismatch: " + std::to_string(degree_) + " vs " +
                                std::to_string(o.degree_));
}

ScalarSeries& ScalarSeries::operator+=(const ScalarSeries& o) {
  require_same_degree(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

ScalarSeries& ScalarSeries::operator-=(const ScalarSeries& o) {
  require_same_degree(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

ScalarSeries& ScalarSeries::operator*=(cplx s) {
  for (auto& z : c_) z *= s;
  return *this;
}

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
  a.require_same_degree(b);
  const int n = a.degree_;
  ScalarSeries out(n);
  for (int d1 = 0; d1 <= n; ++d1) {
    for (int j1 = 0; j1 <= d1; ++j1) {
      const cplx x = a.c_[ScalarSeries::index(d1 - j1, j1)];
      if (x == cplx{}) continue;
      for (int d2 = 0; d1 + d2 <= n; ++d2) {
        const std::size_t base = ScalarSeries::index(d1 + d2, 0);
        const std::size_t src = ScalarSeries::index(d2, 0);
        for (int j2 = 0; j2 <= d2; ++j2)
          out.c_[base + static_cast<std::size_t>(j1 + j2)] += x * b.c_[src + static_cast<std::size_t>(j2)];
      }
    }
  }
  return out;
}

ScalarSeries series_add(const ScalarSeries& a, const ScalarSeries& b) { return a + b; }
ScalarSeries series_mul(const ScalarSeries& a, const ScalarSeries& b) { return a * b; }
ScalarSeries series_scale(const ScalarSeries& a, cplx s) { return a * s; }

ScalarSeries series_compose_analytic(const ScalarSeries& g, AnalyticFn fn) {
  if (std::abs(g.constant_term()) != 0.0)
    throw std::invalid_argument("analytic composition requires a zero constant term");
  const int n = g.degree();
  const auto c = taylor_coefficients(fn, n);
  // Horner; g^k has no terms below degree k, so n + 1 coefficients suffice.
  ScalarSeries out = ScalarSeries::constant(n, c[static_cast<std::size_t>(n)]);
  for (int k = n - 1; k >= 0; --k) {
    out = out * g;
    out += ScalarSeries::constant(n, c[static_cast<std::size_t>(k)]);
  }
  return out;
}

MatrixSeries::MatrixSeries(int degree)
    : e_{ScalarSeries(degree), ScalarSeries(degree), ScalarSeries(degree), ScalarSeries(degree)} {}

MatrixSeries::MatrixSeries(ScalarSeries a, ScalarSeries b, ScalarSeries c, ScalarSeries d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const int n = e_[0].degree();
  for (const auto& s : e_)
    if (s.degree() != n) throw std::invalid_argument("matrix series entries differ in degree");
}

MatrixSeries MatrixSeries::constant(int degree, const Mat2& m) {
  return {ScalarSeries::constant(degree, m(0, 0)), ScalarSeries::constant(degree, m(0, 1)),
          ScalarSeries::constant(degree, m(1, 0)), ScalarSeries::constant(degree, m(1, 1))};
}

Mat2 MatrixSeries::coeff(int i, int j) const {
  return {e_[0].coeff(i, j), e_[1].coeff(i, j), e_[2].coeff(i, j), e_[3].coeff(i, j)};
}

Mat2 MatrixSeries::evaluate(double eps, double f) const {
  return {e_[0].evaluate(eps, f), e_[1].evaluate(eps, f), e_[2].evaluate(eps, f),
          e_[3].evaluate(eps, f)};
}

MatrixSeries MatrixSeries::adjoint() const {
  return {e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj()};
}

MatrixSeries& MatrixSeries::operator*=(cplx s) {
  for (auto& e : e_) e *= s;
  return *this;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("matrix series degree mismatch");
  return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
          a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
}

MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) {
  return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]};
}

ScalarSeries MatrixSeries::half_trace() const { return (e_[0] + e_[3]) * cplx{0.5, 0.0}; }

MatrixSeries matrix_series_mul(const MatrixSeries& a, const MatrixSeries& b) { return a * b; }

}  // namespace cpulse
