#ifndef CPULSE_SERIES_HPP
#define CPULSE_SERIES_HPP

#include <array>
#include <vector>

#include "cpulse/su2.hpp"

namespace cpulse {

inline constexpr int kDefaultSeriesDegree = 8;
inline constexpr int kMaxSeriesDegree = 24;

// Truncated power series in two real variables (eps, f), dense up to total
// degree N. Coefficient (i, j) multiplies eps^i f^j; terms with i + j > N are
// dropped by every operation.
class ScalarSeries {
 public:
  explicit ScalarSeries(int degree = kDefaultSeriesDegree);

  static ScalarSeries constant(int degree, cplx value);
  // The series "eps" (i = 1, j = 0).
  static ScalarSeries epsilon(int degree);
  // The series "f" (i = 0, j = 1).
  static ScalarSeries off_resonance(int degree);

  int degree() const { return degree_; }

  cplx coeff(int i, int j) const;
  void set_coeff(int i, int j, cplx value);
  cplx constant_term() const { return c_[0]; }

  // Largest coefficient modulus among monomials of total degree d.
  double max_abs_at_degree(int d) const;

  cplx evaluate(double eps, double f) const;

  // Coefficient-wise complex conjugate (the conjugate series for real eps, f).
  ScalarSeries conj() const;

  ScalarSeries& operator+=(const ScalarSeries& o);
  ScalarSeries& operator-=(const ScalarSeries& o);
  ScalarSeries& operator*=(cplx s);

  friend ScalarSeries operator+(ScalarSeries a, const ScalarSeries& b) { return a += b; }
  friend ScalarSeries operator-(ScalarSeries a, const ScalarSeries& b) { return a -= b; }
  friend ScalarSeries operator*(ScalarSeries a, cplx s) { return a *= s; }
  friend ScalarSeries operator*(cplx s, ScalarSeries a) { return a *= s; }
  friend ScalarSeries operator-(ScalarSeries a) { return a *= cplx{-1.0, 0.0}; }
  // Truncated Cauchy product.
  friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);

  friend bool operator==(const ScalarSeries&, const ScalarSeries&) = default;

  static std::size_t index(int i, int j) {
    const int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
  }

 private:
  void require_same_degree(const ScalarSeries& o) const;

  int degree_;
  std::vector<cplx> c_;
};

ScalarSeries series_add(const ScalarSeries& a, const ScalarSeries& b);
ScalarSeries series_mul(const ScalarSeries& a, const ScalarSeries& b);
ScalarSeries series_scale(const ScalarSeries& a, cplx s);

enum class AnalyticFn { Sin, Cos, Sqrt1p, Recip1p };

// h(g) for the named h expanded about 0: sin g, cos g, sqrt(1 + g), 1 / (1 + g).
// Throws std::invalid_argument unless g has a zero constant term.
ScalarSeries series_compose_analytic(const ScalarSeries& g, AnalyticFn fn);

// 2x2 matrix whose entries are ScalarSeries of a common degree.
class MatrixSeries {
 public:
  explicit MatrixSeries(int degree = kDefaultSeriesDegree);
  MatrixSeries(ScalarSeries a, ScalarSeries b, ScalarSeries c, ScalarSeries d);

  static MatrixSeries constant(int degree, const Mat2& m);
  static MatrixSeries identity(int degree) { return constant(degree, Mat2::identity()); }

  int degree() const { return e_[0].degree(); }

  const ScalarSeries& operator()(int r, int c) const { return e_[2 * r + c]; }
  ScalarSeries& operator()(int r, int c) { return e_[2 * r + c]; }

  // Matrix of the eps^i f^j coefficients.
  Mat2 coeff(int i, int j) const;
  Mat2 evaluate(double eps, double f) const;

  // Conjugate transpose with conjugated coefficients.
  MatrixSeries adjoint() const;

  MatrixSeries& operator*=(cplx s);
  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
  friend MatrixSeries operator*(MatrixSeries a, cplx s) { return a *= s; }
  friend MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);

  // Half trace as a scalar series.
  ScalarSeries half_trace() const;

 private:
  std::array<ScalarSeries, 4> e_;
};

MatrixSeries matrix_series_mul(const MatrixSeries& a, const MatrixSeries& b);

}  // namespace cpulse

#endif  // CPULSE_SERIES_HPP
