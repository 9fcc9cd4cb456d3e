#ifndef CPULSE_SU2_HPP
#define CPULSE_SU2_HPP

#include <array>
#include <complex>
#include <string>

namespace cpulse {

using cplx = std::complex<double>;

// Dense 2x2 complex matrix, row-major.
class Mat2 {
 public:
  constexpr Mat2() = default;
  constexpr Mat2(cplx a, cplx b, cplx c, cplx d) : m_{a, b, c, d} {}

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 zero() { return {}; }

  constexpr cplx operator()(int r, int c) const { return m_[2 * r + c]; }
  constexpr cplx& operator()(int r, int c) { return m_[2 * r + c]; }

  cplx trace() const { return m_[0] + m_[3]; }
  cplx det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  // Conjugate transpose.
  Mat2 adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
  }

  // Largest entry modulus.
  double max_abs() const;

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  Mat2& operator*=(cplx s);

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator*(Mat2 a, cplx s) { return a *= s; }
  friend Mat2 operator*(cplx s, Mat2 a) { return a *= s; }
  friend Mat2 operator-(const Mat2& a) { return a * cplx{-1.0, 0.0}; }

  std::string to_string() const;

 private:
  std::array<cplx, 4> m_{};
};

using Unitary2 = Mat2;

namespace pauli {
inline constexpr Mat2 I{1.0, 0.0, 0.0, 1.0};
inline constexpr Mat2 X{0.0, 1.0, 1.0, 0.0};
inline constexpr Mat2 Y{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0};
inline constexpr Mat2 Z{1.0, 0.0, 0.0, -1.0};
}  // namespace pauli

// M = c0 I + cx X + cy Y + cz Z
struct PauliDecomposition {
  cplx c0, cx, cy, cz;

  Mat2 reconstruct() const;
  // Euclidean norm of (cx, cy, cz).
  double vector_norm() const;
};

PauliDecomposition pauli_decompose(const Mat2& m);

// Max-entry distance between two matrices.
double distance(const Mat2& a, const Mat2& b);

// ||M M^dagger - I||_max
double unitarity_defect(const Mat2& m);

}  // namespace cpulse

#endif  // CPULSE_SU2_HPP
