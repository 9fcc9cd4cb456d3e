#include "cpulse/su2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cpulse {

double Mat2::max_abs() const {
  double out = 0.0;
  for (const auto& z : m_) out = std::max(out, std::abs(z));
  return out;
}

Mat2& Mat2::operator+=(const Mat2& o) {
  for (int k = 0; k < 4; ++k) m_[k] += o.m_[k];
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  for (int k = 0; k < 4; ++k) m_[k] -= o.m_[k];
  return *this;
}

Mat2& Mat2::operator*=(cplx s) {
  for (auto& z : m_) z *= s;
  return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
          a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os.precision(6);
  os << "[[" << m_[0] << ", " << m_[1] << "], [" << m_[2] << ", " << m_[3] << "]]";
  return os.str();
}

Mat2 PauliDecomposition::reconstruct() const {
  return c0 * pauli::I + cx * pauli::X + cy * pauli::Y + cz * pauli::Z;
}

double PauliDecomposition::vector_norm() const {
  return std::sqrt(std::norm(cx) + std::norm(cy) + std::norm(cz));
}

PauliDecomposition pauli_decompose(const Mat2& m) {
  // Pauli matrices are Hermitian and trace-orthogonal: c_a = Tr(M sigma_a) / 2.
  const cplx half{0.5, 0.0};
  const cplx i{0.0, 1.0};
  return {half * (m(0, 0) + m(1, 1)), half * (m(0, 1) + m(1, 0)), half * i * (m(0, 1) - m(1, 0)),
          half * (m(0, 0) - m(1, 1))};
}

double distance(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

double unitarity_defect(const Mat2& m) { return distance(m * m.adjoint(), Mat2::identity()); }

}  // namespace cpulse
