#ifndef CPULSE_ERROR_SERIES_HPP
#define CPULSE_ERROR_SERIES_HPP

#include <optional>
#include <vector>

#include "cpulse/sequence.hpp"
#include "cpulse/series.hpp"

namespace cpulse {

inline constexpr double kSeriesZeroTolerance = 1e-10;

// Exact truncated Taylor expansion of propagator(p, m) in the error
// variables active for `model`: eps for PulseLength, f for OffResonance,
// both for Simultaneous.
MatrixSeries propagator_series(const Pulse& p, ModelKind model, int degree = kDefaultSeriesDegree);

// Series of compose(seq, m).
MatrixSeries sequence_series(const PulseSequence& seq, ModelKind model,
                             int degree = kDefaultSeriesDegree);

// A = series(seq) * target^dagger; the error part of a sequence.
MatrixSeries residual(const PulseSequence& seq, const Unitary2& target, ModelKind model,
                      int degree = kDefaultSeriesDegree);
// Residual against the ideal rotation U(target_theta, 0).
MatrixSeries residual(const PulseSequence& seq, double target_theta, ModelKind model,
                      int degree = kDefaultSeriesDegree);
// Residual against the sequence's own target rotation.
MatrixSeries residual(const PulseSequence& seq, ModelKind model, int degree = kDefaultSeriesDegree);

// Removes the global phase of the degree-0 term so that A(0, 0) = +I when A
// is a residual.
MatrixSeries normalize_phase(const MatrixSeries& a);

struct PauliVector {
  cplx x, y, z;

  double norm() const;
  // Real vector w with v = -i w (the form every unitary error term takes).
  std::array<double, 3> generator() const;
};

// Pauli part of the eps^i f^j coefficient of a (phase-normalized) series.
PauliVector pauli_term(const MatrixSeries& a, int eps_power, int f_power);

struct MonomialPauli {
  int eps_power;
  int f_power;
  PauliVector v;
};

struct InfidelityTerm {
  int eps_power;
  int f_power;
  double coefficient;  // positive: F = 1 - coefficient eps^i f^j + ...
};

struct ErrorTermReport {
  int truncation_degree = 0;
  // Smallest total degree with a nonzero Pauli part; empty when every degree
  // up to the truncation vanishes ("order > N").
  std::optional<int> order;
  // Nonzero monomials of total degree `order`.
  std::vector<MonomialPauli> terms;
  // Largest of `terms`; for single-variable models this is the only one.
  PauliVector pauli{};
  // Smallest degree with a nonzero infidelity term, if within truncation.
  std::optional<int> infidelity_degree;
  std::vector<InfidelityTerm> infidelity_terms;
  // Sum of the leading infidelity coefficients.
  double infidelity_coefficient = 0.0;

  bool beyond_truncation() const { return !order.has_value(); }
};

// Classifies the error order of a residual and its leading infidelity.
ErrorTermReport leading_error(const MatrixSeries& a, double zero_tol = kSeriesZeroTolerance);

// F = sqrt(T conj(T)) with T = Tr(A) / 2. Coefficients are real.
// Throws std::invalid_argument when |T(0, 0)| differs from 1 by more than 1e-9.
ScalarSeries fidelity_series(const MatrixSeries& a);

}  // namespace cpulse

#endif  // CPULSE_ERROR_SERIES_HPP
