#ifndef CPULSE_VERIFICATION_HPP
#define CPULSE_VERIFICATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpulse/sequence.hpp"

namespace cpulse {

// Geometric grid of `points` values from lo to hi inclusive (lo, hi > 0).
std::vector<double> geometric_grid(double lo, double hi, int points);
// Evenly spaced grid from lo to hi inclusive; a single point yields {lo}.
std::vector<double> linear_grid(double lo, double hi, int points);

struct SweepOptions {
  double lo = 1e-4;
  double hi = 1e-1;
  int points = 25;
  // Only infidelities inside [floor, ceiling] enter the log-log fit.
  double floor = 1e-14;
  double ceiling = 1e-2;
  // |slope / 2 - n| must be below this for an order to be reported.
  double order_tolerance = 0.1;
  // The slope fit keeps at most this many clean points, smallest error first,
  // so that higher order terms near the ceiling do not bias it. 0 keeps all.
  int max_fit_points = 6;
  // Points used by fit_leading_coefficient; 2 is plain linear extrapolation.
  int extrapolation_points = 3;
};

struct SweepResult {
  std::vector<double> grid;
  std::vector<double> infidelity;
  std::size_t clean_points = 0;
  double slope = 0.0;
  double intercept = 0.0;
  // RMS deviation of log(infidelity) from the fitted line.
  double fit_residual = 0.0;
  std::optional<int> order;
  bool ambiguous = false;
  // Every infidelity fell below the floor (e.g. an exact identity).
  bool beyond_resolution = false;
};

// Infidelity 1 - F(compose(seq, m(x)), target) at each grid value x, where
// m(x) puts x on the axis perturbed by `model` (both axes for Simultaneous).
std::vector<double> infidelity_curve(const PulseSequence& seq, ModelKind model, const Unitary2& target,
                                     const std::vector<double>& grid);

// Log-log slope of a sweep; the error order is slope / 2.
SweepResult fit_order(std::vector<double> grid, std::vector<double> infidelity,
                      const SweepOptions& opts = {});

SweepResult estimate_order(const PulseSequence& seq, ModelKind model, const Unitary2& target,
                           const SweepOptions& opts = {});
SweepResult estimate_order(const PulseSequence& seq, ModelKind model, const SweepOptions& opts = {});

struct CoefficientFit {
  double value = 0.0;
  bool noise_floor_reached = false;
  // Grid values used, smallest first.
  std::vector<double> points;
};

// Extrapolates infidelity / x^degree to x -> 0 by a polynomial through the
// smallest opts.extrapolation_points clean grid points.
CoefficientFit fit_leading_coefficient(const PulseSequence& seq, ModelKind model, const Unitary2& target,
                                       int degree, const SweepOptions& opts = {});

struct Variant {
  std::string name;
  std::function<PulseSequence(double)> build;
};

struct CrossoverTable {
  std::vector<std::string> names;
  std::vector<double> theta;
  // magnitude[v][k]: degree-3 Pauli norm of variant v at theta[k].
  std::vector<std::vector<double>> magnitude;
  // For each v >= 1: first angle where variant 0 exceeds variant v
  // (linear interpolation between grid points).
  std::vector<std::optional<double>> crossover;
  // Variant 0 already exceeds variant v at the first grid angle.
  std::vector<bool> exceeds_from_start;
  // Variant 0 and variant v agree at every grid angle.
  std::vector<bool> identical;
};

// Degree-3 pulse-length error magnitude of each variant over a theta grid.
// Throws std::invalid_argument for fewer than two variants or a variant that
// is not second order correct.
CrossoverTable crossover_scan(const std::vector<Variant>& variants, const std::vector<double>& theta);

// Order of compose(seq_inv) * compose(seq) against the identity.
SweepResult inverse_quality(const PulseSequence& seq, const PulseSequence& seq_inv, ModelKind model,
                            const SweepOptions& opts = {});

struct FidelitySurface {
  std::vector<double> eps;
  std::vector<double> f;
  // infidelity[a * f.size() + b] at (eps[a], f[b])
  std::vector<double> infidelity;

  double at(std::size_t a, std::size_t b) const { return infidelity[a * f.size() + b]; }
};

FidelitySurface fidelity_surface(const PulseSequence& seq, const std::vector<double>& eps,
                                 const std::vector<double>& f, const Unitary2& target);

struct SurfaceFit {
  // (eps power, f power) -> coefficient
  std::map<std::pair<int, int>, double> coefficients;
  double rms_residual = 0.0;

  double coefficient(int i, int j) const;
};

// Least squares fit of every monomial eps^i f^j with min_degree <= i + j <= max_degree.
SurfaceFit fit_surface(const FidelitySurface& surface, int min_degree, int max_degree);

}  // namespace cpulse

#endif  // CPULSE_VERIFICATION_HPP
