#include "cpulse/verification.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cpulse/error_series.hpp"

namespace cpulse {

namespace {

// Runs fn(k) for k in [0, n) across hardware threads; fn writes to slot k only.
template <typename Fn>
void parallel_for(std::size_t n, Fn fn) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 8) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < n; k += workers) fn(k);
    });
}

ErrorModel model_at(ModelKind kind, double x) { return ErrorModel::along(kind, x); }

}  // namespace

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (points < 1 || !(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("invalid geometric grid");
  if (points == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = lo * std::exp(step * k);
  out.back() = hi;
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1 || !(hi >= lo)) throw std::invalid_argument("invalid linear grid");
  if (points == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (points - 1);
  return out;
}

std::vector<double> infidelity_curve(const PulseSequence& seq, ModelKind model, const Unitary2& target,
                                     const std::vector<double>& grid) {
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t k) { out[k] = infidelity(compose(seq, model_at(model, grid[k])), target); });
  return out;
}

SweepResult fit_order(std::vector<double> grid, std::vector<double> infid, const SweepOptions& opts) {
  if (grid.size() != infid.size()) throw std::invalid_argument("grid and infidelity sizes differ");
  SweepResult r;
  r.grid = std::move(grid);
  r.infidelity = std::move(infid);

  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < r.grid.size(); ++k) {
    const double y = r.infidelity[k];
    if (r.grid[k] > 0.0 && y >= opts.floor && y <= opts.ceiling) {
      lx.push_back(std::log(std::abs(r.grid[k])));
      ly.push_back(std::log(y));
    }
  }
  r.clean_points = lx.size();
  if (opts.max_fit_points > 1 && lx.size() > static_cast<std::size_t>(opts.max_fit_points)) {
    lx.resize(static_cast<std::size_t>(opts.max_fit_points));
    ly.resize(static_cast<std::size_t>(opts.max_fit_points));
  }
  if (lx.size() < 2) {
    const bool all_below = std::all_of(r.infidelity.begin(), r.infidelity.end(),
                                       [&](double y) { return y < opts.floor; });
    r.beyond_resolution = all_below;
    r.ambiguous = !all_below;
    return r;
  }

  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k];
    my += ly[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
  }
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double ss = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    const double e = ly[k] - (r.intercept + r.slope * lx[k]);
    ss += e * e;
  }
  r.fit_residual = std::sqrt(ss / n);

  const double half = r.slope / 2.0;
  const double rounded = std::round(half);
  if (std::abs(half - rounded) < opts.order_tolerance && rounded >= 1.0)
    r.order = static_cast<int>(rounded);
  else
    r.ambiguous = true;
  return r;
}

SweepResult estimate_order(const PulseSequence& seq, ModelKind model, const Unitary2& target,
                           const SweepOptions& opts) {
  auto grid = geometric_grid(opts.lo, opts.hi, opts.points);
  auto infid = infidelity_curve(seq, model, target, grid);
  return fit_order(std::move(grid), std::move(infid), opts);
}

SweepResult estimate_order(const PulseSequence& seq, ModelKind model, const SweepOptions& opts) {
  return estimate_order(seq, model, target_rotation(seq.target_theta()), opts);
}

CoefficientFit fit_leading_coefficient(const PulseSequence& seq, ModelKind model, const Unitary2& target,
                                       int degree, const SweepOptions& opts) {
  const auto grid = geometric_grid(opts.lo, opts.hi, opts.points);
  const auto infid = infidelity_curve(seq, model, target, grid);
  CoefficientFit fit;
  const std::size_t need = static_cast<std::size_t>(std::max(opts.extrapolation_points, 2));
  std::vector<double> xs, gs;
  for (std::size_t k = 0; k < grid.size() && xs.size() < need; ++k) {
    if (infid[k] >= opts.floor && infid[k] <= opts.ceiling) {
      xs.push_back(grid[k]);
      gs.push_back(infid[k] / std::pow(grid[k], degree));
    }
  }
  fit.points = xs;
  if (xs.size() < need) {
    fit.noise_floor_reached = true;
    return fit;
  }
  // Lagrange interpolation evaluated at x = 0.
  for (std::size_t a = 0; a < xs.size(); ++a) {
    double w = 1.0;
    for (std::size_t b = 0; b < xs.size(); ++b)
      if (b != a) w *= xs[b] / (xs[b] - xs[a]);
    fit.value += w * gs[a];
  }
  return fit;
}

CrossoverTable crossover_scan(const std::vector<Variant>& variants, const std::vector<double>& theta) {
  if (variants.size() < 2) throw std::invalid_argument("crossover scan needs at least two variants");
  CrossoverTable t;
  t.theta = theta;
  for (const auto& v : variants) t.names.push_back(v.name);
  t.magnitude.assign(variants.size(), std::vector<double>(theta.size(), 0.0));

  for (std::size_t v = 0; v < variants.size(); ++v) {
    for (std::size_t k = 0; k < theta.size(); ++k) {
      const auto seq = variants[v].build(theta[k]);
      const auto a = normalize_phase(residual(seq, theta[k], ModelKind::PulseLength, 3));
      for (int d = 1; d <= 2; ++d)
        if (pauli_term(a, d, 0).norm() > kSeriesZeroTolerance)
          throw std::invalid_argument("variant '" + variants[v].name + "' is not second order correct");
      t.magnitude[v][k] = pauli_term(a, 3, 0).norm();
    }
  }

  for (std::size_t v = 1; v < variants.size(); ++v) {
    std::optional<double> cross;
    bool same = true;
    for (std::size_t k = 0; k < theta.size(); ++k)
      if (std::abs(t.magnitude[0][k] - t.magnitude[v][k]) > 1e-12) same = false;
    const bool from_start = !theta.empty() && t.magnitude[0][0] - t.magnitude[v][0] > 1e-12;
    if (!same && !from_start) {
      for (std::size_t k = 1; k < theta.size(); ++k) {
        const double d0 = t.magnitude[0][k - 1] - t.magnitude[v][k - 1];
        const double d1 = t.magnitude[0][k] - t.magnitude[v][k];
        if (d0 <= 0.0 && d1 > 0.0) {
          cross = theta[k - 1] + (theta[k] - theta[k - 1]) * (-d0) / (d1 - d0);
          break;
        }
      }
    }
    t.crossover.push_back(cross);
    t.exceeds_from_start.push_back(from_start && !same);
    t.identical.push_back(same);
  }
  return t;
}

SweepResult inverse_quality(const PulseSequence& seq, const PulseSequence& seq_inv, ModelKind model,
                            const SweepOptions& opts) {
  const auto round_trip = concat({seq, seq_inv});
  return estimate_order(round_trip, model, Unitary2::identity(), opts);
}

FidelitySurface fidelity_surface(const PulseSequence& seq, const std::vector<double>& eps,
                                 const std::vector<double>& f, const Unitary2& target) {
  FidelitySurface s{eps, f, std::vector<double>(eps.size() * f.size())};
  parallel_for(s.infidelity.size(), [&](std::size_t k) {
    const std::size_t a = k / f.size(), b = k % f.size();
    s.infidelity[k] = infidelity(compose(seq, ErrorModel::simultaneous(eps[a], f[b])), target);
  });
  return s;
}

double SurfaceFit::coefficient(int i, int j) const {
  auto it = coefficients.find({i, j});
  return it == coefficients.end() ? 0.0 : it->second;
}

SurfaceFit fit_surface(const FidelitySurface& surface, int min_degree, int max_degree) {
  if (min_degree < 0 || max_degree < min_degree) throw std::invalid_argument("invalid fit degrees");
  std::vector<std::pair<int, int>> basis;
  for (int d = min_degree; d <= max_degree; ++d)
    for (int j = 0; j <= d; ++j) basis.emplace_back(d - j, j);

  // Scale each variable to unit range so the design matrix stays well conditioned.
  auto max_abs = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m > 0.0 ? m : 1.0;
  };
  const double se = max_abs(surface.eps), sf = max_abs(surface.f);

  const auto rows = static_cast<Eigen::Index>(surface.infidelity.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  if (rows < cols) throw std::invalid_argument("surface has fewer points than fit terms");
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (std::size_t a = 0; a < surface.eps.size(); ++a) {
    for (std::size_t b = 0; b < surface.f.size(); ++b) {
      const auto r = static_cast<Eigen::Index>(a * surface.f.size() + b);
      const double u = surface.eps[a] / se, v = surface.f[b] / sf;
      for (std::size_t c = 0; c < basis.size(); ++c)
        design(r, static_cast<Eigen::Index>(c)) = std::pow(u, basis[c].first) * std::pow(v, basis[c].second);
      rhs(r) = surface.at(a, b);
    }
  }
  const Eigen::VectorXd sol = design.colPivHouseholderQr().solve(rhs);

  SurfaceFit fit;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto [i, j] = basis[c];
    fit.coefficients[{i, j}] = sol(static_cast<Eigen::Index>(c)) / (std::pow(se, i) * std::pow(sf, j));
  }
  fit.rms_residual = std::sqrt((design * sol - rhs).squaredNorm() / static_cast<double>(rows));
  return fit;
}

}  // namespace cpulse
