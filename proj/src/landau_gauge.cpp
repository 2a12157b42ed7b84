#include "ncg/landau_gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ncg/oscillator.hpp"

namespace ncg {

namespace {

using Index = Eigen::Index;
constexpr Complex kI{0.0, 1.0};

Basis grid_basis(const KGrid& grid) { return Basis::single_mode(grid.points); }

}  // namespace

KGrid KGrid::spanning(std::size_t points, double k_lo, double k_hi) {
  if (points < 3) {
    throw std::invalid_argument("k-grid needs at least 3 points, got " +
                                std::to_string(points));
  }
  if (!(k_hi > k_lo)) {
    throw std::invalid_argument("k-grid range must be increasing");
  }
  return {points, k_lo, (k_hi - k_lo) / static_cast<double>(points - 1)};
}

KGrid KGrid::centered(std::size_t points, double half_range,
                      const PhysicalUnits& u) {
  if (!(half_range > 0.0) || !std::isfinite(half_range)) {
    throw std::invalid_argument("k-range must be a positive number");
  }
  const double unit = u.charge() * u.field() * magnetic_length(u) /
                      u.light_speed();
  return spanning(points, -half_range * unit, half_range * unit);
}

void KGrid::validate() const {
  if (points < 3) {
    throw std::invalid_argument("k-grid needs at least 3 points, got " +
                                std::to_string(points));
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing) || !std::isfinite(k_min)) {
    throw std::invalid_argument("k-grid spacing must be a positive number");
  }
}

KGrid KGrid::refined() const {
  validate();
  return {2 * (points - 1) + 1, k_min, spacing / 2.0};
}

OperatorMatrix momentum_label_matrix(const KGrid& grid) {
  grid.validate();
  const auto m = static_cast<Index>(grid.points);
  OperatorMatrix::Dense k = OperatorMatrix::Dense::Zero(m, m);
  for (Index i = 0; i < m; ++i) k(i, i) = grid.k(static_cast<std::size_t>(i));
  return {grid_basis(grid), std::move(k)};
}

OperatorMatrix k_derivative_matrix(const KGrid& grid) {
  grid.validate();
  const auto m = static_cast<Index>(grid.points);
  const double h = 1.0 / (2.0 * grid.spacing);
  OperatorMatrix::Dense d = OperatorMatrix::Dense::Zero(m, m);
  for (Index i = 1; i + 1 < m; ++i) {
    d(i, i + 1) = h;
    d(i, i - 1) = -h;
  }
  d(0, 0) = -3.0 * h;
  d(0, 1) = 4.0 * h;
  d(0, 2) = -h;
  d(m - 1, m - 1) = 3.0 * h;
  d(m - 1, m - 2) = -4.0 * h;
  d(m - 1, m - 3) = h;
  return {grid_basis(grid), std::move(d)};
}

OperatorMatrix neighbor_average_matrix(const KGrid& grid) {
  grid.validate();
  const auto m = static_cast<Index>(grid.points);
  OperatorMatrix::Dense s = OperatorMatrix::Dense::Zero(m, m);
  for (Index i = 0; i + 1 < m; ++i) {
    s(i, i + 1) = 0.5;
    s(i + 1, i) = 0.5;
  }
  return {grid_basis(grid), std::move(s)};
}

LandauGaugeOperators build_landau_xy(const KGrid& grid, int levels,
                                     const PhysicalUnits& u) {
  grid.validate();
  if (levels < 0) {
    throw std::invalid_argument("Landau level cutoff must be nonnegative");
  }
  const double inv_field = u.light_speed() / (u.charge() * u.field());
  const auto level_basis =
      Basis::single_mode(static_cast<std::size_t>(levels + 1));
  const OperatorMatrix id_levels = OperatorMatrix::identity(level_basis);
  const OperatorMatrix id_grid = OperatorMatrix::identity(grid_basis(grid));

  OperatorMatrix x =
      kron(id_levels, Complex{inv_field} * momentum_label_matrix(grid)) +
      kron(oscillator_x_elements(levels, u), id_grid);
  OperatorMatrix y =
      kron(id_levels, (kI * u.hbar()) * k_derivative_matrix(grid)) +
      kron(Complex{inv_field} * oscillator_p_elements(levels, u), id_grid);
  return {std::move(x), std::move(y), grid, u};
}

Eigen::VectorXd interior_probe(const KGrid& grid) {
  grid.validate();
  if (grid.points <= 2 * kGridEdgeExclusion) {
    throw std::invalid_argument("k-grid has no interior points");
  }
  const double center = 0.5 * (grid.k_min + grid.k_max());
  const double width = (grid.k_max() - grid.k_min) / 10.0;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Index>(grid.points));
  for (std::size_t i = kGridEdgeExclusion;
       i + kGridEdgeExclusion < grid.points; ++i) {
    const double t = (grid.k(i) - center) / width;
    g(static_cast<Index>(i)) = std::exp(-0.5 * t * t);
  }
  return g / g.norm();
}

Complex level_expectation(const OperatorMatrix& op, const Eigen::VectorXd& probe,
                          int n, int n_prime) {
  const auto m = static_cast<Index>(probe.size());
  if (static_cast<std::size_t>(m) != op.basis().inner) {
    throw std::invalid_argument("probe length does not match the grid");
  }
  const auto levels = static_cast<int>(op.basis().outer);
  if (n < 0 || n >= levels || n_prime < 0 || n_prime >= levels) {
    throw std::out_of_range("level index outside the operator's levels");
  }
  const Eigen::VectorXcd g = probe.cast<Complex>();
  return g.dot(op.entries().block(n * m, n_prime * m, m, m) * g);
}

Complex lowest_level_commutator(const KGrid& grid, const PhysicalUnits& u) {
  const LandauGaugeOperators ops = build_landau_xy(grid, 0, u);
  return level_expectation(commutator(ops.x, ops.y), interior_probe(grid), 0,
                           0);
}

CommutatorReport projected_commutator_landau(const KGrid& grid, int keep,
                                             const PhysicalUnits& u) {
  const LandauGaugeOperators ops = build_landau_xy(grid, keep, u);
  const OperatorMatrix comm = commutator(ops.x, ops.y);
  const Eigen::VectorXd probe = interior_probe(grid);
  const double l2 = magnetic_length_squared(u);

  CommutatorReport report;
  report.cutoffs = {keep, static_cast<int>(grid.points) - 1};
  report.keep = keep;
  report.grid_points = grid.points;
  report.expected_top = Complex{0.0, -(keep + 1) * l2};

  for (int n = 0; n <= keep; ++n) {
    for (int np = 0; np <= keep; ++np) {
      const Complex v = level_expectation(comm, probe, n, np);
      if (n == keep && np == keep) {
        report.top_coefficient = v;
      } else {
        report.max_offtop_residual =
            std::max(report.max_offtop_residual, std::abs(v));
      }
    }
  }

  // Entries of the first and last grid rows, where the one-sided stencils
  // break the translation-invariant kernel.
  const std::size_t m = grid.points;
  const double tiny = kDefaultTolerance * std::max(1.0, l2);
  for (int n = 0; n <= keep; ++n) {
    for (std::size_t edge : {std::size_t{0}, m - 1}) {
      const std::size_t row = static_cast<std::size_t>(n) * m + edge;
      for (std::size_t col = 0; col < comm.dim(); ++col) {
        const Complex v = comm(row, col);
        if (std::abs(v) > tiny) {
          report.boundary_artifacts.push_back(
              {{n, static_cast<int>(edge)},
               {static_cast<int>(col / m), static_cast<int>(col % m)},
               v});
        }
      }
    }
  }

  report.ok = std::abs(report.top_coefficient - report.expected_top) <=
                  kLandauRelativeTolerance * std::abs(report.expected_top) &&
              report.max_offtop_residual <= kLandauRelativeTolerance * l2;
  return report;
}

std::vector<ConvergenceRow> convergence_study(const KGrid& coarse, int keep,
                                              const PhysicalUnits& u,
                                              int refinements) {
  if (refinements < 0) {
    throw std::invalid_argument("refinement count must be nonnegative");
  }
  std::vector<ConvergenceRow> rows;
  KGrid grid = coarse;
  for (int level = 0; level <= refinements; ++level) {
    const CommutatorReport r = projected_commutator_landau(grid, keep, u);
    ConvergenceRow row{grid.points, grid.spacing, keep, r.top_coefficient,
                       std::abs(r.top_coefficient - r.expected_top),
                       std::nullopt};
    if (!rows.empty() && row.abs_error > 0.0 && rows.back().abs_error > 0.0) {
      row.observed_order = std::log2(rows.back().abs_error / row.abs_error);
    }
    rows.push_back(row);
    if (level < refinements) grid = grid.refined();
  }
  return rows;
}

}  // namespace ncg
