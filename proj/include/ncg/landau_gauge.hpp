#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncg/fock.hpp"
#include "ncg/projection.hpp"
#include "ncg/units.hpp"

namespace ncg {

// Landau-gauge cross-check on a uniform grid in the momentum label k.
//
// States are |n, k_i> with n-major flattening n * M + i. The continuum delta
// delta(k_i - k_j) becomes delta_ij / dk and the integral over k becomes a
// sum times dk, so the matrices below act on plain coefficient vectors.
//
// Sign convention: y carries the derivative with respect to k, and the
// level-mixing part is +(c/eB) <n|p|m> (equivalently -(c/eB) <m|p|n>, the
// transposed element). With this choice the untruncated [x, y] vanishes and
// the top kept level carries -i (N+1) hbar c / eB, matching the symmetric
// gauge.

/// Points k_i = k_min + i * spacing, i = 0..points-1.
struct KGrid {
  std::size_t points = 0;
  double k_min = 0.0;
  double spacing = 0.0;

  /// Throws std::invalid_argument if points < 3 or k_hi <= k_lo.
  static KGrid spanning(std::size_t points, double k_lo, double k_hi);

  /// k in [-half_range, half_range] * (eB l / c), i.e. guiding centers
  /// within +-half_range magnetic lengths.
  static KGrid centered(std::size_t points, double half_range,
                        const PhysicalUnits& u);

  double k(std::size_t i) const {
    return k_min + static_cast<double>(i) * spacing;
  }
  double k_max() const { return k(points - 1); }
  void validate() const;

  /// Same range with half the spacing.
  KGrid refined() const;
};

inline constexpr double kDefaultGridHalfRange = 8.0;

/// Grid points closer than this to either end are excluded from every
/// assertion; the one-sided end stencils exist only to keep D square.
inline constexpr std::size_t kGridEdgeExclusion = 2;

/// Relative tolerance for the discretized top coefficient.
inline constexpr double kLandauRelativeTolerance = 0.01;

struct LandauGaugeOperators {
  OperatorMatrix x;
  OperatorMatrix y;
  KGrid grid;
  PhysicalUnits units;
};

/// Diagonal multiplication by k_i.
OperatorMatrix momentum_label_matrix(const KGrid& grid);

/// Central difference (f_{i+1} - f_{i-1}) / 2dk with second-order one-sided
/// stencils in the first and last rows.
OperatorMatrix k_derivative_matrix(const KGrid& grid);

/// 1/2 on the first off-diagonals.
OperatorMatrix neighbor_average_matrix(const KGrid& grid);

/// x = (c/eB) K + X_osc, y = i hbar D + (c/eB) P_osc on levels 0..levels.
/// Throws std::invalid_argument for fewer than 3 grid points.
LandauGaugeOperators build_landau_xy(const KGrid& grid, int levels,
                                     const PhysicalUnits& u);

/// Unit-norm Gaussian wave packet centered in the grid, width one tenth of
/// the k-range, zeroed within kGridEdgeExclusion of either end. Expectation
/// values in this packet turn the discrete delta kernel of [x, y] into a
/// continuum-normalized coefficient with O(dk^2) error.
Eigen::VectorXd interior_probe(const KGrid& grid);

/// <probe, n| C |probe, n'> for an operator on the (levels) x (grid) space.
Complex level_expectation(const OperatorMatrix& op, const Eigen::VectorXd& probe,
                          int n, int n_prime);

/// [x, y] at N = 0 read through the interior probe; approaches
/// -i hbar c / eB.
Complex lowest_level_commutator(const KGrid& grid, const PhysicalUnits& u);

/// [x, y] with levels 0..keep retained. top_coefficient is the top-level
/// probe expectation; max_offtop_residual is the largest |<n|C|n'>| probe
/// expectation over all other level pairs.
CommutatorReport projected_commutator_landau(const KGrid& grid, int keep,
                                             const PhysicalUnits& u);

struct ConvergenceRow {
  std::size_t points = 0;
  double spacing = 0.0;
  int keep = 0;
  Complex coefficient{};
  double abs_error = 0.0;
  /// log2 of the error ratio against the previous (coarser) row.
  std::optional<double> observed_order;
};

/// The coarse grid followed by `refinements` successive halvings of dk.
std::vector<ConvergenceRow> convergence_study(const KGrid& coarse, int keep,
                                              const PhysicalUnits& u,
                                              int refinements);

}  // namespace ncg
