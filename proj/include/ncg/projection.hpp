#pragma once

#include <optional>
#include <vector>

#include "ncg/fock.hpp"
#include "ncg/units.hpp"

namespace ncg {

struct BoundaryArtifact {
  BasisIndex row;
  BasisIndex col;
  Complex value;
};

/// Result of a projected [x, y] computation. top_coefficient is the
/// physical value (it carries hbar c / eB); the exact expectation is
/// -i (keep + 1) hbar c / eB.
struct CommutatorReport {
  Cutoffs cutoffs;
  int keep = 0;
  Complex top_coefficient{};
  Complex expected_top{};
  /// Largest |element| in the kept block with interior j, j' excluding the
  /// top diagonal (n = n' = keep, j = j').
  double max_offtop_residual = 0.0;
  /// Nonzero elements touching the j = J edge of the kept block.
  std::vector<BoundaryArtifact> boundary_artifacts;
  /// False when the top diagonal is not constant over interior j, which
  /// signals an indexing bug rather than physics.
  bool top_constant = true;
  bool ok = false;
  /// Set only for Landau-gauge reports, where the degeneracy label is a
  /// k-grid point rather than an oscillator quantum.
  std::optional<std::size_t> grid_points;
};

/// Diagonal 0/1 matrix selecting n <= keep. Throws std::invalid_argument
/// unless 0 <= keep <= N.
OperatorMatrix projector(const Cutoffs& c, int keep);

/// P op P. Throws on basis mismatch.
OperatorMatrix project(const OperatorMatrix& op, const OperatorMatrix& p);

/// [P x P, P y P] on the kept levels, checked against -i(keep+1) l^2.
CommutatorReport projected_commutator_xy(const Cutoffs& c, int keep,
                                         const PhysicalUnits& u);

/// One report per keep = 0..N. Output order is by keep regardless of
/// `parallel`.
std::vector<CommutatorReport> sweep(const Cutoffs& c, const PhysicalUnits& u,
                                    bool parallel = false);

struct ScanEntry {
  BasisIndex index;
  Complex value;
};

/// Diagonal of the unprojected [x, y] at every doubly interior state
/// (n <= N-1, j <= J-1). All values vanish.
std::vector<ScanEntry> full_space_scan(const Cutoffs& c,
                                       const PhysicalUnits& u);

/// Diagonal of the unprojected [x, y] on the truncation edges (n = N or
/// j = J), excluded from the vanishing check.
std::vector<ScanEntry> full_space_boundary(const Cutoffs& c,
                                           const PhysicalUnits& u);

}  // namespace ncg
