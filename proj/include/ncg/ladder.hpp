#pragma once

#include <string_view>

#include "ncg/fock.hpp"
#include "ncg/units.hpp"

namespace ncg {

// Symmetric-gauge operators on the truncated two-mode space. The a-mode
// carries the degeneracy index j, the b-mode the Landau index n. With
// kappa = sqrt(eB / 2c hbar) and lambda = sqrt(2c / eB hbar):
//
//   a = (kappa/2)(x - iy) + (i lambda/2)(px - i py)
//   b = (kappa/2)(x + iy) + (i lambda/2)(px + i py)
//
// which inverts to
//
//   x  = (alpha + alpha^dag) / (2 kappa),  alpha = a + b^dag
//   y  = i (alpha - alpha^dag) / (2 kappa)
//   px = -i (a + b - a^dag - b^dag) / (2 lambda)
//   py =    (a + a^dag - b - b^dag) / (2 lambda)
//
// Every operator is built from corner-truncated a and b, so identities that
// need one more level than is retained fail only on the boundary rows.

struct SymmetricGaugeOperators {
  Cutoffs cutoffs;
  PhysicalUnits units;
  OperatorMatrix a, b, alpha, x, y, px, py, H, L;
};

enum class HamiltonianForm { ladder, quadratic };

/// Accepts "ladder" or "quadratic"; throws std::invalid_argument otherwise.
HamiltonianForm parse_hamiltonian_form(std::string_view tag);

OperatorMatrix build_a(const Cutoffs& c);
OperatorMatrix build_b(const Cutoffs& c);
OperatorMatrix build_alpha(const Cutoffs& c);

struct CoordinatePair {
  OperatorMatrix x;
  OperatorMatrix y;
};

CoordinatePair build_xy(const Cutoffs& c, const PhysicalUnits& u);

struct MomentumPair {
  OperatorMatrix px;
  OperatorMatrix py;
};

MomentumPair build_momenta(const Cutoffs& c, const PhysicalUnits& u);

/// Diagonal, hbar (j - n) at (n, j).
OperatorMatrix build_L(const Cutoffs& c, const PhysicalUnits& u);

/// ladder: hbar omega (b^dag b + 1/2), exactly diagonal.
/// quadratic: (px^2 + py^2)/2m + (m/2)(eB/2mc)^2 (x^2 + y^2) - (eB/2mc) L,
/// assembled from the truncated matrices, so it agrees with the ladder form
/// only between states two steps away from the truncation edge.
OperatorMatrix build_H(const Cutoffs& c, const PhysicalUnits& u,
                       HamiltonianForm form);

SymmetricGaugeOperators build_symmetric_gauge(const Cutoffs& c,
                                              const PhysicalUnits& u);

}  // namespace ncg
