#pragma once

#include <map>
#include <vector>

#include "ncg/fock.hpp"
#include "ncg/units.hpp"

namespace ncg {

/// Largest accepted |A - A^dagger| entry for hermitian_eigenvalues.
inline constexpr double kHermiticityTolerance = 1e-10;

/// Ascending eigenvalues. Throws std::invalid_argument (with the deviation)
/// if A is not Hermitian within kHermiticityTolerance.
std::vector<double> hermitian_eigenvalues(const OperatorMatrix& a);

struct SpectrumReport {
  Cutoffs cutoffs;
  std::vector<double> eigenvalues;
  /// hbar omega (n + 1/2), each repeated J + 1 times, ascending.
  std::vector<double> expected;
  double max_abs_error = 0.0;
  /// Landau level index -> number of eigenvalues found at that level.
  std::map<int, int> degeneracy_table;
  /// Largest entry of [H, L]; zero exactly.
  double hl_commutator_norm = 0.0;
  bool ok = false;
};

/// Diagonalizes the ladder-form Hamiltonian and compares with the Landau
/// levels; also checks that H commutes with L.
SpectrumReport verify_spectrum(const Cutoffs& c, const PhysicalUnits& u);

}  // namespace ncg
