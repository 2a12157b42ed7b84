#pragma once

#include "ncg/fock.hpp"
#include "ncg/units.hpp"

namespace ncg {

/// Highest level hermite_wavefunction evaluates. The recurrence itself is
/// stable; the limit keeps the classical turning point sqrt(2n+1) inside
/// the range where exp(-s^2/2) is a normal double.
inline constexpr int kMaxHermiteLevel = 600;

/// Normalized oscillator eigenfunction phi_n(x) for mass m and frequency
/// omega = eB/mc, by upward recurrence in the scaled coordinate
/// s = x sqrt(m omega / hbar). Throws std::out_of_range for n < 0 or
/// n > kMaxHermiteLevel.
double hermite_wavefunction(int n, double x, const PhysicalUnits& u);

/// <n| x |m> about the guiding center, levels 0..nmax:
/// sqrt(hbar / 2 m omega) (sqrt(m) delta_{n,m-1} + sqrt(m+1) delta_{n,m+1}).
OperatorMatrix oscillator_x_elements(int nmax, const PhysicalUnits& u);

/// <n| p |m>, levels 0..nmax:
/// i sqrt(m omega hbar / 2) (sqrt(m+1) delta_{n,m+1} - sqrt(m) delta_{n,m-1}).
OperatorMatrix oscillator_p_elements(int nmax, const PhysicalUnits& u);

}  // namespace ncg
