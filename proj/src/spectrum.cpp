#include "ncg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "ncg/ladder.hpp"

namespace ncg {

std::vector<double> hermitian_eigenvalues(const OperatorMatrix& a) {
  const double dev = hermiticity_deviation(a);
  if (dev > kHermiticityTolerance) {
    throw std::invalid_argument(
        "hermitian_eigenvalues: matrix is not Hermitian (max |A - A^dag| = " +
        std::to_string(dev) + ")");
  }
  Eigen::SelfAdjointEigenSolver<OperatorMatrix::Dense> solver(
      a.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumReport verify_spectrum(const Cutoffs& c, const PhysicalUnits& u) {
  c.validate();
  const double quantum = u.hbar() * cyclotron_frequency(u);
  const OperatorMatrix h = build_H(c, u, HamiltonianForm::ladder);
  const OperatorMatrix l = build_L(c, u);

  SpectrumReport report;
  report.cutoffs = c;
  report.eigenvalues = hermitian_eigenvalues(h);
  for (int n = 0; n <= c.landau; ++n) {
    for (int j = 0; j <= c.degeneracy; ++j) {
      report.expected.push_back(quantum * (n + 0.5));
    }
  }
  for (std::size_t k = 0; k < report.eigenvalues.size(); ++k) {
    const double ev = report.eigenvalues[k];
    report.max_abs_error =
        std::max(report.max_abs_error, std::abs(ev - report.expected[k]));
    const int level = static_cast<int>(std::lround(ev / quantum - 0.5));
    ++report.degeneracy_table[level];
  }
  report.hl_commutator_norm =
      commutator(h, l).entries().cwiseAbs().maxCoeff();

  const double tol = kDefaultTolerance * std::max(1.0, quantum);
  bool multiplicities = static_cast<int>(report.degeneracy_table.size()) ==
                        c.landau + 1;
  for (const auto& [level, count] : report.degeneracy_table) {
    multiplicities = multiplicities && level >= 0 && level <= c.landau &&
                     count == c.degeneracy + 1;
  }
  report.ok = report.max_abs_error <= tol && multiplicities &&
              report.hl_commutator_norm == 0.0;
  return report;
}

}  // namespace ncg
