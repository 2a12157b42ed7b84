#include "ncg/ladder.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncg {

namespace {

constexpr Complex kI{0.0, 1.0};

// 1 / (2 kappa) = sqrt(hbar c / 2eB)
double coordinate_scale(const PhysicalUnits& u) {
  return std::sqrt(magnetic_length_squared(u) / 2.0);
}

// 1 / (2 lambda) = sqrt(eB hbar / 8c)
double momentum_scale(const PhysicalUnits& u) {
  return std::sqrt(u.charge() * u.field() * u.hbar() /
                   (8.0 * u.light_speed()));
}

}  // namespace

HamiltonianForm parse_hamiltonian_form(std::string_view tag) {
  if (tag == "ladder") return HamiltonianForm::ladder;
  if (tag == "quadratic") return HamiltonianForm::quadratic;
  throw std::invalid_argument("unknown Hamiltonian form '" + std::string(tag) +
                              "' (expected ladder or quadratic)");
}

OperatorMatrix build_a(const Cutoffs& c) {
  c.validate();
  const auto levels = static_cast<std::size_t>(c.landau + 1);
  return kron(OperatorMatrix::identity(Basis::single_mode(levels)),
              annihilation_matrix(static_cast<std::size_t>(c.degeneracy + 1)));
}

OperatorMatrix build_b(const Cutoffs& c) {
  c.validate();
  const auto width = static_cast<std::size_t>(c.degeneracy + 1);
  return kron(annihilation_matrix(static_cast<std::size_t>(c.landau + 1)),
              OperatorMatrix::identity(Basis::single_mode(width)));
}

OperatorMatrix build_alpha(const Cutoffs& c) {
  return build_a(c) + dagger(build_b(c));
}

CoordinatePair build_xy(const Cutoffs& c, const PhysicalUnits& u) {
  const OperatorMatrix alpha = build_alpha(c);
  const OperatorMatrix alpha_dag = dagger(alpha);
  const double s = coordinate_scale(u);
  return {s * (alpha + alpha_dag), (kI * s) * (alpha - alpha_dag)};
}

MomentumPair build_momenta(const Cutoffs& c, const PhysicalUnits& u) {
  const OperatorMatrix a = build_a(c);
  const OperatorMatrix b = build_b(c);
  const OperatorMatrix a_dag = dagger(a);
  const OperatorMatrix b_dag = dagger(b);
  const double s = momentum_scale(u);
  return {(-kI * s) * (a + b - a_dag - b_dag),
          Complex{s} * (a + a_dag - b - b_dag)};
}

OperatorMatrix build_L(const Cutoffs& c, const PhysicalUnits& u) {
  c.validate();
  std::vector<Complex> diag(c.dimension());
  for (std::size_t k = 0; k < diag.size(); ++k) {
    const BasisIndex idx = unflatten(k, c);
    diag[k] = u.hbar() * static_cast<double>(idx.j - idx.n);
  }
  return OperatorMatrix::diagonal(Basis::of(c), diag);
}

OperatorMatrix build_H(const Cutoffs& c, const PhysicalUnits& u,
                       HamiltonianForm form) {
  c.validate();
  const double omega = cyclotron_frequency(u);
  if (form == HamiltonianForm::ladder) {
    std::vector<Complex> diag(c.dimension());
    for (std::size_t k = 0; k < diag.size(); ++k) {
      diag[k] = u.hbar() * omega * (unflatten(k, c).n + 0.5);
    }
    return OperatorMatrix::diagonal(Basis::of(c), diag);
  }

  const auto [x, y] = build_xy(c, u);
  const auto [px, py] = build_momenta(c, u);
  const double half_omega = omega / 2.0;
  const double m = u.mass();
  const OperatorMatrix kinetic = matmul(px, px) + matmul(py, py);
  const OperatorMatrix radial = matmul(x, x) + matmul(y, y);
  return Complex{1.0 / (2.0 * m)} * kinetic +
         Complex{0.5 * m * half_omega * half_omega} * radial -
         Complex{half_omega} * build_L(c, u);
}

SymmetricGaugeOperators build_symmetric_gauge(const Cutoffs& c,
                                              const PhysicalUnits& u) {
  auto [x, y] = build_xy(c, u);
  auto [px, py] = build_momenta(c, u);
  return {c,
          u,
          build_a(c),
          build_b(c),
          build_alpha(c),
          std::move(x),
          std::move(y),
          std::move(px),
          std::move(py),
          build_H(c, u, HamiltonianForm::ladder),
          build_L(c, u)};
}

}  // namespace ncg
