#include "ncg/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

// m omega = eB / c
double oscillator_stiffness(const PhysicalUnits& u) {
  return u.charge() * u.field() / u.light_speed();
}

void require_level(int nmax) {
  if (nmax < 0 || nmax >= static_cast<int>(kMaxDimension)) {
    throw std::invalid_argument("oscillator level cutoff " +
                                std::to_string(nmax) + " out of range");
  }
}

}  // namespace

double hermite_wavefunction(int n, double x, const PhysicalUnits& u) {
  if (n < 0 || n > kMaxHermiteLevel) {
    throw std::out_of_range("oscillator level " + std::to_string(n) +
                            " outside 0.." + std::to_string(kMaxHermiteLevel));
  }
  const double inv_width2 = oscillator_stiffness(u) / u.hbar();
  const double s = x * std::sqrt(inv_width2);
  const double norm = std::pow(inv_width2, 0.25);

  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * s * s);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * s * cur -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return norm * cur;
}

OperatorMatrix oscillator_x_elements(int nmax, const PhysicalUnits& u) {
  require_level(nmax);
  const double scale = std::sqrt(u.hbar() / (2.0 * oscillator_stiffness(u)));
  const auto d = static_cast<Eigen::Index>(nmax + 1);
  OperatorMatrix::Dense m = OperatorMatrix::Dense::Zero(d, d);
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    const double v = scale * std::sqrt(static_cast<double>(k + 1));
    m(k, k + 1) = v;
    m(k + 1, k) = v;
  }
  return {Basis::single_mode(static_cast<std::size_t>(d)), std::move(m)};
}

OperatorMatrix oscillator_p_elements(int nmax, const PhysicalUnits& u) {
  require_level(nmax);
  const double scale = std::sqrt(oscillator_stiffness(u) * u.hbar() / 2.0);
  const auto d = static_cast<Eigen::Index>(nmax + 1);
  OperatorMatrix::Dense m = OperatorMatrix::Dense::Zero(d, d);
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    const double v = scale * std::sqrt(static_cast<double>(k + 1));
    m(k + 1, k) = Complex{0.0, v};
    m(k, k + 1) = Complex{0.0, -v};
  }
  return {Basis::single_mode(static_cast<std::size_t>(d)), std::move(m)};
}

}  // namespace ncg
