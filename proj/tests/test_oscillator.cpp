#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncg/oscillator.hpp"
#include "quadrature.hpp"

using namespace ncg;
using ncg_test::derivative;
using ncg_test::trapezoid;

namespace {

// Closed forms with explicit Hermite polynomials, natural units.
double phi_explicit(int n, double x) {
  const double g = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  switch (n) {
    case 0: return g;
    case 1: return g * std::sqrt(2.0) * x;
    case 2: return g * (2 * x * x - 1) / std::sqrt(2.0);
    case 3: return g * (8 * x * x * x - 12 * x) / std::sqrt(48.0);
    default: return NAN;
  }
}

}  // namespace

TEST_CASE("wavefunction values") {
  const PhysicalUnits u{};
  CHECK(hermite_wavefunction(0, 0.0, u) == doctest::Approx(0.7511255445).epsilon(1e-10));
  CHECK(hermite_wavefunction(1, 0.0, u) == 0.0);
  for (int n = 0; n <= 3; ++n) {
    for (double x : {-2.5, -0.3, 0.0, 0.7, 1.9}) {
      CHECK(hermite_wavefunction(n, x, u) == doctest::Approx(phi_explicit(n, x)).epsilon(1e-13));
    }
  }
  // Peak scales with (m omega / pi hbar)^(1/4).
  const PhysicalUnits v(2.0, 3.0, 1.0, 1.5, 1.0);
  CHECK(hermite_wavefunction(0, 0.0, v) ==
        doctest::Approx(std::pow(6.0 / (std::numbers::pi * 1.5), 0.25)));
}

TEST_CASE("wavefunction level range") {
  CHECK_THROWS_AS(hermite_wavefunction(-1, 0.0, PhysicalUnits{}), std::out_of_range);
  CHECK_THROWS_AS(hermite_wavefunction(kMaxHermiteLevel + 1, 0.0, PhysicalUnits{}),
                  std::out_of_range);
  CHECK(std::isfinite(hermite_wavefunction(kMaxHermiteLevel, 30.0, PhysicalUnits{})));
  CHECK(kMaxHermiteLevel >= 200);
}

TEST_CASE("high-level wavefunction stays normalized") {
  const PhysicalUnits u{};
  const int n = 200;
  const double norm = trapezoid(
      [&](double x) {
        const double p = hermite_wavefunction(n, x, u);
        return p * p;
      },
      -30.0, 30.0, 60000);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("orthonormality by quadrature, n, m <= 12") {
  for (const PhysicalUnits& u : {PhysicalUnits{}, PhysicalUnits(1.0, 3.0, 1.0, 1.0, 2.0)}) {
    for (int n = 0; n <= 12; ++n) {
      for (int m = n; m <= 12; ++m) {
        const double s = trapezoid(
            [&](double x) { return hermite_wavefunction(n, x, u) * hermite_wavefunction(m, x, u); },
            -14.0, 14.0, 5600);
        CHECK(std::abs(s - (n == m ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("x elements") {
  const auto x1 = oscillator_x_elements(1, PhysicalUnits{});
  CHECK(x1(0, 1).real() == doctest::Approx(0.7071067812));
  CHECK(x1(1, 0) == x1(0, 1));
  const auto x4 = oscillator_x_elements(4, PhysicalUnits{});
  for (std::size_t k = 0; k < 5; ++k) CHECK(x4(k, k) == Complex{});
  CHECK(x4(1, 2).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hermiticity_deviation(x4) == 0.0);
}

TEST_CASE("p elements") {
  const auto p1 = oscillator_p_elements(1, PhysicalUnits{});
  CHECK(std::abs(p1(1, 0) - Complex{0.0, 1.0 / std::sqrt(2.0)}) < 1e-15);
  CHECK(p1(0, 1) == std::conj(p1(1, 0)));
  const auto p4 = oscillator_p_elements(4, PhysicalUnits{});
  for (std::size_t k = 0; k < 5; ++k) CHECK(p4(k, k) == Complex{});
  CHECK(hermiticity_deviation(p4) == 0.0);
}

TEST_CASE("x and p elements match quadrature, n, m <= 12") {
  for (const PhysicalUnits& u : {PhysicalUnits{}, PhysicalUnits(2.0, 1.5, 1.0, 0.8, 3.0)}) {
    const auto xm = oscillator_x_elements(12, u);
    const auto pm = oscillator_p_elements(12, u);
    const double width = std::sqrt(u.hbar() * u.light_speed() / (u.charge() * u.field()));
    const double lo = -14.0 * width, hi = 14.0 * width;
    for (int n = 0; n <= 12; ++n) {
      for (int m = 0; m <= 12; ++m) {
        const double xq = trapezoid(
            [&](double x) { return hermite_wavefunction(n, x, u) * x * hermite_wavefunction(m, x, u); },
            lo, hi, 5600);
        // <n| -i hbar d/dx |m>
        const double dq = trapezoid(
            [&](double x) {
              return hermite_wavefunction(n, x, u) *
                     derivative([&](double t) { return hermite_wavefunction(m, t, u); }, x,
                                1e-3 * width);
            },
            lo, hi, 5600);
        const Complex pq{0.0, -u.hbar() * dq};
        const auto i = static_cast<std::size_t>(n), k = static_cast<std::size_t>(m);
        CHECK(std::abs(xm(i, k) - xq) < 1e-8);
        CHECK(std::abs(pm(i, k) - pq) < 1e-8);
      }
    }
  }
}
