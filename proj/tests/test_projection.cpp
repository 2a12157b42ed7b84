#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ncg/ladder.hpp"
#include "ncg/projection.hpp"

using namespace ncg;

namespace {

// <n, j| alpha |n', j'> with alpha = a + b^dag, from the oscillator rules
// a|j> = sqrt(j)|j-1>, b^dag|n> = sqrt(n+1)|n+1>, with no truncation.
double alpha_element(int n, int j, int np, int jp) {
  double v = 0.0;
  if (n == np && j == jp - 1) v += std::sqrt(static_cast<double>(jp));
  if (j == jp && n == np + 1) v += std::sqrt(static_cast<double>(np + 1));
  return v;
}

// <n j| [alpha, alpha^dag] |n' j'> with the intermediate sums restricted to
// m <= keep and l <= lmax, as a literal double loop.
double truncated_sum(int n, int j, int np, int jp, int keep, int lmax) {
  double s = 0.0;
  for (int m = 0; m <= keep; ++m) {
    for (int l = 0; l <= lmax; ++l) {
      s += alpha_element(n, j, m, l) * alpha_element(np, jp, m, l);
      s -= alpha_element(m, l, n, j) * alpha_element(m, l, np, jp);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("projector") {
  const Cutoffs c{3, 2};
  CHECK(projector(c, 3).entries().isIdentity(0.0));
  const auto p = projector({1, 0}, 0);
  CHECK(p(0, 0) == Complex{1.0});
  CHECK(p(1, 1) == Complex{});
  for (int keep = 0; keep <= 3; ++keep) {
    const auto pk = projector(c, keep);
    CHECK(approx_equal(matmul(pk, pk), pk, 0.0));
    CHECK(hermiticity_deviation(pk) == 0.0);
  }
  CHECK_THROWS_AS(projector(c, 4), std::invalid_argument);
  CHECK_THROWS_AS(projector(c, -1), std::invalid_argument);
}

TEST_CASE("project") {
  const Cutoffs c{1, 2};
  const auto [x, y] = build_xy(c, PhysicalUnits{});
  CHECK(approx_equal(project(x, OperatorMatrix::identity(Basis::of(c))), x, 0.0));
  const auto p0 = projector(c, 0);
  CHECK(approx_equal(project(OperatorMatrix::identity(Basis::of(c)), p0), p0, 0.0));
  const auto px = project(x, p0);
  for (std::size_t r = 0; r < px.dim(); ++r) {
    for (std::size_t col = 0; col < px.dim(); ++col) {
      if (unflatten(r, c).n == 1 || unflatten(col, c).n == 1) {
        CHECK(px(r, col) == Complex{});
      }
    }
  }
  CHECK_THROWS_AS(project(x, projector({2, 2}, 0)), std::invalid_argument);
}

TEST_CASE("projected commutator matches the brute-force intermediate sums") {
  for (int N = 0; N <= 4; ++N) {
    for (int J = 1; J <= 4; ++J) {
      const Cutoffs c{N, J};
      for (int keep = 0; keep <= N; ++keep) {
        const auto p = projector(c, keep);
        const auto [x, y] = build_xy(c, PhysicalUnits{});
        const auto comm = commutator(project(x, p), project(y, p));
        for (int n = 0; n <= keep; ++n)
          for (int j = 0; j <= J; ++j)
            for (int np = 0; np <= keep; ++np)
              for (int jp = 0; jp <= J; ++jp) {
                const Complex expect{0.0, -truncated_sum(n, j, np, jp, keep, J)};
                CHECK(std::abs(comm(flatten({n, j}, c), flatten({np, jp}, c)) - expect) <
                      1e-12);
              }
      }
    }
  }
}

TEST_CASE("lowest level: top coefficient -i, no residual") {
  const auto r = projected_commutator_xy({0, 3}, 0, PhysicalUnits{});
  CHECK(std::abs(r.top_coefficient - Complex{0.0, -1.0}) <= 1e-12);
  CHECK(r.max_offtop_residual <= 1e-12);
  CHECK(r.top_constant);
  CHECK(r.ok);
}

TEST_CASE("two lowest levels: diag(0, -2i)") {
  const Cutoffs c{1, 3};
  const auto r = projected_commutator_xy(c, 1, PhysicalUnits{});
  CHECK(std::abs(r.top_coefficient - Complex{0.0, -2.0}) <= 1e-12);
  CHECK(r.max_offtop_residual <= 1e-12);
  CHECK(r.ok);
}

TEST_CASE("keep = 5 gives -6i") {
  const auto r = projected_commutator_xy({5, 8}, 5, PhysicalUnits{});
  CHECK(std::abs(r.top_coefficient - Complex{0.0, -6.0}) <= 1e-12 * 6.0);
  CHECK(r.ok);
}

TEST_CASE("level 2 stops carrying the commutator once level 3 is kept") {
  const Cutoffs c{4, 5};
  const auto p = projector(c, 3);
  const auto [x, y] = build_xy(c, PhysicalUnits{});
  const auto comm = commutator(project(x, p), project(y, p));
  for (int j = 0; j < 5; ++j) {
    const auto k = flatten({2, j}, c);
    CHECK(std::abs(comm(k, k)) < 1e-12);
  }
  const auto scan = full_space_scan(c, PhysicalUnits{});
  for (const auto& e : scan) {
    if (e.index.n == 2) CHECK(std::abs(e.value) < 1e-12);
  }
}

TEST_CASE("boundary artifacts sit on the j = J edge") {
  const Cutoffs c{2, 3};
  const auto r = projected_commutator_xy(c, 2, PhysicalUnits{});
  REQUIRE(!r.boundary_artifacts.empty());
  for (const auto& a : r.boundary_artifacts) {
    CHECK((a.row.j == 3 || a.col.j == 3));
  }
  // Top level at the j edge: 1 + N from the b-boundary, -J - 1 from the
  // a-boundary, so -i (N - J) overall.
  bool found = false;
  for (const auto& a : r.boundary_artifacts) {
    if (a.row == BasisIndex{2, 3} && a.col == BasisIndex{2, 3}) {
      found = true;
      CHECK(std::abs(a.value - Complex{0.0, 1.0}) < 1e-12);
    }
  }
  CHECK(found);
}

TEST_CASE("no interior degeneracy state means no verdict") {
  const auto r = projected_commutator_xy({2, 0}, 1, PhysicalUnits{});
  CHECK_FALSE(r.ok);
}

TEST_CASE("two computation routes agree: [PxP, PyP] = -i l^2 [alpha_T, alpha_T^dag]") {
  const PhysicalUnits u(1.5, 2.5, 3.0, 0.7, 1.1);
  const double l2 = magnetic_length_squared(u);
  for (int N = 0; N <= 5; ++N) {
    const Cutoffs c{N, 4};
    for (int keep = 0; keep <= N; ++keep) {
      const auto p = projector(c, keep);
      const auto [x, y] = build_xy(c, u);
      const auto comm = commutator(project(x, p), project(y, p));
      const Cutoffs kept{keep, 4};
      const auto at = build_alpha(kept);
      const auto route2 = Complex{0.0, -l2} * commutator(at, dagger(at));
      const auto d = static_cast<Eigen::Index>(kept.dimension());
      CHECK((comm.entries().topLeftCorner(d, d) - route2.entries()).cwiseAbs().maxCoeff() <
            1e-12 * std::max(1.0, l2));
    }
  }
}

TEST_CASE("every interior element vanishes except the top diagonal") {
  for (int N = 0; N <= 6; ++N) {
    for (int J = 1; J <= 4; ++J) {
      for (int keep = 0; keep <= N; ++keep) {
        const auto r = projected_commutator_xy({N, J}, keep, PhysicalUnits{});
        CHECK(r.ok);
        CHECK(r.max_offtop_residual <= 1e-12);
        CHECK(std::abs(r.top_coefficient - Complex{0.0, -(keep + 1.0)}) <=
              1e-12 * (keep + 1));
      }
    }
  }
}

TEST_CASE("degeneracy cutoff independence and field scaling") {
  const PhysicalUnits u{};
  for (int keep : {0, 2, 4}) {
    const auto r1 = projected_commutator_xy({4, 3}, keep, u);
    const auto r2 = projected_commutator_xy({4, 8}, keep, u);
    CHECK(std::abs(r1.top_coefficient - r2.top_coefficient) <= 1e-12);
    const auto rb = projected_commutator_xy({4, 3}, keep, u.with_field(2.0));
    CHECK(std::abs(rb.top_coefficient * 2.0 - r1.top_coefficient) <= 1e-12);
    CHECK(rb.ok);
  }
}

TEST_CASE("sweep") {
  const auto reports = sweep({3, 4}, PhysicalUnits{});
  REQUIRE(reports.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(reports[static_cast<std::size_t>(k)].keep == k);
    CHECK(std::abs(reports[static_cast<std::size_t>(k)].top_coefficient -
                   Complex{0.0, -(k + 1.0)}) <= 1e-12);
  }
  const auto one = sweep({0, 3}, PhysicalUnits{});
  REQUIRE(one.size() == 1);
  CHECK(std::abs(one[0].top_coefficient - Complex{0.0, -1.0}) <= 1e-12);

  const auto scaled = sweep({3, 4}, PhysicalUnits(1, 2, 1, 1, 1));
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(scaled[static_cast<std::size_t>(k)].top_coefficient -
                   Complex{0.0, -0.5 * (k + 1)}) <= 1e-12);
  }
}

TEST_CASE("parallel sweep matches the serial one") {
  const auto serial = sweep({6, 5}, PhysicalUnits{});
  const auto parallel = sweep({6, 5}, PhysicalUnits{}, true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(parallel[k].keep == serial[k].keep);
    CHECK(parallel[k].top_coefficient == serial[k].top_coefficient);
    CHECK(parallel[k].max_offtop_residual == serial[k].max_offtop_residual);
  }
}

TEST_CASE("full-space scan") {
  for (const auto& e : full_space_scan({4, 4}, PhysicalUnits{})) {
    CHECK(std::abs(e.value) <= 1e-12);
  }
  const auto small = full_space_scan({1, 1}, PhysicalUnits{});
  REQUIRE(small.size() == 1);
  CHECK(small[0].index == BasisIndex{0, 0});
  CHECK(std::abs(small[0].value) <= 1e-15);

  const int N = 3, J = 4;
  for (const auto& e : full_space_boundary({N, J}, PhysicalUnits{})) {
    if (e.index.n == N && e.index.j < J) {
      CHECK(std::abs(e.value - Complex{0.0, -(N + 1.0)}) < 1e-12);
    } else if (e.index.n < N && e.index.j == J) {
      CHECK(std::abs(e.value - Complex{0.0, J + 1.0}) < 1e-12);
    } else {
      CHECK(std::abs(e.value - Complex{0.0, static_cast<double>(J - N)}) < 1e-12);
    }
  }
}
