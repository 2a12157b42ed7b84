#include "ncg/projection.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

#include "ncg/ladder.hpp"

namespace ncg {

namespace {

using Index = Eigen::Index;

// Absolute tolerance for exact-algebra checks, scaled with l^2 so the
// checks are unit independent.
double exact_tolerance(const PhysicalUnits& u) {
  return kDefaultTolerance * std::max(1.0, magnetic_length_squared(u));
}

OperatorMatrix full_commutator(const Cutoffs& c, const PhysicalUnits& u) {
  const auto [x, y] = build_xy(c, u);
  return commutator(x, y);
}

}  // namespace

OperatorMatrix projector(const Cutoffs& c, int keep) {
  c.validate();
  if (keep < 0 || keep > c.landau) {
    throw std::invalid_argument("kept level count keep=" +
                                std::to_string(keep) + " outside 0..N=" +
                                std::to_string(c.landau));
  }
  std::vector<Complex> diag(c.dimension());
  for (std::size_t k = 0; k < diag.size(); ++k) {
    diag[k] = unflatten(k, c).n <= keep ? 1.0 : 0.0;
  }
  return OperatorMatrix::diagonal(Basis::of(c), diag);
}

OperatorMatrix project(const OperatorMatrix& op, const OperatorMatrix& p) {
  return matmul(p, matmul(op, p));
}

CommutatorReport projected_commutator_xy(const Cutoffs& c, int keep,
                                         const PhysicalUnits& u) {
  const OperatorMatrix p = projector(c, keep);
  const auto [x, y] = build_xy(c, u);
  const OperatorMatrix px = project(x, p);
  const OperatorMatrix py = project(y, p);
  const OperatorMatrix comm = commutator(px, py);

  const double l2 = magnetic_length_squared(u);
  const double tol = exact_tolerance(u);
  const int J = c.degeneracy;

  CommutatorReport report;
  report.cutoffs = c;
  report.keep = keep;
  report.expected_top = Complex{0.0, -(keep + 1) * l2};

  const std::size_t kept = static_cast<std::size_t>(keep + 1) *
                           static_cast<std::size_t>(J + 1);
  bool have_top = false;
  for (std::size_t r = 0; r < kept; ++r) {
    const BasisIndex row = unflatten(r, c);
    for (std::size_t col = 0; col < kept; ++col) {
      const BasisIndex cidx = unflatten(col, c);
      const Complex v = comm(r, col);
      if (row.j == J || cidx.j == J) {
        if (std::abs(v) > tol) report.boundary_artifacts.push_back({row, cidx, v});
        continue;
      }
      const bool top = row.n == keep && cidx.n == keep && row.j == cidx.j;
      if (!top) {
        report.max_offtop_residual =
            std::max(report.max_offtop_residual, std::abs(v));
      } else if (!have_top) {
        report.top_coefficient = v;
        have_top = true;
      } else if (std::abs(v - report.top_coefficient) > tol) {
        report.top_constant = false;
      }
    }
  }

  // J = 0 leaves no interior degeneracy state to read the top level from.
  report.ok = have_top && report.top_constant &&
              report.max_offtop_residual <= tol &&
              std::abs(report.top_coefficient - report.expected_top) <=
                  kDefaultTolerance * std::abs(report.expected_top);
  return report;
}

std::vector<CommutatorReport> sweep(const Cutoffs& c, const PhysicalUnits& u,
                                    bool parallel) {
  c.validate();
  std::vector<CommutatorReport> reports;
  reports.reserve(static_cast<std::size_t>(c.landau + 1));
  if (!parallel) {
    for (int keep = 0; keep <= c.landau; ++keep) {
      reports.push_back(projected_commutator_xy(c, keep, u));
    }
    return reports;
  }
  std::vector<std::future<CommutatorReport>> pending;
  for (int keep = 0; keep <= c.landau; ++keep) {
    pending.push_back(std::async(std::launch::async, [&c, &u, keep] {
      return projected_commutator_xy(c, keep, u);
    }));
  }
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

std::vector<ScanEntry> full_space_scan(const Cutoffs& c,
                                       const PhysicalUnits& u) {
  const OperatorMatrix comm = full_commutator(c, u);
  std::vector<ScanEntry> out;
  for (int n = 0; n < c.landau; ++n) {
    for (int j = 0; j < c.degeneracy; ++j) {
      const std::size_t k = flatten({n, j}, c);
      out.push_back({{n, j}, comm(k, k)});
    }
  }
  return out;
}

std::vector<ScanEntry> full_space_boundary(const Cutoffs& c,
                                           const PhysicalUnits& u) {
  const OperatorMatrix comm = full_commutator(c, u);
  std::vector<ScanEntry> out;
  for (std::size_t k = 0; k < c.dimension(); ++k) {
    const BasisIndex idx = unflatten(k, c);
    if (idx.n == c.landau || idx.j == c.degeneracy) {
      out.push_back({idx, comm(k, k)});
    }
  }
  return out;
}

}  // namespace ncg
