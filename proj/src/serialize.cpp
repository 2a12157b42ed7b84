#include "ncg/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace ncg {

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", round15(v));
  return buf;
}

Json complex_json(Complex z) {
  return Json::array({round15(z.real()), round15(z.imag())});
}

Json matrix_to_json(const OperatorMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      entries.push_back(complex_json(m(r, c)));
    }
  }
  Json out;
  out["dim"] = m.dim();
  out["entries"] = std::move(entries);
  return out;
}

std::string matrix_to_csv(const OperatorMatrix& m) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      os << r << ',' << c << ',' << format15(m(r, c).real()) << ','
         << format15(m(r, c).imag()) << '\n';
    }
  }
  return os.str();
}

Json report_to_json(const CommutatorReport& r) {
  Json out;
  out["N"] = r.cutoffs.landau;
  if (r.grid_points) {
    out["M"] = *r.grid_points;
  } else {
    out["J"] = r.cutoffs.degeneracy;
  }
  out["keep"] = r.keep;
  out["top_coefficient"] = complex_json(r.top_coefficient);
  out["max_offtop_residual"] = round15(r.max_offtop_residual);
  Json artifacts = Json::array();
  for (const auto& a : r.boundary_artifacts) {
    Json item;
    item["row"] = Json::array({a.row.n, a.row.j});
    item["col"] = Json::array({a.col.n, a.col.j});
    item["value"] = complex_json(a.value);
    artifacts.push_back(std::move(item));
  }
  out["boundary_artifacts"] = std::move(artifacts);
  out["ok"] = r.ok;
  return out;
}

std::string reports_to_csv(const std::vector<CommutatorReport>& reports) {
  std::ostringstream os;
  os << "keep,re,im,residual\n";
  for (const auto& r : reports) {
    os << r.keep << ',' << format15(r.top_coefficient.real()) << ','
       << format15(r.top_coefficient.imag()) << ','
       << format15(r.max_offtop_residual) << '\n';
  }
  return os.str();
}

std::string reports_to_table(const std::vector<CommutatorReport>& reports) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%6s %22s %22s %14s %10s %4s\n", "keep",
                "Re top", "Im top", "residual", "artifacts", "ok");
  os << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%6d %22s %22s %14.3e %10zu %4s\n",
                  r.keep, format15(r.top_coefficient.real()).c_str(),
                  format15(r.top_coefficient.imag()).c_str(),
                  r.max_offtop_residual, r.boundary_artifacts.size(),
                  r.ok ? "yes" : "NO");
    os << line;
  }
  return os.str();
}

Json spectrum_to_json(const SpectrumReport& r) {
  Json out;
  out["N"] = r.cutoffs.landau;
  out["J"] = r.cutoffs.degeneracy;
  Json ev = Json::array();
  for (double v : r.eigenvalues) ev.push_back(round15(v));
  Json ex = Json::array();
  for (double v : r.expected) ex.push_back(round15(v));
  out["eigenvalues"] = std::move(ev);
  out["expected"] = std::move(ex);
  out["max_abs_error"] = round15(r.max_abs_error);
  Json table = Json::array();
  for (const auto& [level, count] : r.degeneracy_table) {
    table.push_back(Json::array({level, count}));
  }
  out["degeneracy_table"] = std::move(table);
  out["hl_commutator_norm"] = round15(r.hl_commutator_norm);
  out["ok"] = r.ok;
  return out;
}

std::string spectrum_to_csv(const SpectrumReport& r) {
  std::ostringstream os;
  os << "index,eigenvalue,expected,abs_error\n";
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    os << k << ',' << format15(r.eigenvalues[k]) << ','
       << format15(r.expected[k]) << ','
       << format15(std::abs(r.eigenvalues[k] - r.expected[k])) << '\n';
  }
  return os.str();
}

std::string spectrum_to_table(const SpectrumReport& r) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "Landau spectrum, N=%d J=%d\n",
                r.cutoffs.landau, r.cutoffs.degeneracy);
  os << line;
  std::snprintf(line, sizeof line, "%6s %22s %12s\n", "level", "energy",
                "multiplicity");
  os << line;
  std::size_t k = 0;
  for (const auto& [level, count] : r.degeneracy_table) {
    std::snprintf(line, sizeof line, "%6d %22s %12d\n", level,
                  format15(r.eigenvalues[k]).c_str(), count);
    os << line;
    k += static_cast<std::size_t>(count);
  }
  std::snprintf(line, sizeof line,
                "max |E - hbar w (n+1/2)| = %.3e   max |[H,L]| = %.3e   ok: "
                "%s\n",
                r.max_abs_error, r.hl_commutator_norm, r.ok ? "yes" : "NO");
  os << line;
  return os.str();
}

Json convergence_to_json(const std::vector<ConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json item;
    item["M"] = row.points;
    item["dk"] = round15(row.spacing);
    item["keep"] = row.keep;
    item["coefficient"] = complex_json(row.coefficient);
    item["abs_error"] = round15(row.abs_error);
    item["observed_order"] =
        row.observed_order ? Json(round15(*row.observed_order)) : Json(nullptr);
    out.push_back(std::move(item));
  }
  return out;
}

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "M,dk,keep,re_coeff,im_coeff,abs_error,observed_order\n";
  for (const auto& row : rows) {
    os << row.points << ',' << format15(row.spacing) << ',' << row.keep << ','
       << format15(row.coefficient.real()) << ','
       << format15(row.coefficient.imag()) << ',' << format15(row.abs_error)
       << ',';
    if (row.observed_order) os << format15(*row.observed_order);
    os << '\n';
  }
  return os.str();
}

std::string convergence_to_table(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%6s %12s %5s %22s %22s %12s %8s\n", "M",
                "dk", "keep", "Re coeff", "Im coeff", "abs error", "order");
  os << line;
  for (const auto& row : rows) {
    const std::string order =
        row.observed_order ? format15(*row.observed_order).substr(0, 8) : "-";
    std::snprintf(line, sizeof line, "%6zu %12.6g %5d %22s %22s %12.3e %8s\n",
                  row.points, row.spacing, row.keep,
                  format15(row.coefficient.real()).c_str(),
                  format15(row.coefficient.imag()).c_str(), row.abs_error,
                  order.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace ncg
