#include "ncg/run.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "ncg/ladder.hpp"
#include "ncg/projection.hpp"
#include "ncg/serialize.hpp"
#include "ncg/spectrum.hpp"

namespace ncg {

namespace {

// Acceptable observed convergence order: an error ratio of 4 +- 20% per
// halving of dk.
const double kMinOrder = std::log2(3.2);
const double kMaxOrder = std::log2(4.8);

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Cutoffs cutoffs_of(const RunConfig& cfg) { return {cfg.N, cfg.J}; }

KGrid grid_of(const RunConfig& cfg) {
  return KGrid::centered(cfg.grid_M, cfg.k_range, cfg.units);
}

RunResult run_commutator(const RunConfig& cfg) {
  const CommutatorReport r =
      projected_commutator_xy(cutoffs_of(cfg), cfg.kept_levels(), cfg.units);
  switch (cfg.output) {
    case OutputFormat::json: return {dump(report_to_json(r)), r.ok};
    case OutputFormat::csv: return {reports_to_csv({r}), r.ok};
    case OutputFormat::table: return {reports_to_table({r}), r.ok};
  }
  return {};
}

RunResult run_sweep(const RunConfig& cfg) {
  const auto reports = sweep(cutoffs_of(cfg), cfg.units, cfg.parallel);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok;
  switch (cfg.output) {
    case OutputFormat::json: {
      Json out;
      out["N"] = cfg.N;
      out["J"] = cfg.J;
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(report_to_json(r));
      out["reports"] = std::move(list);
      out["ok"] = ok;
      return {dump(out), ok};
    }
    case OutputFormat::csv: return {reports_to_csv(reports), ok};
    case OutputFormat::table: return {reports_to_table(reports), ok};
  }
  return {};
}

RunResult run_spectrum(const RunConfig& cfg) {
  const SpectrumReport r = verify_spectrum(cutoffs_of(cfg), cfg.units);
  switch (cfg.output) {
    case OutputFormat::json: return {dump(spectrum_to_json(r)), r.ok};
    case OutputFormat::csv: return {spectrum_to_csv(r), r.ok};
    case OutputFormat::table: return {spectrum_to_table(r), r.ok};
  }
  return {};
}

RunResult run_landau_gauge(const RunConfig& cfg) {
  const int keep = cfg.kept_levels();
  const KGrid grid = grid_of(cfg);
  const CommutatorReport report =
      projected_commutator_landau(grid, keep, cfg.units);
  const auto rows = convergence_study(grid, keep, cfg.units, cfg.refinements);
  bool ok = report.ok;
  for (const auto& row : rows) {
    if (row.observed_order) {
      ok = ok && *row.observed_order >= kMinOrder &&
           *row.observed_order <= kMaxOrder;
    }
  }
  switch (cfg.output) {
    case OutputFormat::json: {
      Json out;
      out["report"] = report_to_json(report);
      out["convergence"] = convergence_to_json(rows);
      out["ok"] = ok;
      return {dump(out), ok};
    }
    case OutputFormat::csv: return {convergence_to_csv(rows), ok};
    case OutputFormat::table:
      return {reports_to_table({report}) + "\n" + convergence_to_table(rows),
              ok};
  }
  return {};
}

RunResult run_crosscheck(const RunConfig& cfg) {
  const int keep = cfg.kept_levels();
  const CommutatorReport sym =
      projected_commutator_xy(cutoffs_of(cfg), keep, cfg.units);
  const CommutatorReport lg =
      projected_commutator_landau(grid_of(cfg), keep, cfg.units);
  const double rel = std::abs(sym.top_coefficient - lg.top_coefficient) /
                     std::abs(sym.top_coefficient);
  const bool ok = sym.ok && lg.ok && rel <= kLandauRelativeTolerance;
  switch (cfg.output) {
    case OutputFormat::json: {
      Json out;
      out["keep"] = keep;
      out["N"] = cfg.N;
      out["J"] = cfg.J;
      out["M"] = cfg.grid_M;
      out["symmetric_top"] = complex_json(sym.top_coefficient);
      out["landau_top"] = complex_json(lg.top_coefficient);
      out["relative_difference"] = round15(rel);
      out["ok"] = ok;
      return {dump(out), ok};
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "keep,symmetric_re,symmetric_im,landau_re,landau_im,relative_"
            "difference\n"
         << keep << ',' << format15(sym.top_coefficient.real()) << ','
         << format15(sym.top_coefficient.imag()) << ','
         << format15(lg.top_coefficient.real()) << ','
         << format15(lg.top_coefficient.imag()) << ',' << format15(rel)
         << '\n';
      return {os.str(), ok};
    }
    case OutputFormat::table: {
      std::ostringstream os;
      os << "gauge cross-check, keep=" << keep << "\n"
         << "  symmetric gauge (N=" << cfg.N << ", J=" << cfg.J
         << "): " << format15(sym.top_coefficient.real()) << " + "
         << format15(sym.top_coefficient.imag()) << "i\n"
         << "  Landau gauge    (M=" << cfg.grid_M
         << "): " << format15(lg.top_coefficient.real()) << " + "
         << format15(lg.top_coefficient.imag()) << "i\n"
         << "  relative difference: " << format15(rel) << "\n"
         << "  ok: " << (ok ? "yes" : "NO") << "\n";
      return {os.str(), ok};
    }
  }
  return {};
}

RunResult run_dump_matrix(const RunConfig& cfg) {
  const OperatorMatrix m = named_matrix(cfg, cfg.matrix);
  switch (cfg.output) {
    case OutputFormat::json: return {dump(matrix_to_json(m)), true};
    case OutputFormat::csv: return {matrix_to_csv(m), true};
    case OutputFormat::table: {
      std::ostringstream os;
      os << cfg.matrix << " (dim " << m.dim() << ")\n";
      for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
          const Complex z = m(r, c);
          os << (c ? "  " : "") << format15(z.real()) << (z.imag() < 0 ? "" : "+")
             << format15(z.imag()) << 'i';
        }
        os << '\n';
      }
      return {os.str(), true};
    }
  }
  return {};
}

bool needs_grid(Command c) {
  return c == Command::landau_gauge || c == Command::crosscheck ||
         c == Command::dump_matrix;
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "commutator") return Command::commutator;
  if (name == "sweep") return Command::sweep;
  if (name == "spectrum") return Command::spectrum;
  if (name == "landau-gauge") return Command::landau_gauge;
  if (name == "crosscheck") return Command::crosscheck;
  if (name == "dump-matrix") return Command::dump_matrix;
  throw UsageError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::commutator: return "commutator";
    case Command::sweep: return "sweep";
    case Command::spectrum: return "spectrum";
    case Command::landau_gauge: return "landau-gauge";
    case Command::crosscheck: return "crosscheck";
    case Command::dump_matrix: return "dump-matrix";
  }
  return "";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "table") return OutputFormat::table;
  throw UsageError("--output: unknown format '" + std::string(name) +
                   "' (expected json, csv or table)");
}

void validate(const RunConfig& cfg) {
  if (cfg.N < 0) throw UsageError("--N must be nonnegative");
  if (cfg.J < 0) throw UsageError("--J must be nonnegative");
  try {
    cutoffs_of(cfg).validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--N/--J: ") + e.what());
  }
  const int keep = cfg.kept_levels();
  if (keep < 0) throw UsageError("--keep must be nonnegative");
  if (keep > cfg.N && cfg.command != Command::landau_gauge) {
    throw UsageError("--keep (" + std::to_string(keep) +
                     ") must not exceed --N (" + std::to_string(cfg.N) + ")");
  }
  if (needs_grid(cfg.command)) {
    if (cfg.grid_M < 3) throw UsageError("--grid-M must be at least 3");
    if (cfg.grid_M <= 2 * kGridEdgeExclusion) {
      throw UsageError("--grid-M leaves no interior grid points");
    }
    if (!(cfg.k_range > 0.0) || !std::isfinite(cfg.k_range)) {
      throw UsageError("--k-range must be positive");
    }
  }
  if (cfg.command == Command::landau_gauge || cfg.command == Command::crosscheck) {
    // Every refinement roughly doubles the grid.
    const std::size_t finest =
        ((cfg.grid_M - 1) << std::max(cfg.refinements, 0)) + 1;
    if (static_cast<std::size_t>(keep + 1) * finest > kMaxDimension) {
      throw UsageError("--grid-M/--refinements: Landau-gauge space exceeds " +
                       std::to_string(kMaxDimension) + " states");
    }
  }
  if (cfg.refinements < 0 || cfg.refinements > 6) {
    throw UsageError("--refinements must be in 0..6");
  }
}

OperatorMatrix named_matrix(const RunConfig& cfg, std::string_view name) {
  const Cutoffs c = cutoffs_of(cfg);
  const PhysicalUnits& u = cfg.units;
  if (name == "a") return build_a(c);
  if (name == "b") return build_b(c);
  if (name == "alpha") return build_alpha(c);
  if (name == "x") return build_xy(c, u).x;
  if (name == "y") return build_xy(c, u).y;
  if (name == "px") return build_momenta(c, u).px;
  if (name == "py") return build_momenta(c, u).py;
  if (name == "H") return build_H(c, u, HamiltonianForm::ladder);
  if (name == "H_quadratic") return build_H(c, u, HamiltonianForm::quadratic);
  if (name == "L") return build_L(c, u);
  if (name == "commutator") {
    const auto [x, y] = build_xy(c, u);
    return commutator(x, y);
  }
  if (name == "projector") return projector(c, cfg.kept_levels());
  if (name == "landau_x") {
    return build_landau_xy(grid_of(cfg), cfg.kept_levels(), u).x;
  }
  if (name == "landau_y") {
    return build_landau_xy(grid_of(cfg), cfg.kept_levels(), u).y;
  }
  throw UsageError("--matrix: unknown operator '" + std::string(name) + "'");
}

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  RunResult result;
  switch (cfg.command) {
    case Command::commutator: result = run_commutator(cfg); break;
    case Command::sweep: result = run_sweep(cfg); break;
    case Command::spectrum: result = run_spectrum(cfg); break;
    case Command::landau_gauge: result = run_landau_gauge(cfg); break;
    case Command::crosscheck: result = run_crosscheck(cfg); break;
    case Command::dump_matrix: result = run_dump_matrix(cfg); break;
  }
  if (cfg.out_path) {
    std::ofstream out(*cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + *cfg.out_path);
    out << result.text;
    if (!out) throw std::runtime_error("failed writing " + *cfg.out_path);
  }
  return result;
}

}  // namespace ncg
