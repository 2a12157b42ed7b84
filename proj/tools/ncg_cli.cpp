// ncg: command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncg/ncg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Flags {
  int N = 4;
  int J = 8;
  int keep = -1;
  std::size_t grid_M = 128;
  double k_range = 8.0;
  int refinements = 2;
  double e = 1.0, B = 1.0, c = 1.0, hbar = 1.0, m = 1.0;
  std::string output;
  std::string out_path;
  std::string matrix = "x";
  std::string dump_matrix;
  bool parallel = false;
};

class Config {
 public:
  Config() {
    if (ncg_config_create(&cfg_) != NCG_OK) throw std::bad_alloc();
  }
  ~Config() { ncg_config_destroy(cfg_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;
  ncg_config* get() const { return cfg_; }

 private:
  ncg_config* cfg_ = nullptr;
};

int usage_error(const char* what) {
  std::fprintf(stderr, "ncg: usage error: %s\n", what);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinate commutators in truncated Landau-level spaces"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Flags f;
  app.add_option("--N", f.N, "Landau cutoff: levels 0..N")->check(CLI::NonNegativeNumber);
  app.add_option("--J", f.J, "degeneracy cutoff: quanta 0..J")->check(CLI::NonNegativeNumber);
  app.add_option("--keep", f.keep, "kept Landau levels 0..keep (default N)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--grid-M", f.grid_M, "Landau-gauge k-grid points");
  app.add_option("--k-range", f.k_range,
                 "k-grid half-width in units of eB l / c");
  app.add_option("--refinements", f.refinements,
                 "dk halvings in the landau-gauge convergence study");
  app.add_option("--e", f.e, "charge");
  app.add_option("--B", f.B, "magnetic field");
  app.add_option("--c", f.c, "speed of light");
  app.add_option("--hbar", f.hbar, "reduced Planck constant");
  app.add_option("--m", f.m, "mass");
  app.add_option("--output", f.output, "json | csv | table");
  app.add_option("--out", f.out_path, "write the report to this file");
  app.add_option("--matrix", f.matrix, "operator for dump-matrix");
  app.add_option("--dump-matrix", f.dump_matrix,
                 "shorthand for: dump-matrix --matrix NAME");
  app.add_flag("--parallel", f.parallel, "evaluate sweeps in parallel");

  std::string command = "commutator";
  for (const char* name : {"commutator", "sweep", "spectrum", "landau-gauge",
                           "crosscheck", "dump-matrix"}) {
    app.add_subcommand(name)->callback([&command, name] { command = name; });
  }
  app.get_subcommand("commutator")->description("projected [x, y] report");
  app.get_subcommand("sweep")->description("projected [x, y] for keep = 0..N");
  app.get_subcommand("spectrum")->description("Landau-level spectrum check");
  app.get_subcommand("landau-gauge")
      ->description("Landau-gauge k-grid commutator and convergence study");
  app.get_subcommand("crosscheck")
      ->description("symmetric vs Landau gauge top coefficient");
  app.get_subcommand("dump-matrix")->description("serialize one operator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!f.dump_matrix.empty()) {
    command = "dump-matrix";
    f.matrix = f.dump_matrix;
  }
  if (f.output.empty()) {
    const char* env = std::getenv("NCG_DEFAULT_OUTPUT");
    f.output = env && *env ? env : "table";
  }

  Config cfg;
  ncg_config* h = cfg.get();
  if (ncg_config_set_command(h, command.c_str()) != NCG_OK ||
      ncg_config_set_cutoffs(h, f.N, f.J) != NCG_OK ||
      ncg_config_set_keep(h, f.keep) != NCG_OK ||
      ncg_config_set_grid(h, f.grid_M, f.k_range) != NCG_OK ||
      ncg_config_set_refinements(h, f.refinements) != NCG_OK ||
      ncg_config_set_units(h, f.e, f.B, f.c, f.hbar, f.m) != NCG_OK ||
      ncg_config_set_output(h, f.output.c_str()) != NCG_OK ||
      ncg_config_set_matrix(h, f.matrix.c_str()) != NCG_OK ||
      ncg_config_set_parallel(h, f.parallel ? 1 : 0) != NCG_OK ||
      ncg_config_set_out_path(h, f.out_path.empty() ? nullptr
                                                    : f.out_path.c_str()) !=
          NCG_OK) {
    return usage_error(ncg_last_error());
  }

  ncg_result* res = nullptr;
  const ncg_status status = ncg_run(h, &res);
  if (res == nullptr) {
    if (status == NCG_ERR_INVALID_ARGUMENT || status == NCG_ERR_OUT_OF_RANGE) {
      return usage_error(ncg_last_error());
    }
    std::fprintf(stderr, "ncg: error: %s\n", ncg_last_error());
    return kExitError;
  }
  if (f.out_path.empty()) {
    std::fwrite(ncg_result_text(res), 1, ncg_result_size(res), stdout);
  }
  const bool ok = ncg_result_ok(res) != 0;
  ncg_result_destroy(res);
  if (!ok) {
    std::fprintf(stderr, "ncg: one or more checks failed\n");
    return kExitCheckFailed;
  }
  return kExitOk;
}
