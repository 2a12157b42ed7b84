#include "ncg/ncg.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "ncg/projection.hpp"
#include "ncg/run.hpp"

struct ncg_config {
  ncg::RunConfig cfg;
};

struct ncg_result {
  ncg::RunResult result;
};

struct ncg_matrix {
  ncg::OperatorMatrix m;
};

namespace {

thread_local std::string last_error;

ncg_status fail(ncg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the engine's exceptions onto status codes.
template <class F>
ncg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const std::out_of_range& e) {
    return fail(NCG_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NCG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NCG_ERR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(NCG_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(NCG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NCG_ERR_INTERNAL, "unknown error");
  }
}

#define NCG_REQUIRE(ptr)                                          \
  do {                                                            \
    if ((ptr) == nullptr) {                                       \
      return fail(NCG_ERR_NULL_HANDLE, #ptr " must not be NULL"); \
    }                                                             \
  } while (0)

}  // namespace

extern "C" {

const char* ncg_version(void) { return "1.0.0"; }

const char* ncg_last_error(void) { return last_error.c_str(); }

ncg_status ncg_config_create(ncg_config** out) {
  NCG_REQUIRE(out);
  return guarded([&] {
    *out = new ncg_config{};
    return NCG_OK;
  });
}

void ncg_config_destroy(ncg_config* cfg) { delete cfg; }

ncg_status ncg_config_set_command(ncg_config* cfg, const char* name) {
  NCG_REQUIRE(cfg);
  NCG_REQUIRE(name);
  return guarded([&] {
    cfg->cfg.command = ncg::parse_command(name);
    return NCG_OK;
  });
}

ncg_status ncg_config_set_cutoffs(ncg_config* cfg, int N, int J) {
  NCG_REQUIRE(cfg);
  if (N < 0) return fail(NCG_ERR_INVALID_ARGUMENT, "--N must be nonnegative");
  if (J < 0) return fail(NCG_ERR_INVALID_ARGUMENT, "--J must be nonnegative");
  cfg->cfg.N = N;
  cfg->cfg.J = J;
  return NCG_OK;
}

ncg_status ncg_config_set_keep(ncg_config* cfg, int keep) {
  NCG_REQUIRE(cfg);
  if (keep < 0) {
    cfg->cfg.keep.reset();
  } else {
    cfg->cfg.keep = keep;
  }
  return NCG_OK;
}

ncg_status ncg_config_set_grid(ncg_config* cfg, size_t points, double k_range) {
  NCG_REQUIRE(cfg);
  if (points < 3) {
    return fail(NCG_ERR_INVALID_ARGUMENT, "--grid-M must be at least 3");
  }
  if (!(k_range > 0.0)) {
    return fail(NCG_ERR_INVALID_ARGUMENT, "--k-range must be positive");
  }
  cfg->cfg.grid_M = points;
  cfg->cfg.k_range = k_range;
  return NCG_OK;
}

ncg_status ncg_config_set_refinements(ncg_config* cfg, int count) {
  NCG_REQUIRE(cfg);
  if (count < 0) {
    return fail(NCG_ERR_INVALID_ARGUMENT, "--refinements must be nonnegative");
  }
  cfg->cfg.refinements = count;
  return NCG_OK;
}

ncg_status ncg_config_set_units(ncg_config* cfg, double e, double B, double c,
                                double hbar, double m) {
  NCG_REQUIRE(cfg);
  return guarded([&] {
    cfg->cfg.units = ncg::PhysicalUnits(e, B, c, hbar, m);
    return NCG_OK;
  });
}

ncg_status ncg_config_set_output(ncg_config* cfg, const char* format) {
  NCG_REQUIRE(cfg);
  NCG_REQUIRE(format);
  return guarded([&] {
    cfg->cfg.output = ncg::parse_output_format(format);
    return NCG_OK;
  });
}

ncg_status ncg_config_set_matrix(ncg_config* cfg, const char* name) {
  NCG_REQUIRE(cfg);
  NCG_REQUIRE(name);
  cfg->cfg.matrix = name;
  return NCG_OK;
}

ncg_status ncg_config_set_out_path(ncg_config* cfg, const char* path) {
  NCG_REQUIRE(cfg);
  if (path == nullptr) {
    cfg->cfg.out_path.reset();
  } else {
    cfg->cfg.out_path = path;
  }
  return NCG_OK;
}

ncg_status ncg_config_set_parallel(ncg_config* cfg, int enabled) {
  NCG_REQUIRE(cfg);
  cfg->cfg.parallel = enabled != 0;
  return NCG_OK;
}

ncg_status ncg_run(const ncg_config* cfg, ncg_result** out) {
  NCG_REQUIRE(cfg);
  NCG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto* res = new ncg_result{ncg::run(cfg->cfg)};
    *out = res;
    if (res->result.ok) return NCG_OK;
    return fail(NCG_ERR_CHECK_FAILED, "one or more report checks failed");
  });
}

const char* ncg_result_text(const ncg_result* res) {
  return res ? res->result.text.c_str() : "";
}

size_t ncg_result_size(const ncg_result* res) {
  return res ? res->result.text.size() : 0;
}

int ncg_result_ok(const ncg_result* res) {
  return res && res->result.ok ? 1 : 0;
}

void ncg_result_destroy(ncg_result* res) { delete res; }

ncg_status ncg_projected_commutator(const ncg_config* cfg, double* top_re,
                                    double* top_im,
                                    double* max_offtop_residual, int* ok) {
  NCG_REQUIRE(cfg);
  return guarded([&] {
    const auto& c = cfg->cfg;
    const ncg::CommutatorReport r =
        ncg::projected_commutator_xy({c.N, c.J}, c.kept_levels(), c.units);
    if (top_re) *top_re = r.top_coefficient.real();
    if (top_im) *top_im = r.top_coefficient.imag();
    if (max_offtop_residual) *max_offtop_residual = r.max_offtop_residual;
    if (ok) *ok = r.ok ? 1 : 0;
    return NCG_OK;
  });
}

ncg_status ncg_matrix_build(const ncg_config* cfg, const char* name,
                            ncg_matrix** out) {
  NCG_REQUIRE(cfg);
  NCG_REQUIRE(name);
  NCG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new ncg_matrix{ncg::named_matrix(cfg->cfg, name)};
    return NCG_OK;
  });
}

size_t ncg_matrix_dim(const ncg_matrix* m) { return m ? m->m.dim() : 0; }

ncg_status ncg_matrix_entry(const ncg_matrix* m, size_t row, size_t col,
                            double* re, double* im) {
  NCG_REQUIRE(m);
  if (row >= m->m.dim() || col >= m->m.dim()) {
    return fail(NCG_ERR_OUT_OF_RANGE, "matrix entry index out of range");
  }
  const auto z = m->m(row, col);
  if (re) *re = z.real();
  if (im) *im = z.imag();
  return NCG_OK;
}

void ncg_matrix_destroy(ncg_matrix* m) { delete m; }

}  // extern "C"
