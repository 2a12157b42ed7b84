/* ncg.h
 *
 * C interface to the truncated Landau-level engine. All objects are opaque
 * handles owned by the caller and released with the matching _destroy
 * function. Every fallible call returns an ncg_status; on failure a
 * description is available from ncg_last_error() on the same thread.
 */
#ifndef NCG_NCG_H
#define NCG_NCG_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(NCG_BUILDING_LIBRARY)
#    define NCG_API __declspec(dllexport)
#  else
#    define NCG_API __declspec(dllimport)
#  endif
#else
#  define NCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncg_status {
  NCG_OK = 0,
  /* Bad argument or flag combination; ncg_last_error() names the flag. */
  NCG_ERR_INVALID_ARGUMENT = 1,
  NCG_ERR_NULL_HANDLE = 2,
  /* The command ran and produced a report, but a check in it failed. */
  NCG_ERR_CHECK_FAILED = 3,
  NCG_ERR_IO = 4,
  NCG_ERR_INTERNAL = 5,
  NCG_ERR_OUT_OF_RANGE = 6
} ncg_status;

typedef struct ncg_config ncg_config;
typedef struct ncg_result ncg_result;
typedef struct ncg_matrix ncg_matrix;

NCG_API const char* ncg_version(void);

/* Message for the last failed call on this thread; "" if none. */
NCG_API const char* ncg_last_error(void);

/* Defaults: command "commutator", N=4, J=8, keep=N, grid_M=128,
 * k_range=8, refinements=2, natural units, table output. */
NCG_API ncg_status ncg_config_create(ncg_config** out);
NCG_API void ncg_config_destroy(ncg_config* cfg);

/* commutator | sweep | spectrum | landau-gauge | crosscheck | dump-matrix */
NCG_API ncg_status ncg_config_set_command(ncg_config* cfg, const char* name);
NCG_API ncg_status ncg_config_set_cutoffs(ncg_config* cfg, int N, int J);
/* keep < 0 restores the default keep = N. */
NCG_API ncg_status ncg_config_set_keep(ncg_config* cfg, int keep);
NCG_API ncg_status ncg_config_set_grid(ncg_config* cfg, size_t points,
                                       double k_range);
NCG_API ncg_status ncg_config_set_refinements(ncg_config* cfg, int count);
NCG_API ncg_status ncg_config_set_units(ncg_config* cfg, double e, double B,
                                        double c, double hbar, double m);
/* json | csv | table */
NCG_API ncg_status ncg_config_set_output(ncg_config* cfg, const char* format);
NCG_API ncg_status ncg_config_set_matrix(ncg_config* cfg, const char* name);
/* NULL clears the path and the report is only returned. */
NCG_API ncg_status ncg_config_set_out_path(ncg_config* cfg, const char* path);
NCG_API ncg_status ncg_config_set_parallel(ncg_config* cfg, int enabled);

/* Runs the configured command. On NCG_OK and NCG_ERR_CHECK_FAILED *out
 * holds the serialized report; on other statuses *out is NULL. */
NCG_API ncg_status ncg_run(const ncg_config* cfg, ncg_result** out);
NCG_API const char* ncg_result_text(const ncg_result* res);
NCG_API size_t ncg_result_size(const ncg_result* res);
NCG_API int ncg_result_ok(const ncg_result* res);
NCG_API void ncg_result_destroy(ncg_result* res);

/* Projected [x, y] for the configured cutoffs, keep and units. */
NCG_API ncg_status ncg_projected_commutator(const ncg_config* cfg,
                                            double* top_re, double* top_im,
                                            double* max_offtop_residual,
                                            int* ok);

/* Operator by name (see dump-matrix) built from the configured cutoffs. */
NCG_API ncg_status ncg_matrix_build(const ncg_config* cfg, const char* name,
                                    ncg_matrix** out);
NCG_API size_t ncg_matrix_dim(const ncg_matrix* m);
NCG_API ncg_status ncg_matrix_entry(const ncg_matrix* m, size_t row,
                                    size_t col, double* re, double* im);
NCG_API void ncg_matrix_destroy(ncg_matrix* m);

#ifdef __cplusplus
}
#endif

#endif /* NCG_NCG_H */
