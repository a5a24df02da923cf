/* C interface of the sixeq two-phase solver.
 *
 * Every function returns a sixeq_status; on failure a message is available
 * from sixeq_last_error() (per thread, valid until the next call on that
 * thread). Strings returned through char** are owned by the caller and must
 * be released with sixeq_string_free. Handles are released with their
 * matching *_free function; passing NULL to a *_free function is a no-op.
 */
#ifndef SIXEQ_SIXEQ_H
#define SIXEQ_SIXEQ_H

#include <stddef.h>

#if defined(SIXEQ_BUILDING_LIBRARY)
#define SIXEQ_API __attribute__((visibility("default")))
#else
#define SIXEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sixeq_status {
  SIXEQ_OK = 0,
  SIXEQ_ERR_INVALID_ARGUMENT = 1,
  SIXEQ_ERR_CONFIG = 2,
  SIXEQ_ERR_POSITIVITY = 3,
  SIXEQ_ERR_RELAXATION = 4,
  SIXEQ_ERR_IO = 5,
  SIXEQ_ERR_INADMISSIBLE = 6,
  SIXEQ_ERR_DEGENERATE_FAN = 7,
  SIXEQ_ERR_VACUUM = 8,
  SIXEQ_ERR_NO_CONVERGENCE = 9,
  SIXEQ_ERR_INTERNAL = 10
} sixeq_status;

typedef struct sixeq_config sixeq_config;
typedef struct sixeq_result sixeq_result;

typedef struct sixeq_euler_state {
  double rho;
  double u;
  double p;
} sixeq_euler_state;

typedef struct sixeq_eos {
  double gamma;
  double pi_inf;
  double eta;
} sixeq_eos;

SIXEQ_API const char* sixeq_version(void);
SIXEQ_API const char* sixeq_last_error(void);
SIXEQ_API const char* sixeq_status_name(sixeq_status s);
/* Process exit code: 0 ok, 2 config, 3 positivity, 4 relaxation, 5 I/O, 1 other. */
SIXEQ_API int sixeq_exit_code(sixeq_status s);

/* Newline-separated list of builtin case names. */
SIXEQ_API sixeq_status sixeq_builtin_names(char** out);

/* ---- configuration ---- */
SIXEQ_API sixeq_status sixeq_config_load(const char* path, sixeq_config** out);
SIXEQ_API sixeq_status sixeq_config_parse(const char* text, sixeq_config** out);
SIXEQ_API sixeq_status sixeq_config_builtin(const char* case_name, sixeq_config** out);
/* key is "section.key", e.g. "scheme.flux"; the config is re-validated. On
 * error the config is left unchanged. */
SIXEQ_API sixeq_status sixeq_config_set(sixeq_config* cfg, const char* key, const char* value);
SIXEQ_API sixeq_status sixeq_config_serialize(const sixeq_config* cfg, char** out);
/* Scheme label such as "HLLC+BR2023" or "HLLC-WP". */
SIXEQ_API sixeq_status sixeq_config_scheme_label(const sixeq_config* cfg, char** out);
SIXEQ_API int sixeq_config_known_fragile(const sixeq_config* cfg);
SIXEQ_API void sixeq_config_free(sixeq_config* cfg);

/* ---- runs ---- */
/* Runs the configured case and writes snapshots, report.json and the optional
 * plot script to the configured output directory. A result handle is
 * returned whenever the run started, also when it stopped on a solver error;
 * the return value is then that error's status. With score_euler != 0 the
 * final 1D snapshot is scored against the exact Euler solution. */
SIXEQ_API sixeq_status sixeq_run(const sixeq_config* cfg, int score_euler, sixeq_result** out);
SIXEQ_API sixeq_status sixeq_result_status(const sixeq_result* r);
SIXEQ_API const char* sixeq_result_report_json(const sixeq_result* r);
SIXEQ_API const char* sixeq_result_report_path(const sixeq_result* r);
SIXEQ_API size_t sixeq_result_snapshot_count(const sixeq_result* r);
SIXEQ_API const char* sixeq_result_snapshot_path(const sixeq_result* r, size_t i);
SIXEQ_API const char* sixeq_result_plot_script(const sixeq_result* r);
SIXEQ_API void sixeq_result_free(sixeq_result* r);

/* Epoxy-spinel pressure sweep with the scheme and run settings of cfg. Each
 * left pressure runs in <output_dir>/pL_<value>/. When p_left is NULL the
 * published list is used. Returns a JSON summary; per-run failures are
 * reported inside it and do not fail the call. */
SIXEQ_API sixeq_status sixeq_sweep(const sixeq_config* cfg, const double* p_left, size_t n,
                                   char** summary_json);

/* Per-field L1 / Linf differences of two snapshot CSVs. windows holds
 * n_windows (lo, hi) pairs for plateau mean differences. */
SIXEQ_API sixeq_status sixeq_compare(const char* csv_a, const char* csv_b, const double* windows,
                                     size_t n_windows, char** report_json);

/* Exact Euler Riemann solution; samples at each xi = x/t. */
SIXEQ_API sixeq_status sixeq_oracle_euler(sixeq_euler_state left, sixeq_euler_state right,
                                          sixeq_eos eos_left, sixeq_eos eos_right,
                                          const double* xi, size_t n_xi, char** json_out);

SIXEQ_API sixeq_status sixeq_emit_plot_script(const char* const* labels,
                                              const char* const* csv_paths, size_t n_series,
                                              const char* const* fields, size_t n_fields,
                                              const char* script_path);

SIXEQ_API void sixeq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SIXEQ_SIXEQ_H */
