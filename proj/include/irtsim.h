#ifndef IRTSIM_H
#define IRTSIM_H

/* C interface to the IRT monetary-policy simulator.
 *
 * All functions returning irt_status follow the same contract: IRT_OK on
 * success, otherwise an error class, with a human-readable message available
 * from irt_last_error() until the next failing call on the same thread.
 * Handles are created by the library and must be released with the matching
 * *_free function; passing NULL to a *_free function is a no-op.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum irt_status {
    IRT_OK = 0,
    IRT_ERROR_CONFIG = 1,   /* invalid configuration or input document */
    IRT_ERROR_RUNTIME = 2,  /* model or I/O failure during execution */
    IRT_ERROR_ARGUMENT = 3  /* NULL handle, unknown name, bad index */
} irt_status;

typedef struct irt_scenario irt_scenario;
typedef struct irt_run irt_run;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
const char* irt_version(void);

/* Message of the most recent failure on the calling thread ("" if none). */
const char* irt_last_error(void);

/* Parses a YAML scenario document into a scenario handle. */
irt_status irt_scenario_parse(const char* text, irt_scenario** out);
irt_status irt_scenario_parse_file(const char* path, irt_scenario** out);

/* Canonical YAML rendering of the resolved scenario; release with
 * irt_string_free. */
irt_status irt_scenario_serialize(const irt_scenario* scenario, char** out);
void irt_scenario_free(irt_scenario* scenario);

/* Executes the scenario. When out_dir is non-NULL the run's CSV artifacts and
 * manifest are written there (plus chart.svg when write_svg is nonzero);
 * pass NULL to run in memory only. */
irt_status irt_run_scenario(const irt_scenario* scenario, const char* out_dir,
                            int write_svg, irt_run** out);

/* Borrows one per-period series from a run. Blocks and columns:
 *   "sticky":   real_price, nominal_price, inflation, output_gap,
 *               real_output, policy_rate, premium, speed_q, money_supply
 *   "nk":       pi, x, R                        (length 1)
 *   "soe":      exchange_rate, price_level, inflation, expected_depreciation
 *   "forecast": money, demand, price, inflation (inflation one shorter)
 * The pointer stays valid until irt_run_free. */
irt_status irt_run_series(const irt_run* run, const char* block, const char* column,
                          const double** data, size_t* len);

size_t irt_run_warning_count(const irt_run* run);
/* Warning text by index, or NULL if out of range. Valid until irt_run_free. */
const char* irt_run_warning(const irt_run* run, size_t index);
void irt_run_free(irt_run* run);

/* Reads two run directories and writes compare.csv / compare_summary.csv. */
irt_status irt_compare_dirs(const char* baseline_dir, const char* alt_dir,
                            const char* out_dir);

/* Runs a built-in preset ("figure1".."figure4") into out_dir. */
irt_status irt_preset_execute(const char* preset, const char* out_dir);

/* Releases a string returned through a char** out parameter. */
void irt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* IRTSIM_H */
