/* rhdispatch — online multi-task assignment with receding-horizon
 * availability anticipation.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed here; functions return RHD_OK or an error code, with a
 * human-readable message available from rhd_last_error() (thread-local).
 */
#ifndef RHDISPATCH_H
#define RHDISPATCH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RHD_OK 0
#define RHD_ERR_INVALID_ARGUMENT 1
#define RHD_ERR_IO 2
#define RHD_ERR_PARSE 3
#define RHD_ERR_INTERNAL 4

typedef struct rhd_config rhd_config;
typedef struct rhd_scenario rhd_scenario;
typedef struct rhd_result rhd_result;

const char *rhd_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char *rhd_last_error(void);

/* ---- configuration ----------------------------------------------------- */

/* A config starts from the library defaults (synthetic benchmark, alpha
 * 0.75, horizon fixed 0, fractional capacity 1/3, wall-clock GA budget). */
rhd_config *rhd_config_new(void);
void rhd_config_free(rhd_config *config);

/* key = value file; later settings override earlier ones. */
int rhd_config_load_file(rhd_config *config, const char *path);

/* Single setting, same key space as the config file. */
int rhd_config_set(rhd_config *config, const char *key, const char *value);

/* Writes the current value of a key into buf (NUL-terminated). */
int rhd_config_get(const rhd_config *config, const char *key, char *buf,
                   size_t buflen);

/* ---- scenarios ---------------------------------------------------------- */

/* Synthetic benchmark from the config's generator settings. */
int rhd_scenario_synthetic(const rhd_config *config, rhd_scenario **out);

/* Scenario text file (see the README for the format). Window indices are
 * derived from the config's delta. */
int rhd_scenario_load(const rhd_config *config, const char *path,
                      rhd_scenario **out);

int rhd_scenario_save(const rhd_scenario *scenario, const char *path);

typedef struct rhd_taxi_stats {
  uint64_t rows_total;
  uint64_t retained;
  uint64_t dropped_malformed;
  uint64_t dropped_date;
  uint64_t dropped_hour;
  uint64_t dropped_bbox;
} rhd_taxi_stats;

/* One night of NYC 2013 trip data: rows on `date` (YYYY-MM-DD, NULL for any)
 * with pickup time in [hour_begin, hour_end) become pickup/dropoff requests;
 * `fleet_size` taxis are placed uniformly at random. `stats` may be NULL. */
int rhd_scenario_taxi_csv(const rhd_config *config, const char *path,
                          const char *date, double hour_begin, double hour_end,
                          int fleet_size, rhd_scenario **out,
                          rhd_taxi_stats *stats);

int rhd_scenario_agent_count(const rhd_scenario *scenario, size_t *out);
int rhd_scenario_request_count(const rhd_scenario *scenario, size_t *out);

void rhd_scenario_free(rhd_scenario *scenario);

/* ---- simulation --------------------------------------------------------- */

int rhd_run(const rhd_config *config, const rhd_scenario *scenario,
            rhd_result **out);

int rhd_result_total_distance_m(const rhd_result *result, double *out);
int rhd_result_total_idle_s(const rhd_result *result, double *out);
int rhd_result_tail_idle_s(const rhd_result *result, double *out);
int rhd_result_percent_assigned(const rhd_result *result, double *out);
int rhd_result_total_assigned(const rhd_result *result, size_t *out);
int rhd_result_window_count(const rhd_result *result, size_t *out);

/* Full results document (JSON). Free with rhd_string_free. */
char *rhd_result_json(const rhd_result *result);

int rhd_result_write_json(const rhd_result *result, const char *path);

/* Flat per-window CSV trace. */
int rhd_result_write_csv(const rhd_result *result, const char *path);

void rhd_result_free(rhd_result *result);
void rhd_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* RHDISPATCH_H */
