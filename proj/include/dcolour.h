/* C interface to the directed-colouring library. All functions return a
 * status code (aligned with the CLI exit codes); string results are
 * heap-allocated and released with dc_string_free. Handles are opaque and
 * freed with their matching _free function. */

#ifndef DCOLOUR_H
#define DCOLOUR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum dc_status {
    DC_OK = 0,
    DC_NEGATIVE = 1,    /* analysis gave a negative answer (e.g. not c_r) */
    DC_USAGE = 2,
    DC_BUDGET = 3,
    DC_IO = 4
};

typedef struct dc_view dc_view;

/* Rule syntax: density-zero | extremal:R | product:R1,R2,... | random:K:SEED */
int dc_view_generate(const char * rule_spec, uint64_t n, dc_view ** out);
int dc_view_load(const char * path, dc_view ** out);
int dc_view_save(const dc_view * view, const char * path);
void dc_view_free(dc_view * view);

/* depth_cap = 0 picks the subset DP (view must fit the exact budget). */
int dc_longest(const dc_view * view, int colour, int depth_cap, char ** out);
int dc_partition(const dc_view * view, int colour, int cap, char ** out);

/* Greedy monochromatic path over one red-level class. */
int dc_greedy(const dc_view * view, int colour, int target_level, int cap, char ** out);

/* set_spec: "level:I" (red-level class, levels capped at `cap`) or
 * "path-file:F" (a serialized path line). window = 0 means n/2. */
int dc_density(const dc_view * view, const char * set_spec, int cap, uint64_t window, char ** out);

/* DC_NEGATIVE when the view is not c_r within the exceptional budget. */
int dc_detect(const dc_view * view, int r, int max_exceptional, char ** out);

int dc_cover(const dc_view * view, int colour, int exact, char ** out);

int dc_conjecture(int r, uint64_t n, int trials, uint64_t seed, char ** out);

/* suite: density-zero | extremal | product | claims | all.
 * DC_NEGATIVE when a check fails; the log is returned either way. */
int dc_verify(const char * suite, uint64_t n, char ** out);

const char * dc_last_error(void);
void dc_string_free(char * s);

#ifdef __cplusplus
}
#endif

#endif
