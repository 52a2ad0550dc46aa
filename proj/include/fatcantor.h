/*
 * C interface to the fat-Cantor IFS construction library.
 *
 * All numeric inputs and outputs are exact rational strings: "p/q" in
 * lowest terms, or a bare integer "n". Strings returned through char**
 * are heap-allocated; release them with fc_string_free. Handles are
 * opaque and released with fc_params_free. On any non-FC_OK status,
 * fc_last_error() describes the failure for the calling thread.
 */

#ifndef FATCANTOR_H
#define FATCANTOR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    FC_OK = 0,
    FC_ERROR_ARGUMENT = 1,   /* malformed input, precondition violated */
    FC_ERROR_DEPTH = 2,      /* sequence depth insufficient for the request */
    FC_ERROR_VALIDATION = 3, /* input rejected by a validation report */
    FC_ERROR_INTERNAL = 4
} fc_status;

typedef struct fc_params fc_params; /* a generated (w_k), (eps_k) sequence */

fc_status fc_params_create(int depth, fc_params** out);
void fc_params_free(fc_params* p);
int fc_params_depth(const fc_params* p);

/* w_k and eps_k as rational strings, 1 <= k <= depth. Either out pointer
 * may be NULL. */
fc_status fc_params_entry(const fc_params* p, int k, char** w_out, char** eps_out);

/* Full parameter table plus constraint validation report. */
fc_status fc_params_json(const fc_params* p, char** json_out);

/* The level family I_k: {level, members:[{lo,hi}], measure}. */
fc_status fc_intervals_json(const fc_params* p, int level, char** json_out);
fc_status fc_intervals_csv(const fc_params* p, int level, char** csv_out);

/* Gap components of [0,1] minus A_k. */
fc_status fc_gaps_json(const fc_params* p, int level, char** json_out);

/* Certified measure bracket rows for K = 2..level_max. */
fc_status fc_measure_json(const fc_params* p, int level_max, char** json_out);

/* Value of the limit map at x ("f" or "g" via map_name 'f'/'g') within
 * tolerance tol; both rational strings. */
fc_status fc_eval_json(const fc_params* p, const char* x, const char* tol, char map_name,
                       char** json_out);

/* Breakpoints of the level approximation f_level. */
fc_status fc_plf_json(const fc_params* p, int level, char** json_out);

/* CSV of x, f_{level-1}(x), f_level(x) on the merged breakpoint grid
 * plus sample_points uniform samples. */
fc_status fc_plot_csv(const fc_params* p, int level, int sample_points, char** csv_out);

/* Similitude IFS given as "a1,b1;a2,b2;...": validation report and the
 * per-level measure table for k = 1..depth. */
fc_status fc_similitude_json(const char* maps_spec, int depth, char** json_out);

/* Full verification campaign up to max_level. fail_count_out may be
 * NULL; it receives the number of failing claims. */
fc_status fc_verify_json(const fc_params* p, int max_level, int* fail_count_out, char** json_out);
fc_status fc_verify_junit(const fc_params* p, int max_level, int* fail_count_out, char** xml_out);

const char* fc_last_error(void);
void fc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FATCANTOR_H */
