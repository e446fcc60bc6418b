/* SPDX-License-Identifier: Apache-2.0
 *
 * satstat — C API for the Satake-statistics library.
 *
 * The library evaluates Schur polynomials indexed by Fourier-coefficient
 * tuples, expands their products into structure constants, samples Satake
 * parameters from the Sato-Tate and p-adic Plancherel measures, synthesizes
 * deterministic seeded forms, and runs the statistical experiments exposed by
 * the CLI.
 *
 * Conventions:
 *   - every function returns a satstat_status (0 on success);
 *   - results are written through out-parameters;
 *   - objects behind opaque handles are immutable once created and safe to
 *     share across threads;
 *   - strings returned through char** are heap-allocated; release them with
 *     satstat_string_free.
 */

#ifndef SATSTAT_H
#define SATSTAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SATSTAT_API __attribute__((visibility("default")))

typedef enum satstat_status {
    SATSTAT_OK = 0,
    SATSTAT_EINVAL = 1,     /* invalid argument / configuration */
    SATSTAT_EDEGENERATE = 2, /* determinant evaluator at coincident points */
    SATSTAT_ERANGE = 3,     /* out of range (prime bound, buffer size, ...) */
    SATSTAT_EINTERNAL = 4
} satstat_status;

typedef enum satstat_measure_kind {
    SATSTAT_MEASURE_SATO_TATE = 0,
    SATSTAT_MEASURE_PLANCHEREL = 1
} satstat_measure_kind;

typedef struct satstat_form satstat_form;
typedef struct satstat_expansion satstat_expansion;

SATSTAT_API const char* satstat_version(void);
SATSTAT_API const char* satstat_status_name(int status);
/* Detail message for the most recent failure on this thread. */
SATSTAT_API const char* satstat_last_error(void);
SATSTAT_API void satstat_string_free(char* s);

/* ---- Schur algebra ------------------------------------------------------ */

/* Evaluates S_kappa at e^{i angles}. kappa has n-1 entries; angles has n-1
 * entries (last angle recomputed from the product-one constraint) or n
 * entries (free point on the full torus). */
SATSTAT_API int satstat_schur_eval_tableaux(int n, const uint32_t* kappa, const double* angles,
                                            int n_angles, double* out_re, double* out_im);
/* Determinant-ratio route; fails with SATSTAT_EDEGENERATE near coincident
 * points. */
SATSTAT_API int satstat_schur_eval_determinant(int n, const uint32_t* kappa, const double* angles,
                                               int n_angles, double* out_re, double* out_im);
/* Tableau count of the shape of kappa (decimal string). */
SATSTAT_API int satstat_dimension(int n, const uint32_t* kappa, char** out_decimal);
SATSTAT_API int satstat_kappa_dual(int n, const uint32_t* kappa, uint32_t* out_kappa);

/* ---- Hecke structure constants ------------------------------------------ */

SATSTAT_API int satstat_hecke_expand(int n, const uint32_t* kappa, const uint32_t* kappa2,
                                     satstat_expansion** out);
SATSTAT_API size_t satstat_expansion_size(const satstat_expansion* e);
/* Entry i (ordered by weighted norm descending): xi tuple (n-1 entries) and
 * its coefficient as a decimal string. */
SATSTAT_API int satstat_expansion_entry(const satstat_expansion* e, size_t i, uint32_t* out_xi,
                                        char** out_coefficient);
SATSTAT_API int satstat_expansion_csv(const satstat_expansion* e, char** out_csv);
SATSTAT_API void satstat_expansion_free(satstat_expansion* e);

/* ---- synthetic forms ----------------------------------------------------- */

/* forced_zeros grammar: "none" | "all" | "p1,p2,..." | "<r>mod<m>" | "gt<N>" */
SATSTAT_API int satstat_form_create(int n, int measure_kind, uint64_t plancherel_p,
                                    uint64_t seed, uint64_t prime_bound,
                                    const char* forced_zeros, satstat_form** out);
SATSTAT_API int satstat_form_coefficient(const satstat_form* form, uint64_t m,
                                         const uint32_t* kappa, double* out_re, double* out_im);
SATSTAT_API int satstat_form_satake_angles(const satstat_form* form, uint64_t p,
                                           double* out_angles);
SATSTAT_API void satstat_form_free(satstat_form* form);

/* ---- sampling ------------------------------------------------------------ */

/* Writes count*n angles; sample i uses the stream (seed, sample-domain, i). */
SATSTAT_API int satstat_sample_angles(int n, int measure_kind, uint64_t plancherel_p,
                                      uint64_t seed, uint64_t count, double* out_angles);
/* Same draws as a CSV dump: seed,index,theta_1..theta_n. */
SATSTAT_API int satstat_sample_csv(int n, int measure_kind, uint64_t plancherel_p, uint64_t seed,
                                   uint64_t count, char** out_csv);

/* ---- experiments ---------------------------------------------------------- */

/* config_json: {"experiment": "signs"|"nonvanishing"|"small-values"|
 *               "orthonormality"|"vertical", "n": ..., "kappa": [...],
 *               "measure": {"kind": "...", "p": ...}, "seed": ...,
 *               "X"/"samples"/"deltas"/"bins"/"forced_zeros"/"checkpoints"/
 *               "chunk_samples"/"workers": ...}
 * out_report_json always receives the full report; out_csv (optional,
 * nullable) receives the experiment's CSV artifact when it has one.
 * out_pass receives 1 when every assertion inside the experiment held. */
SATSTAT_API int satstat_experiment_run(const char* config_json, char** out_report_json,
                                       char** out_csv, int* out_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SATSTAT_H */
