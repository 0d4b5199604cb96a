/* Copyright 2026 The qsimflow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqsimflow.
 *
 * Every function returns a qsf_status. On failure the message for the calling
 * thread is available from qsf_last_error() until the next failing call.
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function; passing NULL to *_free is a no-op.
 *
 * String outputs follow the snprintf convention: the text is written into
 * buf (NUL-terminated, truncated to cap - 1 bytes) and *needed receives the
 * full length excluding the terminator. buf may be NULL when cap is 0.
 */

#ifndef QSIMFLOW_H
#define QSIMFLOW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QSIMFLOW_BUILDING)
#define QSF_API __declspec(dllexport)
#else
#define QSF_API __declspec(dllimport)
#endif
#else
#define QSF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsf_status {
    QSF_OK = 0,
    QSF_ERR_INVALID_ARGUMENT = 1,
    QSF_ERR_ORACLE_TOO_LARGE = 2,
    QSF_ERR_NOT_HERMITIAN = 3,
    QSF_ERR_DIMENSION_MISMATCH = 4,
    QSF_ERR_ARITY_MISMATCH = 5,
    QSF_ERR_QUBIT_COUNT_MISMATCH = 6,
    QSF_ERR_UNBOUND = 7,
    QSF_ERR_TOO_MANY_QUBITS = 8,
    QSF_ERR_TOO_FEW_SPINS = 9,
    QSF_ERR_UNKNOWN_MODEL = 10,
    QSF_ERR_MISSING_PARAMETER = 11,
    QSF_ERR_BAD_PARAMETER_TYPE = 12,
    QSF_ERR_NOT_DIAGONAL = 13,
    QSF_ERR_EMPTY_COUNTS = 14,
    QSF_ERR_UNKNOWN_WORKFLOW = 15,
    QSF_ERR_INVALID_CONFIG = 16,
    QSF_ERR_PARAMETERIZED_MODEL_UNSUPPORTED = 17,
    QSF_ERR_LENGTH_MISMATCH = 18,
    QSF_ERR_EMPTY_SERIES = 19,
    QSF_ERR_MISSING_KEY = 20,
    QSF_ERR_PARSE = 21,
    QSF_ERR_UNKNOWN_KEY = 22,
    QSF_ERR_TYPE = 23,
    QSF_ERR_UNKNOWN_BACKEND = 24,
    QSF_ERR_NO_REFERENCE = 25,
    QSF_ERR_IO = 26,
    QSF_ERR_UNKNOWN_OPTIMIZER = 27,
    QSF_ERR_UNKNOWN_VALIDATOR = 28,
    QSF_ERR_NULL_POINTER = 100,
    QSF_ERR_INTERNAL = 101
} qsf_status;

typedef enum qsf_eval_mode {
    QSF_EVAL_ANALYTIC = 0,
    QSF_EVAL_SHOTS = 1
} qsf_eval_mode;

typedef enum qsf_metric {
    QSF_METRIC_MAX_ABS = 0,
    QSF_METRIC_RMSE = 1,
    QSF_METRIC_FINAL_ABS = 2
} qsf_metric;

typedef struct qsf_pauli_sum qsf_pauli_sum;
typedef struct qsf_circuit qsf_circuit;
typedef struct qsf_model qsf_model;
typedef struct qsf_config qsf_config;
typedef struct qsf_workflow qsf_workflow;
typedef struct qsf_result qsf_result;
typedef struct qsf_runspec qsf_runspec;
typedef struct qsf_run qsf_run;

typedef struct qsf_evaluator_settings {
    qsf_eval_mode mode;
    uint64_t shots;
    uint64_t seed;
} qsf_evaluator_settings;

typedef struct qsf_validation {
    double distance;
    double threshold;
    int accepted;
} qsf_validation;

/* -- diagnostics ---------------------------------------------------------- */

QSF_API const char *qsf_version(void);
QSF_API const char *qsf_status_string(qsf_status status);
/* Message of the last failure on this thread; "" if none. */
QSF_API const char *qsf_last_error(void);

/* -- Pauli sums ----------------------------------------------------------- */

/* Text form: "0.5 * X0 X1 - 1.5 * Z2 + (0,1) * Y0"; blank text is 1.0 * I. */
QSF_API qsf_status qsf_pauli_sum_parse(const char *text, qsf_pauli_sum **out);
QSF_API void qsf_pauli_sum_free(qsf_pauli_sum *s);
QSF_API qsf_status qsf_pauli_sum_to_string(const qsf_pauli_sum *s, char *buf,
                                           size_t cap, size_t *needed);
QSF_API qsf_status qsf_pauli_sum_num_terms(const qsf_pauli_sum *s, size_t *out);
QSF_API qsf_status qsf_pauli_sum_num_qubits(const qsf_pauli_sum *s, size_t *out);
QSF_API qsf_status qsf_pauli_sum_multiply(const qsf_pauli_sum *a,
                                          const qsf_pauli_sum *b,
                                          qsf_pauli_sum **out);
QSF_API qsf_status qsf_pauli_sum_add(const qsf_pauli_sum *a,
                                     const qsf_pauli_sum *b, qsf_pauli_sum **out);
/* Exact lowest eigenvalue on n_qubits qubits (dense oracle, n <= 12). */
QSF_API qsf_status qsf_pauli_sum_ground_energy(const qsf_pauli_sum *s,
                                               size_t n_qubits, double *out);

/* -- circuits ------------------------------------------------------------- */

QSF_API qsf_status qsf_circuit_parse(const char *text, qsf_circuit **out);
QSF_API void qsf_circuit_free(qsf_circuit *c);
QSF_API qsf_status qsf_circuit_dump(const qsf_circuit *c, char *buf, size_t cap,
                                    size_t *needed);
QSF_API qsf_status qsf_circuit_num_qubits(const qsf_circuit *c, size_t *out);
QSF_API qsf_status qsf_circuit_num_params(const qsf_circuit *c, size_t *out);
QSF_API qsf_status qsf_circuit_num_gates(const qsf_circuit *c, size_t *out);
/* Expectation of obs after running c with the given parameter values. */
QSF_API qsf_status qsf_circuit_expectation(const qsf_circuit *c,
                                           const double *params, size_t n_params,
                                           const qsf_pauli_sum *obs,
                                           const qsf_evaluator_settings *eval,
                                           double *out);

/* -- models --------------------------------------------------------------- */

/* observable: "staggered_magnetization" or "energy"; NULL selects the
 * former. */
QSF_API qsf_status qsf_model_heisenberg(double jx, double jy, double jz,
                                        double h_ext, size_t num_spins,
                                        const int64_t *initial_spins,
                                        size_t n_initial_spins,
                                        const char *observable, qsf_model **out);
QSF_API qsf_status qsf_model_custom(const qsf_circuit *ansatz,
                                    const qsf_pauli_sum *observable,
                                    size_t n_params, qsf_model **out);
QSF_API void qsf_model_free(qsf_model *m);
QSF_API qsf_status qsf_model_num_qubits(const qsf_model *m, size_t *out);
QSF_API qsf_status qsf_model_num_params(const qsf_model *m, size_t *out);

/* -- workflow configuration ----------------------------------------------- */

QSF_API qsf_status qsf_config_create(qsf_config **out);
QSF_API void qsf_config_free(qsf_config *c);
QSF_API qsf_status qsf_config_set_real(qsf_config *c, const char *key, double v);
QSF_API qsf_status qsf_config_set_int(qsf_config *c, const char *key, int64_t v);
QSF_API qsf_status qsf_config_set_string(qsf_config *c, const char *key,
                                         const char *v);
QSF_API qsf_status qsf_config_set_real_list(qsf_config *c, const char *key,
                                            const double *v, size_t n);

/* -- workflows ------------------------------------------------------------ */

/* name: "td-evolution", "vqe", "qaoa" or any registered name. config and
 * eval may be NULL (empty config, analytic evaluation); backend NULL selects
 * "statevector". */
QSF_API qsf_status qsf_workflow_create(const char *name, const qsf_config *config,
                                       const char *backend,
                                       const qsf_evaluator_settings *eval,
                                       qsf_workflow **out);
QSF_API void qsf_workflow_free(qsf_workflow *w);
QSF_API qsf_status qsf_workflow_execute(qsf_workflow *w, const qsf_model *m,
                                        qsf_result **out);
/* Execute and compare the primary result against the exact oracle. */
QSF_API qsf_status qsf_workflow_validate_exact(qsf_workflow *w,
                                               const qsf_model *m,
                                               qsf_metric metric,
                                               double threshold,
                                               qsf_validation *out);

/* -- results -------------------------------------------------------------- */

QSF_API void qsf_result_free(qsf_result *r);
QSF_API int qsf_result_has(const qsf_result *r, const char *key);
QSF_API qsf_status qsf_result_get_real(const qsf_result *r, const char *key,
                                       double *out);
QSF_API qsf_status qsf_result_get_int(const qsf_result *r, const char *key,
                                      int64_t *out);
QSF_API qsf_status qsf_result_get_bool(const qsf_result *r, const char *key,
                                       int *out);
/* Copies up to cap values into buf; *len receives the series length. */
QSF_API qsf_status qsf_result_get_series(const qsf_result *r, const char *key,
                                         double *buf, size_t cap, size_t *len);
QSF_API qsf_status qsf_result_to_csv(const qsf_result *r, char *buf, size_t cap,
                                     size_t *needed);

/* -- configuration-driven runs -------------------------------------------- */

QSF_API qsf_status qsf_runspec_load(const char *path, qsf_runspec **out);
/* base_dir resolves relative paths inside the config; may be NULL. */
QSF_API qsf_status qsf_runspec_parse(const char *json, const char *base_dir,
                                     qsf_runspec **out);
QSF_API void qsf_runspec_free(qsf_runspec *s);
QSF_API qsf_status qsf_runspec_set_seed(qsf_runspec *s, uint64_t seed);
/* shots > 0 switches to shot sampling; 0 switches to analytic evaluation. */
QSF_API qsf_status qsf_runspec_set_shots(qsf_runspec *s, uint64_t shots);
QSF_API qsf_status qsf_runspec_set_backend(qsf_runspec *s, const char *name);
/* "" disables file output. */
QSF_API qsf_status qsf_runspec_set_output(qsf_runspec *s, const char *path);
/* CSV destination; "" when the run writes no file. */
QSF_API qsf_status qsf_runspec_output(const qsf_runspec *s, char *buf, size_t cap,
                                      size_t *needed);
QSF_API qsf_status qsf_runspec_run(const qsf_runspec *s, qsf_run **out);

QSF_API void qsf_run_free(qsf_run *r);
QSF_API qsf_status qsf_run_csv(const qsf_run *r, char *buf, size_t cap,
                               size_t *needed);
/* *validated is 0 when the config had no validation block. */
QSF_API qsf_status qsf_run_validation(const qsf_run *r, int *validated,
                                      qsf_validation *out);
/* 0 on success, 2 when validation rejected the result. */
QSF_API int qsf_run_exit_code(const qsf_run *r);
QSF_API qsf_status qsf_run_result(const qsf_run *r, qsf_result **out);

#ifdef __cplusplus
}
#endif

#endif /* QSIMFLOW_H */
