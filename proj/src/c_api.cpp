// Copyright 2026 The qsimflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsimflow/qsimflow.h"

#include "qsimflow/circuit.hpp"
#include "qsimflow/dense.hpp"
#include "qsimflow/evaluator.hpp"
#include "qsimflow/model.hpp"
#include "qsimflow/pauli.hpp"
#include "qsimflow/runner.hpp"
#include "qsimflow/workflow.hpp"

#include <cstring>
#include <new>
#include <string>

struct qsf_pauli_sum {
    qsimflow::PauliSum value;
};
struct qsf_circuit {
    qsimflow::Circuit value;
};
struct qsf_model {
    qsimflow::QuantumSimulationModel value;
};
struct qsf_config {
    qsimflow::WorkflowConfig value;
};
struct qsf_workflow {
    std::unique_ptr<qsimflow::QuantumSimulationWorkflow> value;
};
struct qsf_result {
    qsimflow::WorkflowResult value;
};
struct qsf_runspec {
    qsimflow::RunSpec value;
};
struct qsf_run {
    qsimflow::RunOutcome value;
};

namespace {

thread_local std::string g_last_error;

qsf_status set_error(qsf_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn> qsf_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        return QSF_OK;
    } catch (const qsimflow::Error &e) {
        return set_error(static_cast<qsf_status>(static_cast<int>(e.code())),
                         e.what());
    } catch (const std::bad_alloc &) {
        return set_error(QSF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return set_error(QSF_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(QSF_ERR_INTERNAL, "unknown failure");
    }
}

#define QSF_REQUIRE(ptr)                                                       \
    do {                                                                       \
        if ((ptr) == nullptr) {                                                \
            return set_error(QSF_ERR_NULL_POINTER, #ptr " is NULL");           \
        }                                                                      \
    } while (0)

qsf_status copy_out(const std::string &s, char *buf, size_t cap, size_t *needed) {
    if (needed != nullptr) {
        *needed = s.size();
    }
    if (cap == 0) {
        return QSF_OK;
    }
    if (buf == nullptr) {
        return set_error(QSF_ERR_NULL_POINTER, "buf is NULL");
    }
    const size_t n = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
    return QSF_OK;
}

qsimflow::EvaluatorConfig to_eval(const qsf_evaluator_settings *eval) {
    if (eval == nullptr) {
        return qsimflow::EvaluatorConfig::exact();
    }
    qsimflow::EvaluatorConfig cfg;
    cfg.mode = eval->mode == QSF_EVAL_SHOTS ? qsimflow::EvaluatorMode::Shots
                                            : qsimflow::EvaluatorMode::Analytic;
    cfg.shots = eval->shots;
    cfg.seed = eval->seed;
    return cfg;
}

qsimflow::Metric to_metric(qsf_metric m) {
    switch (m) {
    case QSF_METRIC_MAX_ABS:
        return qsimflow::Metric::MaxAbs;
    case QSF_METRIC_RMSE:
        return qsimflow::Metric::Rmse;
    case QSF_METRIC_FINAL_ABS:
        return qsimflow::Metric::FinalAbs;
    }
    qsimflow::fail(qsimflow::ErrorCode::InvalidArgument, "unknown metric");
}

void fill(qsf_validation *out, const qsimflow::ValidationDecision &d) {
    out->distance = d.distance;
    out->threshold = d.threshold;
    out->accepted = d.accepted ? 1 : 0;
}

} // namespace

extern "C" {

const char *qsf_version(void) { return "0.1.0"; }

const char *qsf_status_string(qsf_status status) {
    switch (status) {
    case QSF_OK:
        return "ok";
    case QSF_ERR_NULL_POINTER:
        return "null pointer";
    case QSF_ERR_INTERNAL:
        return "internal error";
    default:
        break;
    }
    const int v = static_cast<int>(status);
    if (v >= 1 && v <= 28) {
        // error.cpp owns the names; they are static string literals
        return qsimflow::to_string(static_cast<qsimflow::ErrorCode>(v)).data();
    }
    return "unknown status";
}

const char *qsf_last_error(void) { return g_last_error.c_str(); }

// -- Pauli sums ---------------------------------------------------------------

qsf_status qsf_pauli_sum_parse(const char *text, qsf_pauli_sum **out) {
    QSF_REQUIRE(text);
    QSF_REQUIRE(out);
    return guarded([&] {
        *out = new qsf_pauli_sum{qsimflow::parse_pauli_sum(text)};
    });
}

void qsf_pauli_sum_free(qsf_pauli_sum *s) { delete s; }

qsf_status qsf_pauli_sum_to_string(const qsf_pauli_sum *s, char *buf, size_t cap,
                                   size_t *needed) {
    QSF_REQUIRE(s);
    qsf_status st = QSF_OK;
    const qsf_status g =
        guarded([&] { st = copy_out(s->value.to_string(), buf, cap, needed); });
    return g != QSF_OK ? g : st;
}

qsf_status qsf_pauli_sum_num_terms(const qsf_pauli_sum *s, size_t *out) {
    QSF_REQUIRE(s);
    QSF_REQUIRE(out);
    *out = s->value.terms().size();
    return QSF_OK;
}

qsf_status qsf_pauli_sum_num_qubits(const qsf_pauli_sum *s, size_t *out) {
    QSF_REQUIRE(s);
    QSF_REQUIRE(out);
    *out = s->value.min_qubits();
    return QSF_OK;
}

qsf_status qsf_pauli_sum_multiply(const qsf_pauli_sum *a, const qsf_pauli_sum *b,
                                  qsf_pauli_sum **out) {
    QSF_REQUIRE(a);
    QSF_REQUIRE(b);
    QSF_REQUIRE(out);
    return guarded([&] { *out = new qsf_pauli_sum{a->value * b->value}; });
}

qsf_status qsf_pauli_sum_add(const qsf_pauli_sum *a, const qsf_pauli_sum *b,
                             qsf_pauli_sum **out) {
    QSF_REQUIRE(a);
    QSF_REQUIRE(b);
    QSF_REQUIRE(out);
    return guarded([&] {
        qsimflow::PauliSum sum = a->value;
        sum += b->value;
        *out = new qsf_pauli_sum{qsimflow::simplify(sum)};
    });
}

qsf_status qsf_pauli_sum_ground_energy(const qsf_pauli_sum *s, size_t n_qubits,
                                       double *out) {
    QSF_REQUIRE(s);
    QSF_REQUIRE(out);
    return guarded(
        [&] { *out = qsimflow::exact_ground_energy(s->value, n_qubits); });
}

// -- circuits -----------------------------------------------------------------

qsf_status qsf_circuit_parse(const char *text, qsf_circuit **out) {
    QSF_REQUIRE(text);
    QSF_REQUIRE(out);
    return guarded([&] { *out = new qsf_circuit{qsimflow::parse_circuit(text)}; });
}

void qsf_circuit_free(qsf_circuit *c) { delete c; }

qsf_status qsf_circuit_dump(const qsf_circuit *c, char *buf, size_t cap,
                            size_t *needed) {
    QSF_REQUIRE(c);
    qsf_status st = QSF_OK;
    const qsf_status g = guarded(
        [&] { st = copy_out(qsimflow::dump_circuit(c->value), buf, cap, needed); });
    return g != QSF_OK ? g : st;
}

qsf_status qsf_circuit_num_qubits(const qsf_circuit *c, size_t *out) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(out);
    *out = c->value.n_qubits();
    return QSF_OK;
}

qsf_status qsf_circuit_num_params(const qsf_circuit *c, size_t *out) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(out);
    *out = c->value.n_params();
    return QSF_OK;
}

qsf_status qsf_circuit_num_gates(const qsf_circuit *c, size_t *out) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(out);
    *out = c->value.gates().size();
    return QSF_OK;
}

qsf_status qsf_circuit_expectation(const qsf_circuit *c, const double *params,
                                   size_t n_params, const qsf_pauli_sum *obs,
                                   const qsf_evaluator_settings *eval,
                                   double *out) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(obs);
    QSF_REQUIRE(out);
    if (n_params > 0) {
        QSF_REQUIRE(params);
    }
    return guarded([&] {
        const qsimflow::Circuit bound = qsimflow::bind(
            c->value, std::span<const double>(params, n_params));
        const qsimflow::StatevectorBackend backend;
        *out = qsimflow::evaluate(obs->value, bound, backend, to_eval(eval));
    });
}

// -- models -------------------------------------------------------------------

qsf_status qsf_model_heisenberg(double jx, double jy, double jz, double h_ext,
                                size_t num_spins, const int64_t *initial_spins,
                                size_t n_initial_spins, const char *observable,
                                qsf_model **out) {
    QSF_REQUIRE(out);
    if (n_initial_spins > 0) {
        QSF_REQUIRE(initial_spins);
    }
    return guarded([&] {
        qsimflow::HeisenbergModelBuilder b;
        b.Jx(jx).Jy(jy).Jz(jz).h_ext(h_ext).num_spins(num_spins);
        b.initial_spins(std::vector<std::int64_t>(initial_spins,
                                                  initial_spins + n_initial_spins));
        if (observable != nullptr) {
            b.observable(observable);
        }
        *out = new qsf_model{b.build()};
    });
}

qsf_status qsf_model_custom(const qsf_circuit *ansatz,
                            const qsf_pauli_sum *observable, size_t n_params,
                            qsf_model **out) {
    QSF_REQUIRE(ansatz);
    QSF_REQUIRE(observable);
    QSF_REQUIRE(out);
    return guarded([&] {
        *out = new qsf_model{qsimflow::create_custom_model(
            ansatz->value, observable->value, n_params)};
    });
}

void qsf_model_free(qsf_model *m) { delete m; }

qsf_status qsf_model_num_qubits(const qsf_model *m, size_t *out) {
    QSF_REQUIRE(m);
    QSF_REQUIRE(out);
    *out = m->value.n_qubits();
    return QSF_OK;
}

qsf_status qsf_model_num_params(const qsf_model *m, size_t *out) {
    QSF_REQUIRE(m);
    QSF_REQUIRE(out);
    *out = m->value.n_params();
    return QSF_OK;
}

// -- configuration ------------------------------------------------------------

qsf_status qsf_config_create(qsf_config **out) {
    QSF_REQUIRE(out);
    return guarded([&] { *out = new qsf_config{}; });
}

void qsf_config_free(qsf_config *c) { delete c; }

qsf_status qsf_config_set_real(qsf_config *c, const char *key, double v) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(key);
    return guarded([&] { c->value.set(key, v); });
}

qsf_status qsf_config_set_int(qsf_config *c, const char *key, int64_t v) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(key);
    return guarded([&] { c->value.set(key, static_cast<std::int64_t>(v)); });
}

qsf_status qsf_config_set_string(qsf_config *c, const char *key, const char *v) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(key);
    QSF_REQUIRE(v);
    return guarded([&] { c->value.set(key, std::string(v)); });
}

qsf_status qsf_config_set_real_list(qsf_config *c, const char *key,
                                    const double *v, size_t n) {
    QSF_REQUIRE(c);
    QSF_REQUIRE(key);
    if (n > 0) {
        QSF_REQUIRE(v);
    }
    return guarded([&] { c->value.set(key, std::vector<double>(v, v + n)); });
}

// -- workflows ----------------------------------------------------------------

qsf_status qsf_workflow_create(const char *name, const qsf_config *config,
                               const char *backend,
                               const qsf_evaluator_settings *eval,
                               qsf_workflow **out) {
    QSF_REQUIRE(name);
    QSF_REQUIRE(out);
    return guarded([&] {
        qsimflow::ExecutionContext ctx;
        ctx.backend = qsimflow::BackendRegistry::instance().create(
            backend != nullptr ? backend : "statevector");
        ctx.evaluator = to_eval(eval);
        const qsimflow::WorkflowConfig cfg =
            config != nullptr ? config->value : qsimflow::WorkflowConfig{};
        *out = new qsf_workflow{qsimflow::get_workflow(name, cfg, ctx)};
    });
}

void qsf_workflow_free(qsf_workflow *w) { delete w; }

qsf_status qsf_workflow_execute(qsf_workflow *w, const qsf_model *m,
                                qsf_result **out) {
    QSF_REQUIRE(w);
    QSF_REQUIRE(m);
    QSF_REQUIRE(out);
    return guarded([&] { *out = new qsf_result{w->value->execute(m->value)}; });
}

qsf_status qsf_workflow_validate_exact(qsf_workflow *w, const qsf_model *m,
                                       qsf_metric metric, double threshold,
                                       qsf_validation *out) {
    QSF_REQUIRE(w);
    QSF_REQUIRE(m);
    QSF_REQUIRE(out);
    return guarded([&] {
        qsimflow::ValidationCriteria c;
        c.metric = to_metric(metric);
        c.threshold = threshold;
        fill(out, qsimflow::validate(*w->value, m->value, c));
    });
}

// -- results ------------------------------------------------------------------

void qsf_result_free(qsf_result *r) { delete r; }

int qsf_result_has(const qsf_result *r, const char *key) {
    return r != nullptr && key != nullptr && r->value.contains(key) ? 1 : 0;
}

qsf_status qsf_result_get_real(const qsf_result *r, const char *key, double *out) {
    QSF_REQUIRE(r);
    QSF_REQUIRE(key);
    QSF_REQUIRE(out);
    return guarded([&] { *out = r->value.get<double>(key); });
}

qsf_status qsf_result_get_int(const qsf_result *r, const char *key, int64_t *out) {
    QSF_REQUIRE(r);
    QSF_REQUIRE(key);
    QSF_REQUIRE(out);
    return guarded([&] { *out = r->value.get<std::int64_t>(key); });
}

qsf_status qsf_result_get_bool(const qsf_result *r, const char *key, int *out) {
    QSF_REQUIRE(r);
    QSF_REQUIRE(key);
    QSF_REQUIRE(out);
    return guarded([&] { *out = r->value.get<bool>(key) ? 1 : 0; });
}

qsf_status qsf_result_get_series(const qsf_result *r, const char *key,
                                 double *buf, size_t cap, size_t *len) {
    QSF_REQUIRE(r);
    QSF_REQUIRE(key);
    if (cap > 0) {
        QSF_REQUIRE(buf);
    }
    return guarded([&] {
        const auto &v = r->value.get<std::vector<double>>(key);
        if (len != nullptr) {
            *len = v.size();
        }
        std::copy_n(v.begin(), std::min(cap, v.size()), buf);
    });
}

qsf_status qsf_result_to_csv(const qsf_result *r, char *buf, size_t cap,
                             size_t *needed) {
    QSF_REQUIRE(r);
    qsf_status st = QSF_OK;
    const qsf_status g = guarded(
        [&] { st = copy_out(qsimflow::format_csv(r->value), buf, cap, needed); });
    return g != QSF_OK ? g : st;
}

// -- runs ---------------------------------------------------------------------

qsf_status qsf_runspec_load(const char *path, qsf_runspec **out) {
    QSF_REQUIRE(path);
    QSF_REQUIRE(out);
    return guarded([&] { *out = new qsf_runspec{qsimflow::load_run_spec(path)}; });
}

qsf_status qsf_runspec_parse(const char *json, const char *base_dir,
                             qsf_runspec **out) {
    QSF_REQUIRE(json);
    QSF_REQUIRE(out);
    return guarded([&] {
        *out = new qsf_runspec{qsimflow::parse_run_spec(
            json, base_dir != nullptr ? std::filesystem::path(base_dir)
                                      : std::filesystem::path{})};
    });
}

void qsf_runspec_free(qsf_runspec *s) { delete s; }

qsf_status qsf_runspec_set_seed(qsf_runspec *s, uint64_t seed) {
    QSF_REQUIRE(s);
    s->value.evaluator.seed = seed;
    return QSF_OK;
}

qsf_status qsf_runspec_set_shots(qsf_runspec *s, uint64_t shots) {
    QSF_REQUIRE(s);
    s->value.evaluator.shots = shots;
    s->value.evaluator.mode =
        shots > 0 ? qsimflow::EvaluatorMode::Shots : qsimflow::EvaluatorMode::Analytic;
    return QSF_OK;
}

qsf_status qsf_runspec_set_backend(qsf_runspec *s, const char *name) {
    QSF_REQUIRE(s);
    QSF_REQUIRE(name);
    return guarded([&] { s->value.backend = name; });
}

qsf_status qsf_runspec_set_output(qsf_runspec *s, const char *path) {
    QSF_REQUIRE(s);
    QSF_REQUIRE(path);
    return guarded([&] { s->value.output = path; });
}

qsf_status qsf_runspec_output(const qsf_runspec *s, char *buf, size_t cap,
                              size_t *needed) {
    QSF_REQUIRE(s);
    return copy_out(s->value.output, buf, cap, needed);
}

qsf_status qsf_runspec_run(const qsf_runspec *s, qsf_run **out) {
    QSF_REQUIRE(s);
    QSF_REQUIRE(out);
    return guarded([&] { *out = new qsf_run{qsimflow::execute_run(s->value)}; });
}

void qsf_run_free(qsf_run *r) { delete r; }

qsf_status qsf_run_csv(const qsf_run *r, char *buf, size_t cap, size_t *needed) {
    QSF_REQUIRE(r);
    return copy_out(r->value.csv, buf, cap, needed);
}

qsf_status qsf_run_validation(const qsf_run *r, int *validated,
                              qsf_validation *out) {
    QSF_REQUIRE(r);
    QSF_REQUIRE(validated);
    *validated = r->value.decision ? 1 : 0;
    if (r->value.decision && out != nullptr) {
        fill(out, *r->value.decision);
    }
    return QSF_OK;
}

int qsf_run_exit_code(const qsf_run *r) {
    return r == nullptr ? 1 : r->value.exit_code();
}

qsf_status qsf_run_result(const qsf_run *r, qsf_result **out) {
    QSF_REQUIRE(r);
    QSF_REQUIRE(out);
    return guarded([&] { *out = new qsf_result{r->value.result}; });
}

} // extern "C"
