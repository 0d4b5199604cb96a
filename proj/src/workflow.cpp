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

#include "qsimflow/workflow.hpp"
#include "qsimflow/ansatz.hpp"
#include "qsimflow/dense.hpp"
#include "qsimflow/error.hpp"
#include "qsimflow/log.hpp"
#include "qsimflow/optimizer.hpp"

#include <cmath>

namespace qsimflow {

namespace {

std::size_t non_negative(const WorkflowConfig &cfg, std::string_view key,
                         std::int64_t fallback) {
    const std::int64_t v = cfg.get_int_or(key, fallback);
    if (v < 0) {
        fail(ErrorCode::InvalidConfig, std::string(key));
    }
    return static_cast<std::size_t>(v);
}

} // namespace

ExecutionContext ExecutionContext::defaults() {
    return {std::make_shared<StatevectorBackend>(), EvaluatorConfig::exact()};
}

QuantumSimulationWorkflow::QuantumSimulationWorkflow(WorkflowConfig config,
                                                     ExecutionContext ctx)
    : config_(std::move(config)), ctx_(std::move(ctx)) {
    if (!ctx_.backend) {
        ctx_.backend = std::make_shared<StatevectorBackend>();
    }
}

// -- td-evolution ----------------------------------------------------------

TimeDependentWorkflow::TimeDependentWorkflow(WorkflowConfig config,
                                             ExecutionContext ctx)
    : QuantumSimulationWorkflow(std::move(config), std::move(ctx)) {
    config_.reject_unknown({"dt", "steps"}, ErrorCode::InvalidConfig);
    dt_ = config_.get_real("dt");
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        fail(ErrorCode::InvalidConfig, "dt");
    }
    if (!config_.contains("steps")) {
        fail(ErrorCode::InvalidConfig, "steps");
    }
    steps_ = non_negative(config_, "steps", 0);
}

WorkflowResult
TimeDependentWorkflow::execute(const QuantumSimulationModel &model) {
    if (model.n_params() > 0) {
        fail(ErrorCode::ParameterizedModelUnsupported,
             "td-evolution needs a fully bound state preparation");
    }
    const auto &backend = *ctx_.backend;
    const auto &obs = model.observable();
    const Circuit step = trotter_step(model.hamiltonian(), dt_, model.n_qubits());

    std::vector<double> exp_vals;
    std::vector<double> times;
    exp_vals.reserve(steps_);
    times.reserve(steps_);

    if (ctx_.evaluator.analytic()) {
        DenseState state = backend.run_statevector(model.state_prep());
        for (std::size_t k = 1; k <= steps_; ++k) {
            state = backend.run_statevector(step, state);
            exp_vals.push_back(exact_expectation(state, obs));
            times.push_back(static_cast<double>(k) * dt_);
        }
    } else {
        // every step re-runs the whole prefix; no state survives measurement
        Circuit prefix = model.state_prep();
        for (std::size_t k = 1; k <= steps_; ++k) {
            prefix = compose(prefix, step);
            EvaluatorConfig cfg = ctx_.evaluator;
            cfg.seed = derive_seed(ctx_.evaluator.seed, k);
            exp_vals.push_back(evaluate(obs, prefix, backend, cfg));
            times.push_back(static_cast<double>(k) * dt_);
        }
    }

    WorkflowResult result;
    result.set("exp-vals", std::move(exp_vals));
    result.set("times", std::move(times));
    result.set_config(config_);
    return result;
}

std::optional<ExactReference>
TimeDependentWorkflow::exact_reference(const QuantumSimulationModel &model) const {
    if (model.n_params() > 0) {
        fail(ErrorCode::ParameterizedModelUnsupported,
             "td-evolution needs a fully bound state preparation");
    }
    if (model.n_qubits() > kOracleMaxQubits) {
        fail(ErrorCode::OracleTooLarge,
             std::to_string(model.n_qubits()) + " qubits");
    }
    std::vector<double> times(steps_);
    for (std::size_t k = 0; k < steps_; ++k) {
        times[k] = static_cast<double>(k + 1) * dt_;
    }
    const DenseState psi0 = StatevectorBackend().run_statevector(model.state_prep());
    return ExactReference{
        "exp-vals", exact_expectation_series(model.hamiltonian(),
                                             model.observable(), psi0, times)};
}

// -- vqe -------------------------------------------------------------------

VqeWorkflow::VqeWorkflow(WorkflowConfig config, ExecutionContext ctx)
    : VqeWorkflow(std::move(config), std::move(ctx), false) {}

VqeWorkflow::VqeWorkflow(WorkflowConfig config, ExecutionContext ctx, bool qaoa)
    : QuantumSimulationWorkflow(std::move(config), std::move(ctx)) {
    if (qaoa) {
        config_.reject_unknown(
            {"optimizer", "initial-parameters", "f_tol", "max_evals", "p"},
            ErrorCode::InvalidConfig);
    } else {
        config_.reject_unknown(
            {"optimizer", "initial-parameters", "f_tol", "max_evals"},
            ErrorCode::InvalidConfig);
    }
    optimizer_ = config_.get_string_or("optimizer", "nelder-mead");
    if (!OptimizerRegistry::instance().contains(optimizer_)) {
        fail(ErrorCode::InvalidConfig, "optimizer");
    }
    if (config_.contains("initial-parameters")) {
        initial_ = config_.get_real_list("initial-parameters");
        for (double v : *initial_) {
            if (!std::isfinite(v)) {
                fail(ErrorCode::InvalidConfig, "initial-parameters");
            }
        }
    }
    f_tol_ = config_.get_real_or("f_tol", OptimizerSettings{}.f_tol);
    if (!(f_tol_ > 0.0)) {
        fail(ErrorCode::InvalidConfig, "f_tol");
    }
    max_evals_ = non_negative(
        config_, "max_evals",
        static_cast<std::int64_t>(OptimizerSettings{}.max_evals));
    if (max_evals_ == 0) {
        fail(ErrorCode::InvalidConfig, "max_evals");
    }
}

WorkflowResult VqeWorkflow::minimize(const PauliSum &target,
                                     const Circuit &ansatz,
                                     std::vector<double> x0) const {
    if (x0.size() != ansatz.n_params()) {
        fail(ErrorCode::InvalidConfig, "initial-parameters");
    }
    const auto &backend = *ctx_.backend;
    const PauliSum herm = require_hermitian(target, "objective");
    std::uint64_t ordinal = 0;
    const Objective objective = [&](std::span<const double> theta) {
        EvaluatorConfig cfg = ctx_.evaluator;
        cfg.seed = derive_seed(ctx_.evaluator.seed, ordinal++);
        return evaluate(herm, bind(ansatz, theta), backend, cfg);
    };

    OptimizerSettings settings;
    settings.method = optimizer_;
    settings.x0 = std::move(x0);
    settings.f_tol = f_tol_;
    settings.max_evals = max_evals_;
    const auto opt = OptimizerRegistry::instance().create(optimizer_);
    const OptimizationResult r = opt->minimize(objective, settings);

    WorkflowResult result;
    result.set("energy", r.f_min);
    result.set("opt-params", r.x_min);
    result.set("energy-history", r.history);
    result.set("n-evals", static_cast<std::int64_t>(r.evaluations));
    result.set("converged", r.converged);
    result.set_config(config_);
    return result;
}

WorkflowResult VqeWorkflow::execute(const QuantumSimulationModel &model) {
    if (model.n_params() == 0) {
        fail(ErrorCode::InvalidArgument, "vqe needs a parameterized ansatz");
    }
    std::vector<double> x0 =
        initial_ ? *initial_ : std::vector<double>(model.n_params(), 0.0);
    return minimize(model.observable(), model.state_prep(), std::move(x0));
}

std::optional<ExactReference>
VqeWorkflow::exact_reference(const QuantumSimulationModel &model) const {
    return ExactReference{
        "energy", exact_ground_energy(model.observable(), model.n_qubits())};
}

// -- qaoa ------------------------------------------------------------------

QaoaWorkflow::QaoaWorkflow(WorkflowConfig config, ExecutionContext ctx)
    : VqeWorkflow(std::move(config), std::move(ctx), true) {
    layers_ = non_negative(config_, "p", 1);
    if (layers_ == 0) {
        fail(ErrorCode::InvalidConfig, "p");
    }
}

WorkflowResult QaoaWorkflow::execute(const QuantumSimulationModel &model) {
    const Circuit ansatz =
        qaoa_circuit(model.hamiltonian(), layers_, model.n_qubits());
    std::vector<double> x0 =
        initial_ ? *initial_ : std::vector<double>(ansatz.n_params(), 0.5);
    return minimize(model.hamiltonian(), ansatz, std::move(x0));
}

std::optional<ExactReference>
QaoaWorkflow::exact_reference(const QuantumSimulationModel &model) const {
    return ExactReference{
        "energy", exact_ground_energy(model.hamiltonian(), model.n_qubits())};
}

// -- registry --------------------------------------------------------------

WorkflowRegistry::WorkflowRegistry() {
    factories_["td-evolution"] = [](const WorkflowConfig &c,
                                    const ExecutionContext &x) {
        return std::make_unique<TimeDependentWorkflow>(c, x);
    };
    factories_["vqe"] = [](const WorkflowConfig &c, const ExecutionContext &x) {
        return std::make_unique<VqeWorkflow>(c, x);
    };
    factories_["qaoa"] = [](const WorkflowConfig &c, const ExecutionContext &x) {
        return std::make_unique<QaoaWorkflow>(c, x);
    };
}

WorkflowRegistry &WorkflowRegistry::instance() {
    static WorkflowRegistry registry;
    return registry;
}

void WorkflowRegistry::register_workflow(const std::string &name,
                                         WorkflowFactory factory) {
    if (name.empty() || !factory) {
        fail(ErrorCode::InvalidArgument, "workflow name and factory required");
    }
    bool replaced = false;
    {
        std::lock_guard lock(mutex_);
        replaced = factories_.contains(name);
        factories_[name] = std::move(factory);
    }
    if (replaced) {
        log_message("workflow '" + name + "' re-registered; last one wins");
    }
}

std::unique_ptr<QuantumSimulationWorkflow>
WorkflowRegistry::create(const std::string &name, const WorkflowConfig &config,
                         const ExecutionContext &ctx) const {
    WorkflowFactory factory;
    {
        std::lock_guard lock(mutex_);
        auto it = factories_.find(name);
        if (it == factories_.end()) {
            fail(ErrorCode::UnknownWorkflow, name);
        }
        factory = it->second;
    }
    try {
        return factory(config, ctx);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::MissingParameter ||
            e.code() == ErrorCode::BadParameterType) {
            fail(ErrorCode::InvalidConfig, e.detail());
        }
        throw;
    }
}

bool WorkflowRegistry::contains(const std::string &name) const {
    std::lock_guard lock(mutex_);
    return factories_.contains(name);
}

std::vector<std::string> WorkflowRegistry::names() const {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto &[k, v] : factories_) {
        out.push_back(k);
    }
    return out;
}

void register_workflow(const std::string &name, WorkflowFactory factory) {
    WorkflowRegistry::instance().register_workflow(name, std::move(factory));
}

std::unique_ptr<QuantumSimulationWorkflow>
get_workflow(const std::string &name, const WorkflowConfig &config,
             const ExecutionContext &ctx) {
    return WorkflowRegistry::instance().create(name, config, ctx);
}

} // namespace qsimflow
