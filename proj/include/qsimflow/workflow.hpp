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

#pragma once

#include "qsimflow/backend.hpp"
#include "qsimflow/evaluator.hpp"
#include "qsimflow/model.hpp"
#include "qsimflow/params.hpp"
#include "qsimflow/result.hpp"
#include "qsimflow/validation.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qsimflow {

using WorkflowConfig = ParameterMap;

/// Backend plus evaluator settings shared by every workflow instance created
/// from a run.
struct ExecutionContext {
    std::shared_ptr<const QuantumBackend> backend;
    EvaluatorConfig evaluator;

    /// Statevector backend, analytic evaluation.
    static ExecutionContext defaults();
};

/// Exact value a workflow's output should approach, keyed by result name.
struct ExactReference {
    std::string key;
    Reference value;
};

class QuantumSimulationWorkflow {
  public:
    virtual ~QuantumSimulationWorkflow() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual WorkflowResult
    execute(const QuantumSimulationModel &model) = 0;

    /// Result key compared by default during validation.
    [[nodiscard]] virtual std::string primary_key() const = 0;

    /// Oracle value for `model`; nullopt when the workflow has none.
    [[nodiscard]] virtual std::optional<ExactReference>
    exact_reference(const QuantumSimulationModel &model) const {
        (void)model;
        return std::nullopt;
    }

    /// Execute, then let `validator` judge the result.
    ValidationDecision validate(const QuantumSimulationModel &model,
                                const QuantumValidationModel &validator) {
        return validator.accept_results(execute(model));
    }

    [[nodiscard]] const WorkflowConfig &config() const noexcept { return config_; }
    [[nodiscard]] const ExecutionContext &context() const noexcept { return ctx_; }

  protected:
    QuantumSimulationWorkflow(WorkflowConfig config, ExecutionContext ctx);

    WorkflowConfig config_;
    ExecutionContext ctx_;
};

/**
 * @brief Time evolution by repeated first-order Trotter steps.
 *
 * Config: dt (> 0), steps (>= 0). Result: "exp-vals" and "times", one entry
 * per step k = 1..steps at t = k * dt.
 */
class TimeDependentWorkflow final : public QuantumSimulationWorkflow {
  public:
    TimeDependentWorkflow(WorkflowConfig config, ExecutionContext ctx);

    [[nodiscard]] std::string name() const override { return "td-evolution"; }
    [[nodiscard]] std::string primary_key() const override { return "exp-vals"; }
    [[nodiscard]] WorkflowResult
    execute(const QuantumSimulationModel &model) override;
    [[nodiscard]] std::optional<ExactReference>
    exact_reference(const QuantumSimulationModel &model) const override;

    [[nodiscard]] double dt() const noexcept { return dt_; }
    [[nodiscard]] std::size_t steps() const noexcept { return steps_; }

  private:
    double dt_;
    std::size_t steps_;
};

/**
 * @brief Variational minimization of the observable over the ansatz
 * parameters.
 *
 * Config: optimizer (default "nelder-mead"), initial-parameters (default all
 * zero), f_tol, max_evals. Result: "energy", "opt-params", "energy-history"
 * (best so far per evaluation), "n-evals", "converged".
 */
class VqeWorkflow : public QuantumSimulationWorkflow {
  public:
    VqeWorkflow(WorkflowConfig config, ExecutionContext ctx);

    [[nodiscard]] std::string name() const override { return "vqe"; }
    [[nodiscard]] std::string primary_key() const override { return "energy"; }
    [[nodiscard]] WorkflowResult
    execute(const QuantumSimulationModel &model) override;
    [[nodiscard]] std::optional<ExactReference>
    exact_reference(const QuantumSimulationModel &model) const override;

  protected:
    VqeWorkflow(WorkflowConfig config, ExecutionContext ctx, bool qaoa);

    /// Minimize `target` over the free parameters of `ansatz`.
    [[nodiscard]] WorkflowResult minimize(const PauliSum &target,
                                          const Circuit &ansatz,
                                          std::vector<double> x0) const;

    std::string optimizer_;
    std::optional<std::vector<double>> initial_;
    double f_tol_;
    std::size_t max_evals_;
};

/**
 * @brief QAOA on a diagonal cost Hamiltonian.
 *
 * Config: everything vqe accepts plus p (layers, default 1). The model's
 * state-preparation circuit is replaced by the alternating ansatz; the
 * default start is 0.5 for every angle.
 */
class QaoaWorkflow final : public VqeWorkflow {
  public:
    QaoaWorkflow(WorkflowConfig config, ExecutionContext ctx);

    [[nodiscard]] std::string name() const override { return "qaoa"; }
    [[nodiscard]] WorkflowResult
    execute(const QuantumSimulationModel &model) override;
    [[nodiscard]] std::optional<ExactReference>
    exact_reference(const QuantumSimulationModel &model) const override;

    [[nodiscard]] std::size_t layers() const noexcept { return layers_; }

  private:
    std::size_t layers_;
};

using WorkflowFactory = std::function<std::unique_ptr<QuantumSimulationWorkflow>(
    const WorkflowConfig &, const ExecutionContext &)>;

class WorkflowRegistry {
  public:
    static WorkflowRegistry &instance();

    /// Last registration wins; replacing an existing name is logged.
    void register_workflow(const std::string &name, WorkflowFactory factory);
    [[nodiscard]] std::unique_ptr<QuantumSimulationWorkflow>
    create(const std::string &name, const WorkflowConfig &config,
           const ExecutionContext &ctx) const;
    [[nodiscard]] bool contains(const std::string &name) const;
    [[nodiscard]] std::vector<std::string> names() const;

  private:
    WorkflowRegistry();

    mutable std::mutex mutex_;
    std::map<std::string, WorkflowFactory> factories_;
};

void register_workflow(const std::string &name, WorkflowFactory factory);

/// Throws UnknownWorkflow for unregistered names and InvalidConfig (detail:
/// the offending key) for unknown or ill-typed configuration.
std::unique_ptr<QuantumSimulationWorkflow>
get_workflow(const std::string &name, const WorkflowConfig &config = {},
             const ExecutionContext &ctx = ExecutionContext::defaults());

} // namespace qsimflow
