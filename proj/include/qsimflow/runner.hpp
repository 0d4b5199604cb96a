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

#include "qsimflow/evaluator.hpp"
#include "qsimflow/model.hpp"
#include "qsimflow/result.hpp"
#include "qsimflow/validation.hpp"
#include "qsimflow/workflow.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace qsimflow {

struct ModelSpec {
    /// Factory name ("Heisenberg") or "custom".
    std::string name;
    /// Named models: every key of the block except "type".
    ParameterMap params;

    // custom models
    std::string hamiltonian;
    std::string observable;
    std::string ansatz_file;
    std::optional<std::size_t> n_params;
    std::optional<std::size_t> num_qubits;
};

struct ValidationSpec {
    Metric metric = Metric::MaxAbs;
    double threshold = 0.0;
    /// Empty: derive from the exact oracle.
    Reference reference;
    /// Result key; empty selects the workflow's primary key.
    std::string key;
};

struct RunSpec {
    ModelSpec model;
    std::string workflow;
    WorkflowConfig workflow_config;
    std::string backend = "statevector";
    std::size_t max_qubits = StatevectorBackend::kDefaultMaxQubits;
    EvaluatorConfig evaluator;
    std::optional<ValidationSpec> validation;
    /// CSV destination; empty writes nothing (callers may print the CSV).
    std::string output;
    /// Directory that relative paths in the config resolve against.
    std::filesystem::path base_dir;
};

/**
 * Parse a JSON run configuration. Errors carry the offending path in
 * Error::detail(): ParseError ("line N: ..."), UnknownKey, MissingKey and
 * TypeError (e.g. "model.Jx").
 */
RunSpec parse_run_spec(std::string_view json_text,
                       const std::filesystem::path &base_dir = {});

/// Read and parse a configuration file; relative paths resolve against its
/// directory.
RunSpec load_run_spec(const std::filesystem::path &path);

QuantumSimulationModel build_model(const RunSpec &spec);

struct RunOutcome {
    std::string workflow;
    WorkflowResult result;
    std::optional<ValidationDecision> decision;
    std::string csv;

    /// 0 on success, 2 when validation rejected the result.
    [[nodiscard]] int exit_code() const noexcept {
        return decision && !decision->accepted ? 2 : 0;
    }
};

/// Build, execute, validate and format. Writes the CSV to spec.output when
/// set.
RunOutcome execute_run(const RunSpec &spec);

/**
 * CSV rendering with 12 significant digits, independent of locale.
 * td-evolution: "step,time,exp_val". vqe/qaoa: a "# energy=<e>
 * opt-params=<p0>;<p1>..." line, then "eval,best_energy".
 */
std::string format_csv(const WorkflowResult &result);

} // namespace qsimflow
