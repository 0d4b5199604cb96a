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

#include "qsimflow/params.hpp"
#include "qsimflow/result.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qsimflow {

class QuantumSimulationModel;
class QuantumSimulationWorkflow;

enum class Metric { MaxAbs, Rmse, FinalAbs };

std::string_view to_string(Metric m) noexcept;
/// "max-abs", "rmse", "final-abs"
Metric parse_metric(std::string_view name);

/// Scalar or series reference. std::monostate means "derive it from the exact
/// oracle".
using Reference = std::variant<std::monostate, double, std::vector<double>>;

struct ValidationCriteria {
    Metric metric = Metric::MaxAbs;
    double threshold = 0.0;
    Reference reference;
};

struct ValidationDecision {
    double distance = 0.0;
    double threshold = 0.0;
    bool accepted = false;
    std::string metric;
};

double series_distance(std::span<const double> a, std::span<const double> b,
                       Metric metric);

/// Distance of result[key] from criteria.reference; accepted iff
/// distance <= threshold (ties accept). Scalars compare as 1-element series.
ValidationDecision accept_results(const WorkflowResult &result,
                                  std::string_view key,
                                  const ValidationCriteria &criteria);

/**
 * @brief Decides whether a workflow result is acceptable.
 *
 * Implementations compare against previously validated values, experimental
 * data, or anything else that yields a distance and a binary verdict.
 */
class QuantumValidationModel {
  public:
    virtual ~QuantumValidationModel() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual ValidationDecision
    accept_results(const WorkflowResult &result) const = 0;
};

/// Built-in validator: one result key against a fixed reference.
class ReferenceValidator final : public QuantumValidationModel {
  public:
    ReferenceValidator(std::string key, ValidationCriteria criteria);

    [[nodiscard]] std::string name() const override { return "reference"; }
    [[nodiscard]] ValidationDecision
    accept_results(const WorkflowResult &result) const override;

    [[nodiscard]] const std::string &key() const noexcept { return key_; }
    [[nodiscard]] const ValidationCriteria &criteria() const noexcept {
        return criteria_;
    }

  private:
    std::string key_;
    ValidationCriteria criteria_;
};

/**
 * Execute `workflow` on `model` and compare against criteria.reference. When
 * the reference is empty it is derived from the exact oracle through the
 * workflow's reference provider (OracleTooLarge past the oracle bound). An
 * empty `key` selects the workflow's primary result key.
 */
ValidationDecision validate(QuantumSimulationWorkflow &workflow,
                            const QuantumSimulationModel &model,
                            const ValidationCriteria &criteria,
                            std::string key = {});

/// Two-column CSV (index or time, value); a non-numeric first line is taken
/// as a header.
std::vector<double> read_reference_csv(const std::string &path);
std::vector<double> parse_reference_csv(std::string_view text);

/// Named validator factories, for validators selected from configuration.
/// "reference" is built in (keys: key, metric, threshold, reference).
class ValidatorRegistry {
  public:
    using Factory = std::function<std::unique_ptr<QuantumValidationModel>(
        const ParameterMap &)>;

    static ValidatorRegistry &instance();

    void register_validator(const std::string &name, Factory factory);
    [[nodiscard]] std::unique_ptr<QuantumValidationModel>
    create(const std::string &name, const ParameterMap &params) const;
    [[nodiscard]] bool contains(const std::string &name) const;

  private:
    ValidatorRegistry();

    mutable std::mutex mutex_;
    std::map<std::string, Factory> factories_;
};

} // namespace qsimflow
