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

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace qsimflow {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizerSettings {
    std::string method = "nelder-mead";
    std::vector<double> x0;
    double f_tol = 1e-6;
    std::size_t max_evals = 500;
};

struct OptimizationResult {
    std::vector<double> x_min;
    double f_min = 0.0;
    /// Best value seen so far after each objective evaluation.
    std::vector<double> history;
    std::size_t evaluations = 0;
    bool converged = false;
};

class Optimizer {
  public:
    virtual ~Optimizer() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual OptimizationResult
    minimize(const Objective &f, const OptimizerSettings &settings) const = 0;
};

/**
 * @brief Downhill simplex minimizer.
 *
 * Coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
 * The initial simplex is x0 plus a step of 0.05 along each coordinate
 * (0.00025 where x0 is exactly zero). Stops once the spread of f over the
 * simplex is below f_tol or max_evals evaluations have been spent.
 */
class NelderMead final : public Optimizer {
  public:
    [[nodiscard]] std::string name() const override { return "nelder-mead"; }
    [[nodiscard]] OptimizationResult
    minimize(const Objective &f, const OptimizerSettings &settings) const override;
};

OptimizationResult nelder_mead(const Objective &f,
                               const OptimizerSettings &settings);

class OptimizerRegistry {
  public:
    using Factory = std::function<std::unique_ptr<Optimizer>()>;

    static OptimizerRegistry &instance();

    void register_optimizer(const std::string &name, Factory factory);
    [[nodiscard]] std::unique_ptr<Optimizer> create(const std::string &name) const;
    [[nodiscard]] bool contains(const std::string &name) const;

  private:
    OptimizerRegistry();

    mutable std::mutex mutex_;
    std::map<std::string, Factory> factories_;
};

} // namespace qsimflow
