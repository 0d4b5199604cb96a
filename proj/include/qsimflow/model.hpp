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

#include "qsimflow/circuit.hpp"
#include "qsimflow/params.hpp"
#include "qsimflow/pauli.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qsimflow {

/**
 * @brief Problem description handed to a workflow.
 *
 * Holds the observable to measure, the Hamiltonian that drives the dynamics
 * or defines the energy (equal to the observable unless set separately), and
 * the state-preparation circuit, which may carry free parameters.
 */
class QuantumSimulationModel {
  public:
    QuantumSimulationModel(PauliSum observable, std::optional<PauliSum> hamiltonian,
                           Circuit state_prep, ParameterMap metadata = {});

    [[nodiscard]] const PauliSum &observable() const noexcept {
        return observable_;
    }
    [[nodiscard]] const PauliSum &hamiltonian() const noexcept {
        return hamiltonian_;
    }
    [[nodiscard]] const Circuit &state_prep() const noexcept {
        return state_prep_;
    }
    [[nodiscard]] std::size_t n_params() const noexcept {
        return state_prep_.n_params();
    }
    [[nodiscard]] std::size_t n_qubits() const noexcept {
        return state_prep_.n_qubits();
    }
    [[nodiscard]] const ParameterMap &metadata() const noexcept {
        return metadata_;
    }

  private:
    PauliSum observable_;
    PauliSum hamiltonian_;
    Circuit state_prep_;
    ParameterMap metadata_;
};

struct HeisenbergParams {
    double Jx = 0.0;
    double Jy = 0.0;
    double Jz = 0.0;
    double h_ext = 0.0;
    std::size_t num_spins = 0;
    std::vector<std::int64_t> initial_spins;
    std::string observable_name = "staggered_magnetization";
};

/// Open 1D chain: Σ_i (Jx X_i X_{i+1} + Jy Y_i Y_{i+1} + Jz Z_i Z_{i+1})
/// + h_ext Σ_i Z_i. Throws TooFewSpins for fewer than two spins.
PauliSum heisenberg_hamiltonian(const HeisenbergParams &p);

/// (1/n) Σ_i (-1)^i Z_i.
PauliSum staggered_magnetization_observable(std::size_t n);

/// Polymorphic model construction; build() validates and throws on failure.
class ModelBuilder {
  public:
    virtual ~ModelBuilder() = default;
    [[nodiscard]] virtual QuantumSimulationModel build() const = 0;
};

class HeisenbergModelBuilder final : public ModelBuilder {
  public:
    HeisenbergModelBuilder &Jx(double v) { p_.Jx = v; return *this; }
    HeisenbergModelBuilder &Jy(double v) { p_.Jy = v; return *this; }
    HeisenbergModelBuilder &Jz(double v) { p_.Jz = v; return *this; }
    HeisenbergModelBuilder &h_ext(double v) { p_.h_ext = v; return *this; }
    HeisenbergModelBuilder &num_spins(std::size_t n) {
        p_.num_spins = n;
        return *this;
    }
    HeisenbergModelBuilder &initial_spins(std::vector<std::int64_t> s) {
        p_.initial_spins = std::move(s);
        return *this;
    }
    HeisenbergModelBuilder &observable(std::string name) {
        p_.observable_name = std::move(name);
        return *this;
    }
    [[nodiscard]] const HeisenbergParams &params() const noexcept { return p_; }

    [[nodiscard]] QuantumSimulationModel build() const override;

  private:
    HeisenbergParams p_;
};

class CustomModelBuilder final : public ModelBuilder {
  public:
    CustomModelBuilder &ansatz(Circuit c) { ansatz_ = std::move(c); return *this; }
    CustomModelBuilder &observable(PauliSum o) {
        observable_ = std::move(o);
        return *this;
    }
    CustomModelBuilder &hamiltonian(PauliSum h) {
        hamiltonian_ = std::move(h);
        return *this;
    }
    CustomModelBuilder &n_params(std::size_t n) { n_params_ = n; return *this; }

    [[nodiscard]] QuantumSimulationModel build() const override;

  private:
    std::optional<Circuit> ansatz_;
    std::optional<PauliSum> observable_;
    std::optional<PauliSum> hamiltonian_;
    std::optional<std::size_t> n_params_;
};

/// Named model factory. "Heisenberg" is built in.
class ModelFactory {
  public:
    using Creator = std::function<QuantumSimulationModel(const ParameterMap &)>;

    static ModelFactory &instance();

    void register_model(const std::string &name, Creator creator);
    [[nodiscard]] QuantumSimulationModel create(const std::string &name,
                                                const ParameterMap &params) const;

  private:
    ModelFactory();

    mutable std::mutex mutex_;
    std::map<std::string, Creator> creators_;
};

QuantumSimulationModel create_named_model(const std::string &name,
                                          const ParameterMap &params);

/// Model with hamiltonian = observable and state_prep = ansatz.
QuantumSimulationModel create_custom_model(const Circuit &ansatz,
                                           const PauliSum &observable,
                                           std::size_t n_params);

} // namespace qsimflow
