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
#include "qsimflow/circuit.hpp"
#include "qsimflow/pauli.hpp"

#include <cstdint>

namespace qsimflow {

enum class EvaluatorMode { Analytic, Shots };

/// shots == 0 selects analytic mode regardless of `mode`.
struct EvaluatorConfig {
    EvaluatorMode mode = EvaluatorMode::Analytic;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    [[nodiscard]] bool analytic() const noexcept {
        return mode == EvaluatorMode::Analytic || shots == 0;
    }

    static EvaluatorConfig exact() { return {}; }
    static EvaluatorConfig sampled(std::uint64_t shots, std::uint64_t seed) {
        return {EvaluatorMode::Shots, shots, seed};
    }
};

/// Σ (-1)^{parity on the term's support} count / shots, in [-1, 1]. `counts`
/// must come from a circuit that already rotated the term onto Z.
double term_expectation(const ShotCounts &counts, const PauliString &term);

/**
 * @brief Expectation of `obs` in the state prepared by `prep`.
 *
 * Analytic mode takes the exact expectation of the final statevector. Shots
 * mode runs prep + basis_change(P_k) once per non-identity term with seed
 * derive_seed(cfg.seed, k), where k is the term's index in the simplified
 * operator, and sums c_k * term_expectation in canonical term order. Identity
 * terms contribute c_k without running anything.
 */
double evaluate(const PauliSum &obs, const Circuit &prep,
                const QuantumBackend &backend, const EvaluatorConfig &cfg);

/// Same as evaluate() but starting from an already computed final state
/// (analytic only).
double evaluate_state(const PauliSum &obs, const DenseState &state);

} // namespace qsimflow
