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
#include "qsimflow/pauli.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qsimflow {

struct TrotterSpec {
    double dt = 0.0;
    std::size_t steps = 0;
};

/// X on every qubit whose entry is 1. Spin-up is bit 0.
Circuit state_prep(std::span<const std::int64_t> initial_spins);

/// Append exp(-i * coeff * angle * P) for one Pauli string: basis change onto
/// Z, CNOT ladder down to the highest-index qubit, Rz(2 * coeff * angle), and
/// the mirror image. `angle` may be a ParameterRef; its scale is multiplied by
/// 2 * coeff. Identity strings contribute only a global phase and are skipped.
void append_pauli_exponential(Circuit &c, const PauliString &p, double coeff,
                              Angle angle);

/// One first-order Trotter step Π_k exp(-i c_k dt P_k) over the simplified
/// (canonically ordered) terms of h, on `n_qubits` qubits (defaults to the
/// operator support).
Circuit trotter_step(const PauliSum &h, double dt, std::size_t n_qubits = 0);

/// Cumulative prefixes: entry k holds k + 1 Trotter steps.
std::vector<Circuit> trotter_evolution(const PauliSum &h,
                                       const TrotterSpec &spec,
                                       std::size_t n_qubits = 0);

/// Alternating-operator ansatz with parameters [γ1, β1, ..., γp, βp]:
/// H on all qubits, then per layer exp(-i γ H_cost) followed by Rx(2β) on
/// every qubit. Throws NotDiagonal for X/Y terms in the cost.
Circuit qaoa_circuit(const PauliSum &cost, std::size_t layers,
                     std::size_t n_qubits = 0);

} // namespace qsimflow
