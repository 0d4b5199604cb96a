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

#include "qsimflow/ansatz.hpp"
#include "qsimflow/error.hpp"

#include <algorithm>

namespace qsimflow {

namespace {

std::size_t register_size(const PauliSum &h, std::size_t requested) {
    const std::size_t support = std::max<std::size_t>(h.min_qubits(), 1);
    if (requested == 0) {
        return support;
    }
    if (requested < support) {
        fail(ErrorCode::DimensionMismatch,
             "operator acts on " + std::to_string(support) +
                 " qubits but the register has " + std::to_string(requested));
    }
    return requested;
}

Angle scaled(const Angle &a, double factor) {
    if (const auto *v = std::get_if<double>(&a)) {
        return *v * factor;
    }
    auto ref = std::get<ParameterRef>(a);
    ref.scale *= factor;
    ref.offset *= factor;
    return ref;
}

} // namespace

Circuit state_prep(std::span<const std::int64_t> initial_spins) {
    if (initial_spins.empty()) {
        fail(ErrorCode::InvalidArgument, "initial_spins must be non-empty");
    }
    Circuit c(initial_spins.size());
    for (std::size_t q = 0; q < initial_spins.size(); ++q) {
        if (initial_spins[q] == 1) {
            c.x(q);
        } else if (initial_spins[q] != 0) {
            fail(ErrorCode::InvalidArgument,
                 "initial_spins entries must be 0 or 1");
        }
    }
    return c;
}

void append_pauli_exponential(Circuit &c, const PauliString &p, double coeff,
                              Angle angle) {
    if (p.is_identity()) {
        return;
    }
    const auto &f = p.factors();
    for (auto [q, op] : f) {
        if (op == Pauli::X) {
            c.h(q);
        } else if (op == Pauli::Y) {
            c.sdg(q);
            c.h(q);
        }
    }
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        c.cnot(f[k].first, f[k + 1].first);
    }
    c.rz(f.back().first, scaled(angle, 2.0 * coeff));
    for (std::size_t k = f.size() - 1; k > 0; --k) {
        c.cnot(f[k - 1].first, f[k].first);
    }
    for (auto [q, op] : f) {
        if (op == Pauli::X) {
            c.h(q);
        } else if (op == Pauli::Y) {
            c.h(q);
            c.s(q);
        }
    }
}

Circuit trotter_step(const PauliSum &h, double dt, std::size_t n_qubits) {
    const PauliSum herm = require_hermitian(h, "Trotter Hamiltonian");
    Circuit c(register_size(herm, n_qubits));
    for (const auto &t : herm.terms()) {
        append_pauli_exponential(c, t.string, t.coefficient.real(), dt);
    }
    return c;
}

std::vector<Circuit> trotter_evolution(const PauliSum &h,
                                       const TrotterSpec &spec,
                                       std::size_t n_qubits) {
    if (!(spec.dt > 0.0)) {
        fail(ErrorCode::InvalidArgument, "Trotter dt must be positive");
    }
    const Circuit step = trotter_step(h, spec.dt, n_qubits);
    std::vector<Circuit> prefixes;
    prefixes.reserve(spec.steps);
    Circuit current = step;
    for (std::size_t k = 0; k < spec.steps; ++k) {
        if (k > 0) {
            current = compose(current, step);
        }
        prefixes.push_back(current);
    }
    return prefixes;
}

Circuit qaoa_circuit(const PauliSum &cost, std::size_t layers,
                     std::size_t n_qubits) {
    if (layers == 0) {
        fail(ErrorCode::InvalidArgument, "QAOA needs at least one layer");
    }
    const PauliSum herm = require_hermitian(cost, "QAOA cost");
    if (!herm.is_diagonal()) {
        fail(ErrorCode::NotDiagonal, "QAOA cost has X or Y factors");
    }
    const std::size_t n = register_size(herm, n_qubits);
    Circuit c(n, 2 * layers);
    for (std::size_t q = 0; q < n; ++q) {
        c.h(q);
    }
    for (std::size_t l = 0; l < layers; ++l) {
        const ParameterRef gamma{2 * l, 1.0, 0.0};
        for (const auto &t : herm.terms()) {
            append_pauli_exponential(c, t.string, t.coefficient.real(), gamma);
        }
        const ParameterRef beta{2 * l + 1, 2.0, 0.0};
        for (std::size_t q = 0; q < n; ++q) {
            c.rx(q, beta);
        }
    }
    return c;
}

} // namespace qsimflow
