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

#include "qsimflow/model.hpp"
#include "qsimflow/ansatz.hpp"
#include "qsimflow/error.hpp"

namespace qsimflow {

QuantumSimulationModel::QuantumSimulationModel(
    PauliSum observable, std::optional<PauliSum> hamiltonian, Circuit state_prep,
    ParameterMap metadata)
    : observable_(require_hermitian(observable, "observable")),
      hamiltonian_(hamiltonian ? require_hermitian(*hamiltonian, "Hamiltonian")
                               : observable_),
      state_prep_(std::move(state_prep)), metadata_(std::move(metadata)) {
    if (state_prep_.n_qubits() == 0) {
        fail(ErrorCode::InvalidArgument, "model needs a state-prep circuit");
    }
    const std::size_t n = state_prep_.n_qubits();
    if (observable_.min_qubits() > n || hamiltonian_.min_qubits() > n) {
        fail(ErrorCode::DimensionMismatch,
             "operator acts outside the " + std::to_string(n) +
                 "-qubit state-prep register");
    }
}

PauliSum heisenberg_hamiltonian(const HeisenbergParams &p) {
    if (p.num_spins < 2) {
        fail(ErrorCode::TooFewSpins,
             "Heisenberg chain needs at least 2 spins, got " +
                 std::to_string(p.num_spins));
    }
    PauliSum h;
    for (std::size_t i = 0; i + 1 < p.num_spins; ++i) {
        if (p.Jx != 0.0) {
            h.add(p.Jx, {{i, Pauli::X}, {i + 1, Pauli::X}});
        }
        if (p.Jy != 0.0) {
            h.add(p.Jy, {{i, Pauli::Y}, {i + 1, Pauli::Y}});
        }
        if (p.Jz != 0.0) {
            h.add(p.Jz, {{i, Pauli::Z}, {i + 1, Pauli::Z}});
        }
    }
    if (p.h_ext != 0.0) {
        for (std::size_t i = 0; i < p.num_spins; ++i) {
            h.add(p.h_ext, {{i, Pauli::Z}});
        }
    }
    return h;
}

PauliSum staggered_magnetization_observable(std::size_t n) {
    if (n == 0) {
        fail(ErrorCode::InvalidArgument, "staggered magnetization needs n >= 1");
    }
    PauliSum m;
    const double w = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.add(i % 2 == 0 ? w : -w, {{i, Pauli::Z}});
    }
    return m;
}

QuantumSimulationModel HeisenbergModelBuilder::build() const {
    if (p_.initial_spins.size() != p_.num_spins) {
        fail(ErrorCode::InvalidArgument,
             "initial_spins has " + std::to_string(p_.initial_spins.size()) +
                 " entries for " + std::to_string(p_.num_spins) + " spins");
    }
    PauliSum h = heisenberg_hamiltonian(p_);
    PauliSum obs;
    if (p_.observable_name == "staggered_magnetization") {
        obs = staggered_magnetization_observable(p_.num_spins);
    } else if (p_.observable_name == "energy") {
        obs = h;
    } else {
        fail(ErrorCode::BadParameterType, "observable");
    }
    ParameterMap meta;
    meta.set("Jx", p_.Jx)
        .set("Jy", p_.Jy)
        .set("Jz", p_.Jz)
        .set("h_ext", p_.h_ext)
        .set("num_spins", static_cast<std::int64_t>(p_.num_spins))
        .set("initial_spins", p_.initial_spins)
        .set("observable", p_.observable_name);
    return QuantumSimulationModel(std::move(obs), std::move(h),
                                  state_prep(p_.initial_spins), std::move(meta));
}

QuantumSimulationModel CustomModelBuilder::build() const {
    if (!observable_ && !hamiltonian_) {
        fail(ErrorCode::MissingParameter, "observable");
    }
    const PauliSum obs = observable_ ? *observable_ : *hamiltonian_;
    Circuit prep;
    if (ansatz_) {
        prep = *ansatz_;
    } else {
        std::size_t n = obs.min_qubits();
        if (hamiltonian_) {
            n = std::max(n, hamiltonian_->min_qubits());
        }
        prep = Circuit(std::max<std::size_t>(n, 1));
    }
    if (n_params_ && *n_params_ != prep.n_params()) {
        fail(ErrorCode::ArityMismatch,
             "ansatz has " + std::to_string(prep.n_params()) +
                 " parameter(s), model declares " + std::to_string(*n_params_));
    }
    return QuantumSimulationModel(obs, hamiltonian_, std::move(prep));
}

namespace {

QuantumSimulationModel create_heisenberg(const ParameterMap &params) {
    params.reject_unknown({"Jx", "Jy", "Jz", "h_ext", "num_spins",
                           "initial_spins", "observable"},
                          ErrorCode::UnknownKey);
    const std::int64_t n = params.get_int("num_spins");
    if (n < 0) {
        fail(ErrorCode::BadParameterType, "num_spins");
    }
    HeisenbergModelBuilder b;
    b.Jx(params.get_real("Jx"))
        .Jy(params.get_real("Jy"))
        .Jz(params.get_real("Jz"))
        .h_ext(params.get_real_or("h_ext", 0.0))
        .num_spins(static_cast<std::size_t>(n))
        .initial_spins(params.get_int_list("initial_spins"))
        .observable(params.get_string_or("observable", "staggered_magnetization"));
    return b.build();
}

} // namespace

ModelFactory::ModelFactory() { creators_["Heisenberg"] = create_heisenberg; }

ModelFactory &ModelFactory::instance() {
    static ModelFactory factory;
    return factory;
}

void ModelFactory::register_model(const std::string &name, Creator creator) {
    if (name.empty()) {
        fail(ErrorCode::InvalidArgument, "model name must be non-empty");
    }
    std::lock_guard lock(mutex_);
    creators_[name] = std::move(creator);
}

QuantumSimulationModel ModelFactory::create(const std::string &name,
                                            const ParameterMap &params) const {
    Creator creator;
    {
        std::lock_guard lock(mutex_);
        auto it = creators_.find(name);
        if (it == creators_.end()) {
            fail(ErrorCode::UnknownModel, name);
        }
        creator = it->second;
    }
    return creator(params);
}

QuantumSimulationModel create_named_model(const std::string &name,
                                          const ParameterMap &params) {
    return ModelFactory::instance().create(name, params);
}

QuantumSimulationModel create_custom_model(const Circuit &ansatz,
                                           const PauliSum &observable,
                                           std::size_t n_params) {
    return CustomModelBuilder()
        .ansatz(ansatz)
        .observable(observable)
        .n_params(n_params)
        .build();
}

} // namespace qsimflow
