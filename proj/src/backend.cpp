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

#include "qsimflow/backend.hpp"
#include "qsimflow/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qsimflow {

namespace {

std::uint64_t splitmix64(std::uint64_t &x) noexcept {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto &s : s_) {
        s = splitmix64(seed);
    }
}

Xoshiro256::result_type Xoshiro256::operator()() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t ordinal) noexcept {
    std::uint64_t x = base ^ (ordinal * 0xd1342543de82ef95ULL);
    splitmix64(x);
    return splitmix64(x);
}

// ---------------------------------------------------------------------------
// Kernels

namespace kernels {

namespace {

// Generic 2x2 on qubit q: iterate over pairs (i, i | bit) with bit q clear.
void apply_1q(std::span<Complex> amps, std::size_t q, const Complex m00,
              const Complex m01, const Complex m10, const Complex m11) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = amps.size();
    for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
        for (std::size_t i = hi; i < hi + bit; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i | bit];
            amps[i] = m00 * a0 + m01 * a1;
            amps[i | bit] = m10 * a0 + m11 * a1;
        }
    }
}

void apply_diag_1q(std::span<Complex> amps, std::size_t q, const Complex d0,
                   const Complex d1) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= (i & bit) ? d1 : d0;
    }
}

void apply_x(std::span<Complex> amps, std::size_t q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) == 0) {
            std::swap(amps[i], amps[i | bit]);
        }
    }
}

void apply_cnot(std::span<Complex> amps, std::size_t control,
                std::size_t target) {
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cb) && !(i & tb)) {
            std::swap(amps[i], amps[i | tb]);
        }
    }
}

void apply_cz(std::span<Complex> amps, std::size_t a, std::size_t b) {
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

// Dense k-qubit apply: gather the 2^k amplitudes sharing the bits outside the
// support, multiply, scatter.
void apply_dense(std::span<Complex> amps, const std::vector<std::size_t> &t,
                 const Matrix &m) {
    const std::size_t k = t.size();
    const std::size_t sub_dim = std::size_t{1} << k;
    std::size_t support = 0;
    for (auto q : t) {
        support |= std::size_t{1} << q;
    }
    std::vector<std::size_t> offsets(sub_dim);
    for (std::size_t s = 0; s < sub_dim; ++s) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (s & (std::size_t{1} << j)) {
                off |= std::size_t{1} << t[j];
            }
        }
        offsets[s] = off;
    }
    std::vector<Complex> in(sub_dim);
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & support) {
            continue;
        }
        for (std::size_t s = 0; s < sub_dim; ++s) {
            in[s] = amps[base | offsets[s]];
        }
        for (std::size_t r = 0; r < sub_dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t s = 0; s < sub_dim; ++s) {
                acc += m(static_cast<Eigen::Index>(r),
                         static_cast<Eigen::Index>(s)) *
                       in[s];
            }
            amps[base | offsets[r]] = acc;
        }
    }
}

} // namespace

void apply_gate(std::span<Complex> amps, const Gate &g) {
    using namespace std::complex_literals;
    const std::size_t q = g.targets.front();
    switch (g.kind) {
    case GateKind::X:
        apply_x(amps, q);
        return;
    case GateKind::Z:
        apply_diag_1q(amps, q, 1.0, -1.0);
        return;
    case GateKind::S:
        apply_diag_1q(amps, q, 1.0, 1i);
        return;
    case GateKind::Sdg:
        apply_diag_1q(amps, q, 1.0, -1i);
        return;
    case GateKind::Rz: {
        const double a = g.bound_angle() / 2;
        apply_diag_1q(amps, q, std::exp(Complex(0, -a)), std::exp(Complex(0, a)));
        return;
    }
    case GateKind::Y:
    case GateKind::H:
    case GateKind::Rx:
    case GateKind::Ry: {
        const Matrix m = gate_matrix(g);
        apply_1q(amps, q, m(0, 0), m(0, 1), m(1, 0), m(1, 1));
        return;
    }
    case GateKind::CNOT:
        apply_cnot(amps, g.targets[0], g.targets[1]);
        return;
    case GateKind::CZ:
        apply_cz(amps, g.targets[0], g.targets[1]);
        return;
    case GateKind::RawUnitary:
        apply_dense(amps, g.targets, gate_matrix(g));
        return;
    }
}

} // namespace kernels

// ---------------------------------------------------------------------------
// Statevector backend

void StatevectorBackend::check(const Circuit &c) const {
    if (!c.is_bound()) {
        fail(ErrorCode::Unbound, "circuit has " + std::to_string(c.n_params()) +
                                     " unbound parameter(s)");
    }
    if (c.n_qubits() > max_qubits_) {
        fail(ErrorCode::TooManyQubits,
             std::to_string(c.n_qubits()) + " qubits exceeds backend cap of " +
                 std::to_string(max_qubits_));
    }
}

DenseState StatevectorBackend::run_statevector(const Circuit &c) const {
    check(c);
    return run_statevector(c, DenseState(c.n_qubits()));
}

DenseState StatevectorBackend::run_statevector(const Circuit &c,
                                               DenseState initial) const {
    check(c);
    if (initial.n_qubits() != c.n_qubits()) {
        fail(ErrorCode::DimensionMismatch,
             "initial state qubit count does not match the circuit");
    }
    auto amps = initial.amplitudes();
    for (const auto &g : c.gates()) {
        kernels::apply_gate(amps, g);
    }
    return initial;
}

ShotCounts StatevectorBackend::sample(const Circuit &c, std::uint64_t shots,
                                      std::uint64_t seed) const {
    if (shots == 0) {
        fail(ErrorCode::InvalidArgument, "shots must be at least 1");
    }
    return sample_state(run_statevector(c), shots, seed);
}

ShotCounts sample_state(const DenseState &state, std::uint64_t shots,
                        std::uint64_t seed) {
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    // draws are scaled by the accumulated total so round-off in the norm
    // cannot push a draw past the last bucket
    std::vector<std::uint64_t> hits(amps.size(), 0);
    Xoshiro256 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        ++hits[static_cast<std::size_t>(it - cdf.begin())];
    }
    ShotCounts out;
    out.shots = shots;
    const std::size_t n = state.n_qubits();
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] == 0) {
            continue;
        }
        std::string key(n, '0');
        for (std::size_t q = 0; q < n; ++q) {
            if (i & (std::size_t{1} << q)) {
                key[n - 1 - q] = '1';
            }
        }
        out.counts.emplace(std::move(key), hits[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry

BackendRegistry::BackendRegistry() {
    factories_["statevector"] = [](std::size_t max_qubits) {
        return std::make_shared<StatevectorBackend>(max_qubits);
    };
}

BackendRegistry &BackendRegistry::instance() {
    static BackendRegistry registry;
    return registry;
}

void BackendRegistry::register_backend(const std::string &name,
                                       Factory factory) {
    if (name.empty()) {
        fail(ErrorCode::InvalidArgument, "backend name must be non-empty");
    }
    std::lock_guard lock(mutex_);
    factories_[name] = std::move(factory);
}

std::shared_ptr<QuantumBackend>
BackendRegistry::create(const std::string &name, std::size_t max_qubits) const {
    Factory factory;
    {
        std::lock_guard lock(mutex_);
        auto it = factories_.find(name);
        if (it == factories_.end()) {
            fail(ErrorCode::UnknownBackend, name);
        }
        factory = it->second;
    }
    return factory(max_qubits);
}

bool BackendRegistry::contains(const std::string &name) const {
    std::lock_guard lock(mutex_);
    return factories_.contains(name);
}

std::vector<std::string> BackendRegistry::names() const {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto &[name, f] : factories_) {
        out.push_back(name);
    }
    return out;
}

} // namespace qsimflow
