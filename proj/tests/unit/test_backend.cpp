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

#include "oracle.hpp"
#include "qsimflow/backend.hpp"
#include "qsimflow/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace qsimflow;

namespace {

Circuit sample_circuit() {
    Circuit c(3);
    c.h(0).cnot(0, 1).ry(2, 0.7).cz(1, 2).rx(0, -0.4).s(1).cnot(2, 0);
    return c;
}

} // namespace

TEST_CASE("xoshiro256** reference outputs") {
    // values from an independent implementation seeded through splitmix64(42)
    Xoshiro256 rng(42);
    CHECK(rng() == 0x15780b2e0c2ec716ULL);
    CHECK(rng() == 0x6104d9866d113a7eULL);
    CHECK(rng() == 0xae17533239e499a1ULL);
    Xoshiro256 u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    CHECK(derive_seed(5, 0) != derive_seed(5, 1));
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}

TEST_CASE("statevector matches unitary times |0>") {
    const Circuit c = sample_circuit();
    const DenseState psi = StatevectorBackend().run_statevector(c);
    const Matrix u = unitary_of(c);
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        CHECK(std::abs(psi[i] - u(static_cast<Eigen::Index>(i), 0)) < 1e-12);
    }
}

TEST_CASE("run from a supplied initial state") {
    const Circuit c = sample_circuit();
    const StatevectorBackend be;
    const DenseState start = DenseState::basis_state(3, 6);
    const DenseState psi = be.run_statevector(c, start);
    const Matrix u = unitary_of(c);
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        CHECK(std::abs(psi[i] - u(static_cast<Eigen::Index>(i), 6)) < 1e-12);
    }
    CHECK_THROWS_AS((void)be.run_statevector(c, DenseState(2)), Error);
}

TEST_CASE("backend refuses unbound and oversized circuits") {
    Circuit p(1, 1);
    p.rz(0, ParameterRef{0});
    try {
        (void)StatevectorBackend().run_statevector(p);
        FAIL("expected Unbound");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::Unbound);
    }
    try {
        (void)StatevectorBackend(4).run_statevector(Circuit(5));
        FAIL("expected TooManyQubits");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::TooManyQubits);
    }
}

TEST_CASE("bitstrings put qubit 0 rightmost") {
    Circuit c(3);
    c.x(0);
    const ShotCounts counts = StatevectorBackend().sample(c, 10, 1);
    REQUIRE(counts.counts.size() == 1);
    CHECK(counts.counts.begin()->first == "001");
    CHECK(counts.counts.begin()->second == 10);
}

TEST_CASE("sampling is seeded and unbiased") {
    Circuit c(1);
    c.h(0);
    const StatevectorBackend be;
    const ShotCounts a = be.sample(c, 4096, 17);
    const ShotCounts b = be.sample(c, 4096, 17);
    CHECK(a.counts == b.counts);
    const ShotCounts other = be.sample(c, 4096, 18);
    CHECK(a.counts != other.counts);

    const ShotCounts big = be.sample(c, 100000, 5);
    std::uint64_t total = 0;
    for (const auto &[k, v] : big.counts) {
        total += v;
    }
    CHECK(total == 100000);
    const double p1 = static_cast<double>(big.counts.at("1")) / 1e5;
    CHECK(std::abs(p1 - 0.5) < 4 * std::sqrt(0.25 / 1e5));
}

TEST_CASE("sampled distribution follows |amplitude|^2") {
    const Circuit c = sample_circuit();
    const StatevectorBackend be;
    const DenseState psi = be.run_statevector(c);
    const std::uint64_t shots = 200000;
    const ShotCounts counts = be.sample(c, shots, 123);
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        std::string bits(3, '0');
        for (std::size_t q = 0; q < 3; ++q) {
            bits[2 - q] = (i >> q) & 1 ? '1' : '0';
        }
        const double p = std::norm(psi[i]);
        const auto it = counts.counts.find(bits);
        const double f = it == counts.counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
        CHECK(std::abs(f - p) < 5 * std::sqrt(p * (1 - p) / shots) + 1e-12);
    }
}

TEST_CASE("backend registry") {
    auto &reg = BackendRegistry::instance();
    CHECK(reg.contains("statevector"));
    CHECK(reg.create("statevector")->name() == "statevector");
    try {
        (void)reg.create("ibmq");
        FAIL("expected UnknownBackend");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::UnknownBackend);
    }
    reg.register_backend("tiny", [](std::size_t) {
        return std::make_shared<StatevectorBackend>(2);
    });
    CHECK_THROWS_AS((void)reg.create("tiny")->run_statevector(Circuit(3)), Error);
}
