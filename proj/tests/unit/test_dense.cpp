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
#include "qsimflow/dense.hpp"
#include "qsimflow/error.hpp"

#include <doctest.h>

#include <random>

using namespace qsimflow;

namespace {

DenseState random_state(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &z : a) {
        z = Complex(g(rng), g(rng));
        norm += std::norm(z);
    }
    for (auto &z : a) {
        z /= std::sqrt(norm);
    }
    return DenseState(n, std::move(a));
}

Eigen::VectorXcd as_vector(const DenseState &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

} // namespace

TEST_CASE("dense matrix agrees with Kronecker construction") {
    const PauliSum s = parse_pauli_sum("0.3 * X0 Y2 - 1.1 * Z1 + 0.7 * Y0 Y1 Z2 + 2");
    const Matrix m = to_dense_matrix(s, 3);
    CHECK((m - oracle::sum_matrix(s, 3)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK_THROWS_AS((void)to_dense_matrix(s, 2), Error);
}

TEST_CASE("two-site Heisenberg spectrum") {
    const Matrix m = to_dense_matrix(parse_pauli_sum("X0 X1 + Y0 Y1 + Z0 Z1"), 2);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const auto ev = es.eigenvalues();
    CHECK(ev(0) == doctest::Approx(-3.0).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) {
        CHECK(ev(k) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(exact_ground_energy(parse_pauli_sum("X0 X1 + Y0 Y1 + Z0 Z1"), 2) ==
          doctest::Approx(-3.0));
}

TEST_CASE("ground energy of the two-qubit deuteron-style Hamiltonian") {
    const PauliSum h = parse_pauli_sum(
        "5.907 - 2.1433 * X0 X1 - 2.1433 * Y0 Y1 + 0.21829 * Z0 - 6.125 * Z1");
    const double e = exact_ground_energy(h, 2);
    // independent route: eigenvalues of the Kronecker-built matrix
    Eigen::SelfAdjointEigenSolver<Matrix> es(oracle::sum_matrix(h, 2));
    CHECK(e == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-12));
    CHECK(std::abs(e - (-1.7489)) < 1e-3);
}

TEST_CASE("matrix-free expectation matches <psi|M|psi>") {
    std::mt19937_64 rng(3);
    const PauliSum s = parse_pauli_sum("0.4 * X0 Z1 + 1.2 * Y1 Y2 - 0.3 * Z0 + 0.25 * X2 Y0");
    for (int trial = 0; trial < 20; ++trial) {
        const DenseState psi = random_state(rng, 3);
        const Eigen::VectorXcd v = as_vector(psi);
        const double expect = (v.adjoint() * oracle::sum_matrix(s, 3) * v)(0).real();
        CHECK(exact_expectation(psi, s) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)exact_expectation(DenseState(1), parse_pauli_sum("(0,1) * X0")),
                    Error);
}

TEST_CASE("single-qubit evolution closed form") {
    const PauliSum h = parse_pauli_sum("X0");
    for (double t : {0.0, 0.3, 1.0, 2.5}) {
        const DenseState psi = exact_evolve(h, DenseState(1), t);
        CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(exact_expectation(psi, parse_pauli_sum("Z0")) ==
              doctest::Approx(std::cos(2 * t)).epsilon(1e-12));
    }
}

TEST_CASE("propagator series matches repeated exact_evolve") {
    const PauliSum h = parse_pauli_sum("X0 X1 + Y0 Y1 + 3 * Z0 Z1 + 0.5 * Z2 + X1 X2");
    const PauliSum obs = parse_pauli_sum("Z0 - Z1 + Z2");
    const DenseState psi0 = DenseState::basis_state(3, 0b010);
    const std::vector<double> times{0.1, 0.4, 1.3};
    const auto series = exact_expectation_series(h, obs, psi0, times);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double direct = exact_expectation(exact_evolve(h, psi0, times[k]), obs);
        CHECK(series[k] == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("oracle bound") {
    PauliSum wide;
    wide.add(1.0, {{12, Pauli::Z}});
    try {
        (void)exact_ground_energy(wide, 13);
        FAIL("expected OracleTooLarge");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::OracleTooLarge);
    }
}

TEST_CASE("state validation") {
    CHECK_THROWS_AS(DenseState(2, std::vector<Complex>(3, 0.5)), Error);
    CHECK_THROWS_AS(DenseState(1, std::vector<Complex>{1.0, 1.0}), Error);
    const DenseState b = DenseState::basis_state(3, 5);
    CHECK(b[5] == Complex(1, 0));
    CHECK(exact_expectation(b, parse_pauli_sum("Z0")) == doctest::Approx(-1.0));
    CHECK(exact_expectation(b, parse_pauli_sum("Z1")) == doctest::Approx(1.0));
}
