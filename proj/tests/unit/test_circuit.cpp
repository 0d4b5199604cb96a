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
#include "qsimflow/circuit.hpp"
#include "qsimflow/error.hpp"

#include <doctest.h>

#include <random>

using namespace qsimflow;
using oracle::C;
using oracle::Mat;

namespace {

Mat mat2(C a, C b, C c, C d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

Mat rot(int p, double a) {
    return std::cos(a / 2) * Mat::Identity(2, 2) - C(0, 1) * std::sin(a / 2) * oracle::pauli(p);
}

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode{};
}

} // namespace

TEST_CASE("fixed gate matrices") {
    const double r = 1 / std::sqrt(2.0);
    CHECK((gate_matrix(Gate::single(GateKind::H, 0)) - mat2(r, r, r, -r)).norm() < 1e-15);
    CHECK((gate_matrix(Gate::single(GateKind::S, 0)) - mat2(1, 0, 0, C(0, 1))).norm() < 1e-15);
    CHECK((gate_matrix(Gate::single(GateKind::Sdg, 0)) - mat2(1, 0, 0, C(0, -1))).norm() <
          1e-15);
    for (double a : {0.0, 0.4, -1.3, 3.0}) {
        CHECK((gate_matrix(Gate::rotation(GateKind::Rx, 0, a)) - rot(1, a)).norm() < 1e-14);
        CHECK((gate_matrix(Gate::rotation(GateKind::Ry, 0, a)) - rot(2, a)).norm() < 1e-14);
        CHECK((gate_matrix(Gate::rotation(GateKind::Rz, 0, a)) - rot(3, a)).norm() < 1e-14);
    }
}

TEST_CASE("random circuits agree with the Kronecker oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<std::size_t> qubit(0, 2);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    const std::size_t n = 3;
    const double r = 1 / std::sqrt(2.0);
    const Mat h = mat2(r, r, r, -r);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c(n);
        Mat expect = Mat::Identity(8, 8);
        for (int g = 0; g < 12; ++g) {
            const std::size_t q = qubit(rng);
            std::size_t t = qubit(rng);
            if (t == q) {
                t = (q + 1) % n;
            }
            const double a = angle(rng);
            Mat step;
            switch (kind(rng)) {
            case 0:
                c.x(q);
                step = oracle::embed1(oracle::pauli(1), q, n);
                break;
            case 1:
                c.y(q);
                step = oracle::embed1(oracle::pauli(2), q, n);
                break;
            case 2:
                c.h(q);
                step = oracle::embed1(h, q, n);
                break;
            case 3:
                c.s(q);
                step = oracle::embed1(mat2(1, 0, 0, C(0, 1)), q, n);
                break;
            case 4:
                c.rx(q, a);
                step = oracle::embed1(rot(1, a), q, n);
                break;
            case 5:
                c.ry(q, a);
                step = oracle::embed1(rot(2, a), q, n);
                break;
            case 6:
                c.rz(q, a);
                step = oracle::embed1(rot(3, a), q, n);
                break;
            case 7:
                c.cnot(q, t);
                step = oracle::cnot(q, t, n);
                break;
            case 8:
                c.cz(q, t);
                step = oracle::embed1(h, t, n) * oracle::cnot(q, t, n) * oracle::embed1(h, t, n);
                break;
            default:
                c.z(q);
                step = oracle::embed1(oracle::pauli(3), q, n);
                break;
            }
            expect = step * expect;
        }
        CHECK((unitary_of(c) - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("parameter references bind with scale and offset") {
    Circuit c(1, 2);
    c.rz(0, ParameterRef{1, 2.0, 0.1});
    const std::vector<double> p{9.0, 0.3};
    const Circuit b = qsimflow::bind(c, p);
    CHECK(b.n_params() == 0);
    CHECK(b.gates()[0].bound_angle() == doctest::Approx(0.7));
    const std::vector<double> short_p{1.0};
    CHECK(code_of([&] { (void)qsimflow::bind(c, short_p); }) == ErrorCode::ArityMismatch);
    CHECK(code_of([&] { (void)c.gates()[0].bound_angle(); }) == ErrorCode::Unbound);
}

TEST_CASE("append validation") {
    Circuit c(2, 1);
    CHECK_THROWS_AS(c.x(2), Error);
    CHECK_THROWS_AS(c.cnot(1, 1), Error);
    CHECK_THROWS_AS(c.rz(0, ParameterRef{1}), Error);
}

TEST_CASE("compose") {
    Circuit a(2, 1), b(2, 3), c(3);
    a.h(0);
    b.cnot(0, 1);
    const Circuit ab = compose(a, b);
    CHECK(ab.size() == 2);
    CHECK(ab.n_params() == 3);
    CHECK(code_of([&] { (void)compose(a, c); }) == ErrorCode::QubitCountMismatch);
}

TEST_CASE("generated unitary matches the two commuting exponentials") {
    // G = X0 Y1 - Y0 X1; the two strings commute
    const PauliSum gen = parse_pauli_sum("X0 Y1 - Y0 X1");
    const Matrix g = to_dense_matrix(gen, 2);
    for (double alpha : {0.0, 0.25, -0.7}) {
        const Gate gate = Gate::generated_unitary({0, 1}, g, alpha);
        const Mat expect = oracle::pauli_exp(PauliString{{0, Pauli::X}, {1, Pauli::Y}}, -alpha, 2) *
                           oracle::pauli_exp(PauliString{{0, Pauli::Y}, {1, Pauli::X}}, alpha, 2);
        CHECK((gate_matrix(gate) - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
    Matrix not_herm = g;
    not_herm(0, 1) += 1.0;
    CHECK_THROWS_AS((void)Gate::generated_unitary({0, 1}, not_herm, 0.1), Error);
    CHECK_THROWS_AS((void)Gate::raw_unitary({0}, Matrix::Ones(2, 2)), Error);
}

TEST_CASE("basis change rotates each Pauli onto Z") {
    const std::size_t n = 3;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            for (int c3 = 0; c3 < 4; ++c3) {
                std::vector<PauliString::Factor> f, z;
                const int letters[3] = {a, b, c3};
                for (std::size_t q = 0; q < n; ++q) {
                    if (letters[q]) {
                        f.emplace_back(q, static_cast<Pauli>(letters[q]));
                        z.emplace_back(q, Pauli::Z);
                    }
                }
                const PauliString p(f), zs(z);
                const Mat u = unitary_of(basis_change(p, n));
                const Mat rotated = u * oracle::string_matrix(p, n) * u.adjoint();
                CHECK((rotated - oracle::string_matrix(zs, n)).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("dump and parse round-trip") {
    Circuit c(3, 2);
    c.x(0).h(1).cnot(0, 2).cz(1, 2).sdg(0).rz(1, 0.25).rx(2, ParameterRef{0, 0.5, 0.1});
    c.append(Gate::generated_unitary({0, 1}, to_dense_matrix(parse_pauli_sum("X0 Y1 - Y0 X1"), 2),
                                     ParameterRef{1, 0.5, 0.0}));
    c.append(Gate::raw_unitary({2}, gate_matrix(Gate::single(GateKind::H, 0))));
    const std::string text = dump_circuit(c);
    const Circuit back = parse_circuit(text);
    CHECK(dump_circuit(back) == text);
    CHECK(back.n_params() == 2);
    const std::vector<double> p{0.3, -0.8};
    CHECK((unitary_of(qsimflow::bind(c, p)) - unitary_of(qsimflow::bind(back, p))).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("parse rejects malformed dumps") {
    for (const char *bad : {"", "qubits 2", "qubits 2 params 0\nFOO 0",
                            "qubits 2 params 0\nCNOT 0", "qubits 1 params 0\nX 3",
                            "qubits 1 params 1\nRZ 0 p1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS((void)parse_circuit(bad), Error);
    }
}

TEST_CASE("the documented two-qubit ansatz file") {
    const Circuit c = parse_circuit("qubits 2 params 1\nX 0\nUEXP 0 1 p0*0.5 ; X0 Y1 - Y0 X1\n");
    CHECK(c.n_params() == 1);
    CHECK(c.size() == 2);
    const std::vector<double> zero{0.0};
    // theta = 0 leaves |01> (qubit 0 flipped)
    const Mat u = unitary_of(qsimflow::bind(c, zero));
    CHECK(std::abs(u(1, 0) - C(1, 0)) < 1e-12);
}
