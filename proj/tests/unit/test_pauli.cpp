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
#include "qsimflow/error.hpp"
#include "qsimflow/pauli.hpp"

#include <doctest.h>

#include <random>

using namespace qsimflow;

namespace {

std::vector<PauliString> all_two_qubit_strings() {
    std::vector<PauliString> out;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            std::vector<PauliString::Factor> f;
            if (a) {
                f.emplace_back(0, static_cast<Pauli>(a));
            }
            if (b) {
                f.emplace_back(1, static_cast<Pauli>(b));
            }
            out.emplace_back(std::move(f));
        }
    }
    return out;
}

PauliSum random_sum(std::mt19937_64 &rng, std::size_t n, std::size_t terms) {
    std::uniform_int_distribution<int> letter(0, 3);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    PauliSum s;
    for (std::size_t k = 0; k < terms; ++k) {
        std::vector<PauliString::Factor> f;
        for (std::size_t q = 0; q < n; ++q) {
            if (int l = letter(rng)) {
                f.emplace_back(q, static_cast<Pauli>(l));
            }
        }
        s.add(Complex(coeff(rng), coeff(rng)), PauliString(std::move(f)));
    }
    return s;
}

} // namespace

TEST_CASE("two-qubit multiplication table matches matrix products") {
    const auto strings = all_two_qubit_strings();
    REQUIRE(strings.size() == 16);
    for (const auto &a : strings) {
        for (const auto &b : strings) {
            const auto [phase, prod] = multiply(a, b);
            const oracle::Mat lhs = oracle::string_matrix(a, 2) * oracle::string_matrix(b, 2);
            const oracle::Mat rhs = phase * oracle::string_matrix(prod, 2);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
}

TEST_CASE("single-qubit products") {
    auto p = multiply({{0, Pauli::X}}, {{0, Pauli::Y}});
    CHECK(p.phase == Complex(0, 1));
    CHECK(p.product == PauliString{{0, Pauli::Z}});
    p = multiply({{0, Pauli::Y}}, {{0, Pauli::X}});
    CHECK(p.phase == Complex(0, -1));
    p = multiply({{0, Pauli::Z}}, {{0, Pauli::Z}});
    CHECK(p.phase == Complex(1, 0));
    CHECK(p.product.is_identity());
}

TEST_CASE("random 3-qubit sums survive simplify") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const PauliSum s = random_sum(rng, 3, 1 + trial % 9);
        const PauliSum t = simplify(s);
        const double d =
            (oracle::sum_matrix(s, 3) - oracle::sum_matrix(t, 3)).cwiseAbs().maxCoeff();
        CHECK(d < 1e-12);
        // canonical order, no duplicates
        for (std::size_t k = 1; k < t.terms().size(); ++k) {
            CHECK(t.terms()[k - 1].string < t.terms()[k].string);
        }
    }
}

TEST_CASE("product of sums matches matrix product") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const PauliSum a = random_sum(rng, 3, 4);
        const PauliSum b = random_sum(rng, 3, 3);
        const oracle::Mat expect = oracle::sum_matrix(a, 3) * oracle::sum_matrix(b, 3);
        CHECK((oracle::sum_matrix(a * b, 3) - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("simplify merges and drops cancelled terms") {
    PauliSum s;
    s.add(1.0, {{0, Pauli::X}});
    s.add(-1.0, {{0, Pauli::X}});
    s.add(2.0, {{1, Pauli::Z}});
    s.add(0.5, {{1, Pauli::Z}});
    const PauliSum t = simplify(s);
    REQUIRE(t.terms().size() == 1);
    CHECK(t.terms()[0].coefficient == Complex(2.5, 0));
    CHECK(simplify(simplify(s)).to_string() == t.to_string());
}

TEST_CASE("canonical ordering") {
    const PauliString id;
    const PauliString x0{{0, Pauli::X}};
    const PauliString z0{{0, Pauli::Z}};
    const PauliString x1{{1, Pauli::X}};
    const PauliString x0x1{{0, Pauli::X}, {1, Pauli::X}};
    CHECK(id < x0);
    CHECK(x0 < z0);
    CHECK(x0 < x0x1);
    CHECK(x0x1 < x1);
}

TEST_CASE("parse accepts the documented forms") {
    const PauliSum h = parse_pauli_sum(
        "5.907 - 2.1433 * X0 X1 - 2.1433 * Y0 Y1 + 0.21829 * Z0 - 6.125 * Z1");
    CHECK(h.terms().size() == 5);
    CHECK(h.is_hermitian());

    const PauliSum a = parse_pauli_sum("0.5 * X(0) * z(2)");
    REQUIRE(a.terms().size() == 1);
    CHECK(a.terms()[0].string == PauliString{{0, Pauli::X}, {2, Pauli::Z}});

    const PauliSum c = parse_pauli_sum("(0,1) * Y1");
    CHECK(c.terms()[0].coefficient == Complex(0, 1));
    CHECK_FALSE(c.is_hermitian());

    const PauliSum blank = parse_pauli_sum("   ");
    REQUIRE(blank.terms().size() == 1);
    CHECK(blank.terms()[0].string.is_identity());
    CHECK(blank.terms()[0].coefficient == Complex(1, 0));

    CHECK(simplify(parse_pauli_sum("X0 - X0")).empty());
}

TEST_CASE("to_string round-trips through the parser") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const PauliSum s = simplify(random_sum(rng, 4, 5));
        const PauliSum back = parse_pauli_sum(s.to_string());
        CHECK((oracle::sum_matrix(s, 4) - oracle::sum_matrix(back, 4)).cwiseAbs().maxCoeff() <
              1e-12);
    }
}

TEST_CASE("parse errors report ParseError") {
    for (const char *bad : {"X", "0.5 * Q1", "X0 X0", "1.0 *", "+ + X0", "(1,2"}) {
        CAPTURE(bad);
        try {
            (void)parse_pauli_sum(bad);
            FAIL("expected ParseError");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("hermiticity and diagonality") {
    CHECK(parse_pauli_sum("Z0 Z1 - 0.5").is_diagonal());
    CHECK_FALSE(parse_pauli_sum("Z0 + X1").is_diagonal());
    const PauliSum xy = parse_pauli_sum("X0") * parse_pauli_sum("Y0");
    CHECK_FALSE(xy.is_hermitian());
    CHECK_THROWS_AS((void)require_hermitian(xy, "op"), Error);
    CHECK(require_hermitian(parse_pauli_sum("X0 + (2,0) * Z1"), "op").is_hermitian());
}

TEST_CASE("masks") {
    const PauliString s{{0, Pauli::X}, {1, Pauli::Y}, {3, Pauli::Z}};
    CHECK(s.x_mask() == 0b0011);
    CHECK(s.z_mask() == 0b1010);
    CHECK(s.y_count() == 1);
    CHECK(s.min_qubits() == 4);
    CHECK(s.to_string() == "X0 Y1 Z3");
    CHECK_THROWS_AS((PauliString{{0, Pauli::X}, {0, Pauli::Z}}), Error);
}
