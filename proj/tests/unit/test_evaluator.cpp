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

#include "qsimflow/error.hpp"
#include "qsimflow/evaluator.hpp"

#include <doctest.h>

#include <cmath>

using namespace qsimflow;

namespace {

Circuit entangler() {
    Circuit c(3);
    c.h(0).cnot(0, 1).ry(2, 0.9).rx(1, 0.3).cz(0, 2);
    return c;
}

} // namespace

TEST_CASE("term expectation from counts") {
    ShotCounts c;
    c.counts = {{"00", 30}, {"01", 10}, {"11", 60}};
    c.shots = 100;
    // Z0: bit 0 is the rightmost character
    CHECK(term_expectation(c, PauliString{{0, Pauli::Z}}) == doctest::Approx((30 - 10 - 60) / 100.0));
    CHECK(term_expectation(c, PauliString{{1, Pauli::Z}}) == doctest::Approx((30 + 10 - 60) / 100.0));
    CHECK(term_expectation(c, PauliString{{0, Pauli::X}, {1, Pauli::X}}) ==
          doctest::Approx((30 - 10 + 60) / 100.0));
    try {
        (void)term_expectation(ShotCounts{}, PauliString{{0, Pauli::Z}});
        FAIL("expected EmptyCounts");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::EmptyCounts);
    }
}

TEST_CASE("analytic evaluation equals the state expectation") {
    const PauliSum obs = parse_pauli_sum("0.5 * X0 X1 - 0.3 * Y1 Z2 + 1.2 * Z0 + 0.7");
    const StatevectorBackend be;
    const double e = evaluate(obs, entangler(), be, EvaluatorConfig::exact());
    CHECK(e == doctest::Approx(evaluate_state(obs, be.run_statevector(entangler()))));
}

TEST_CASE("shot estimates converge on the analytic value") {
    const PauliSum obs = parse_pauli_sum("0.5 * X0 X1 - 0.3 * Y1 Z2 + 1.2 * Z0 + 0.7");
    const StatevectorBackend be;
    const double exact = evaluate(obs, entangler(), be, EvaluatorConfig::exact());
    const double est = evaluate(obs, entangler(), be, EvaluatorConfig::sampled(200000, 9));
    // per-term sigma <= |c| / sqrt(shots)
    CHECK(std::abs(est - exact) < 5 * (0.5 + 0.3 + 1.2) / std::sqrt(200000.0));
}

TEST_CASE("shot estimates are deterministic per seed") {
    const PauliSum obs = parse_pauli_sum("X0 + Z1 Z2");
    const StatevectorBackend be;
    const double a = evaluate(obs, entangler(), be, EvaluatorConfig::sampled(1000, 4));
    const double b = evaluate(obs, entangler(), be, EvaluatorConfig::sampled(1000, 4));
    const double c = evaluate(obs, entangler(), be, EvaluatorConfig::sampled(1000, 5));
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("identity terms need no shots") {
    const StatevectorBackend be;
    CHECK(evaluate(parse_pauli_sum("2.5"), Circuit(1), be, EvaluatorConfig::sampled(10, 1)) ==
          2.5);
}

TEST_CASE("shots = 0 falls back to analytic") {
    EvaluatorConfig cfg{EvaluatorMode::Shots, 0, 3};
    CHECK(cfg.analytic());
    const StatevectorBackend be;
    CHECK(evaluate(parse_pauli_sum("Z0"), entangler(), be, cfg) ==
          doctest::Approx(evaluate(parse_pauli_sum("Z0"), entangler(), be, EvaluatorConfig::exact())));
}

TEST_CASE("plus-state Z estimate has binomial spread") {
    Circuit plus(1);
    plus.h(0);
    const StatevectorBackend be;
    const PauliSum z = parse_pauli_sum("Z0");
    double sum = 0.0, sum2 = 0.0;
    const int seeds = 200;
    for (int s = 0; s < seeds; ++s) {
        const double v = evaluate(z, plus, be, EvaluatorConfig::sampled(1024, s));
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / seeds;
    const double sd = std::sqrt(sum2 / seeds - mean * mean);
    CHECK(std::abs(mean) < 4 / std::sqrt(1024.0 * seeds));
    CHECK(sd == doctest::Approx(1 / std::sqrt(1024.0)).epsilon(0.15));
}

TEST_CASE("evaluation errors") {
    const StatevectorBackend be;
    CHECK_THROWS_AS((void)evaluate(parse_pauli_sum("(0,1) * Z0"), Circuit(1), be,
                                   EvaluatorConfig::exact()),
                    Error);
    CHECK_THROWS_AS((void)evaluate(parse_pauli_sum("Z4"), Circuit(2), be,
                                   EvaluatorConfig::exact()),
                    Error);
}
