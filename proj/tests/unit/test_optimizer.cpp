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
#include "qsimflow/optimizer.hpp"

#include <doctest.h>

#include <cmath>

using namespace qsimflow;

namespace {

double quadratic(std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 2.0 * (x[1] + 0.5) * (x[1] + 0.5) + 3.0;
}

double rosenbrock(std::span<const double> x) {
    return 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]);
}

bool non_increasing(const std::vector<double> &h) {
    for (std::size_t i = 1; i < h.size(); ++i) {
        if (h[i] > h[i - 1]) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("minimizes a convex quadratic") {
    OptimizerSettings s;
    s.x0 = {0.0, 0.0};
    s.f_tol = 1e-12;
    s.max_evals = 2000;
    const auto r = nelder_mead(quadratic, s);
    CHECK(r.converged);
    CHECK(r.f_min == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(r.x_min[0] == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r.x_min[1] == doctest::Approx(-0.5).epsilon(1e-4));
    CHECK(r.history.size() == r.evaluations);
    CHECK(non_increasing(r.history));
    CHECK(r.history.back() == r.f_min);
}

TEST_CASE("Rosenbrock from the classic start") {
    OptimizerSettings s;
    s.x0 = {-1.2, 1.0};
    s.f_tol = 1e-14;
    s.max_evals = 5000;
    const auto r = nelder_mead(rosenbrock, s);
    CHECK(r.f_min < 1e-8);
    CHECK(r.x_min[0] == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("evaluation budget is respected") {
    OptimizerSettings s;
    s.x0 = {-1.2, 1.0};
    s.f_tol = 1e-14;
    s.max_evals = 25;
    std::size_t calls = 0;
    const auto r = nelder_mead(
        [&](std::span<const double> x) {
            ++calls;
            return rosenbrock(x);
        },
        s);
    CHECK_FALSE(r.converged);
    CHECK(calls == 25);
    CHECK(r.evaluations == 25);
    CHECK(r.history.size() == 25);
}

TEST_CASE("initial simplex steps") {
    std::vector<std::vector<double>> seen;
    OptimizerSettings s;
    s.x0 = {0.0, 2.0};
    s.max_evals = 3;
    (void)nelder_mead(
        [&](std::span<const double> x) {
            seen.emplace_back(x.begin(), x.end());
            return x[0] + x[1];
        },
        s);
    REQUIRE(seen.size() == 3);
    CHECK(seen[1][0] == doctest::Approx(0.00025));
    CHECK(seen[1][1] == doctest::Approx(2.0));
    CHECK(seen[2][0] == doctest::Approx(0.0));
    CHECK(seen[2][1] == doctest::Approx(2.05));
}

TEST_CASE("flat objective converges immediately") {
    OptimizerSettings s;
    s.x0 = {0.3};
    const auto r = nelder_mead([](std::span<const double>) { return -2.0; }, s);
    CHECK(r.converged);
    CHECK(r.evaluations == 2);
    CHECK(r.f_min == -2.0);
}

TEST_CASE("invalid settings") {
    OptimizerSettings s;
    CHECK_THROWS_AS((void)nelder_mead(quadratic, s), Error);
    s.x0 = {0.0, 0.0};
    s.f_tol = 0.0;
    CHECK_THROWS_AS((void)nelder_mead(quadratic, s), Error);
    s.f_tol = 1e-6;
    s.x0 = {NAN, 0.0};
    CHECK_THROWS_AS((void)nelder_mead(quadratic, s), Error);
}

TEST_CASE("optimizer registry") {
    auto &reg = OptimizerRegistry::instance();
    CHECK(reg.create("nelder-mead")->name() == "nelder-mead");
    try {
        (void)reg.create("cobyla");
        FAIL("expected UnknownOptimizer");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::UnknownOptimizer);
    }
}
