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
#include "qsimflow/validation.hpp"
#include "qsimflow/workflow.hpp"

#include <doctest.h>

#include <cmath>

using namespace qsimflow;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode{};
}

QuantumSimulationModel neel(std::size_t n, double g) {
    std::vector<std::int64_t> spins;
    for (std::size_t i = 0; i < n; ++i) {
        spins.push_back(static_cast<std::int64_t>(i % 2));
    }
    return HeisenbergModelBuilder().Jx(1).Jy(1).Jz(g).num_spins(n).initial_spins(spins).build();
}

} // namespace

TEST_CASE("series distances") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    const std::vector<double> b{1.5, 2.0, 1.0};
    CHECK(series_distance(a, b, Metric::MaxAbs) == doctest::Approx(2.0));
    CHECK(series_distance(a, b, Metric::Rmse) == doctest::Approx(std::sqrt((0.25 + 4.0) / 3)));
    CHECK(series_distance(a, b, Metric::FinalAbs) == doctest::Approx(2.0));
    CHECK(series_distance(a, a, Metric::Rmse) == 0.0);

    const std::vector<double> short_b{1.0};
    const std::vector<double> none;
    CHECK(code_of([&] { (void)series_distance(a, short_b, Metric::MaxAbs); }) ==
          ErrorCode::LengthMismatch);
    CHECK(code_of([&] { (void)series_distance(none, none, Metric::MaxAbs); }) ==
          ErrorCode::EmptySeries);
}

TEST_CASE("metric names") {
    for (Metric m : {Metric::MaxAbs, Metric::Rmse, Metric::FinalAbs}) {
        CHECK(parse_metric(to_string(m)) == m);
    }
    CHECK_THROWS_AS((void)parse_metric("l2"), Error);
}

TEST_CASE("acceptance threshold is inclusive") {
    WorkflowResult r;
    r.set("energy", -1.5);
    r.set("exp-vals", std::vector<double>{0.0, 0.25});
    ValidationCriteria c{Metric::FinalAbs, 0.5, -1.0};
    const auto tie = accept_results(r, "energy", c);
    CHECK(tie.distance == 0.5);
    CHECK(tie.accepted);
    c.threshold = 0.4999;
    CHECK_FALSE(accept_results(r, "energy", c).accepted);

    ValidationCriteria series{Metric::MaxAbs, 0.3, std::vector<double>{0.0, 0.0}};
    CHECK(accept_results(r, "exp-vals", series).accepted);
    CHECK(accept_results(r, "exp-vals", series).metric == "max-abs");

    CHECK(code_of([&] { (void)accept_results(r, "nope", series); }) == ErrorCode::MissingKey);
    CHECK(code_of([&] { (void)accept_results(r, "exp-vals", ValidationCriteria{}); }) ==
          ErrorCode::NoReference);
}

TEST_CASE("validate derives the exact reference") {
    auto td = get_workflow("td-evolution", WorkflowConfig{{"dt", 0.05}, {"steps", std::int64_t{20}}});
    const auto d = validate(*td, neel(4, 4.0), ValidationCriteria{Metric::MaxAbs, 0.1, {}});
    CHECK(d.accepted);
    CHECK(d.distance > 0.0);
    CHECK(d.distance < 0.1);

    const PauliSum edge = parse_pauli_sum("0.5 * Z0 Z1 - 0.5");
    auto qaoa = get_workflow("qaoa");
    const auto q = validate(*qaoa, QuantumSimulationModel(edge, edge, Circuit(2)),
                            ValidationCriteria{Metric::FinalAbs, 1e-2, {}});
    CHECK(q.accepted);
}

TEST_CASE("oracle-derived references stop at 12 qubits") {
    auto td = get_workflow("td-evolution", WorkflowConfig{{"dt", 0.05}, {"steps", std::int64_t{1}}});
    CHECK(code_of([&] {
              (void)validate(*td, neel(13, 1.0), ValidationCriteria{Metric::MaxAbs, 0.1, {}});
          }) == ErrorCode::OracleTooLarge);
    // an explicit reference still works past the bound
    const auto d = validate(*td, neel(13, 1.0),
                            ValidationCriteria{Metric::MaxAbs, 1.0, std::vector<double>{1.0}});
    CHECK(d.accepted);
}

TEST_CASE("reference validator through the workflow") {
    auto td = get_workflow("td-evolution", WorkflowConfig{{"dt", 0.1}, {"steps", std::int64_t{2}}});
    const ReferenceValidator strict("exp-vals", {Metric::MaxAbs, 1e-9, std::vector<double>{1.0, 1.0}});
    const auto d = td->validate(neel(2, 1.0), strict);
    CHECK_FALSE(d.accepted);
}

TEST_CASE("reference CSV parsing") {
    const auto v = parse_reference_csv("time,value\n0.1,0.9\n0.2, 0.75\n\n# note\n0.3,-1e-2\r\n");
    REQUIRE(v.size() == 3);
    CHECK(v[1] == 0.75);
    CHECK(v[2] == -0.01);
    CHECK(parse_reference_csv("1.5\n2.5\n").size() == 2);
    CHECK(code_of([&] { (void)parse_reference_csv("a,b\n1,x\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)read_reference_csv("/nonexistent/ref.csv"); }) == ErrorCode::Io);
}

TEST_CASE("validator registry") {
    auto &reg = ValidatorRegistry::instance();
    const auto v = reg.create("reference", ParameterMap{{"key", std::string("energy")},
                                                        {"metric", std::string("final-abs")},
                                                        {"threshold", 0.1},
                                                        {"reference", -1.0}});
    WorkflowResult r;
    r.set("energy", -0.95);
    CHECK(v->accept_results(r).accepted);
    CHECK(code_of([&] { (void)reg.create("chi2", ParameterMap{}); }) ==
          ErrorCode::UnknownValidator);
    CHECK(code_of([&] {
              (void)reg.create("reference", ParameterMap{{"key", std::string("e")},
                                                         {"threshold", 1.0},
                                                         {"bogus", 1.0}});
          }) == ErrorCode::InvalidConfig);
}
