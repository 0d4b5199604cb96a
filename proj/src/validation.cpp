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

#include "qsimflow/validation.hpp"
#include "qsimflow/error.hpp"
#include "qsimflow/workflow.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qsimflow {

std::string_view to_string(Metric m) noexcept {
    switch (m) {
    case Metric::MaxAbs:
        return "max-abs";
    case Metric::Rmse:
        return "rmse";
    case Metric::FinalAbs:
        return "final-abs";
    }
    return "?";
}

Metric parse_metric(std::string_view name) {
    if (name == "max-abs") {
        return Metric::MaxAbs;
    }
    if (name == "rmse") {
        return Metric::Rmse;
    }
    if (name == "final-abs") {
        return Metric::FinalAbs;
    }
    fail(ErrorCode::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

double series_distance(std::span<const double> a, std::span<const double> b,
                       Metric metric) {
    if (a.size() != b.size()) {
        fail(ErrorCode::LengthMismatch, std::to_string(a.size()) + " vs " +
                                            std::to_string(b.size()));
    }
    if (a.empty()) {
        fail(ErrorCode::EmptySeries, "nothing to compare");
    }
    switch (metric) {
    case Metric::MaxAbs: {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            d = std::max(d, std::abs(a[i] - b[i]));
        }
        return d;
    }
    case Metric::Rmse: {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += (a[i] - b[i]) * (a[i] - b[i]);
        }
        return std::sqrt(s / static_cast<double>(a.size()));
    }
    case Metric::FinalAbs:
        return std::abs(a.back() - b.back());
    }
    return 0.0;
}

namespace {

std::vector<double> as_series(const ResultValue &v, std::string_view key) {
    if (const auto *d = std::get_if<double>(&v)) {
        return {*d};
    }
    if (const auto *i = std::get_if<std::int64_t>(&v)) {
        return {static_cast<double>(*i)};
    }
    if (const auto *s = std::get_if<std::vector<double>>(&v)) {
        return *s;
    }
    fail(ErrorCode::TypeError, std::string(key));
}

std::vector<double> as_series(const Reference &r) {
    if (const auto *d = std::get_if<double>(&r)) {
        return {*d};
    }
    if (const auto *s = std::get_if<std::vector<double>>(&r)) {
        return *s;
    }
    fail(ErrorCode::NoReference, "criteria carry no reference values");
}

} // namespace

ValidationDecision accept_results(const WorkflowResult &result,
                                  std::string_view key,
                                  const ValidationCriteria &criteria) {
    const auto got = as_series(result.at(key), key);
    const auto ref = as_series(criteria.reference);
    ValidationDecision d;
    d.distance = series_distance(got, ref, criteria.metric);
    d.threshold = criteria.threshold;
    d.accepted = d.distance <= criteria.threshold;
    d.metric = std::string(to_string(criteria.metric));
    return d;
}

ReferenceValidator::ReferenceValidator(std::string key,
                                       ValidationCriteria criteria)
    : key_(std::move(key)), criteria_(std::move(criteria)) {
    if (key_.empty()) {
        fail(ErrorCode::InvalidArgument, "validator key must be non-empty");
    }
}

ValidationDecision
ReferenceValidator::accept_results(const WorkflowResult &result) const {
    return qsimflow::accept_results(result, key_, criteria_);
}

ValidationDecision validate(QuantumSimulationWorkflow &workflow,
                            const QuantumSimulationModel &model,
                            const ValidationCriteria &criteria,
                            std::string key) {
    if (key.empty()) {
        key = workflow.primary_key();
    }
    ValidationCriteria resolved = criteria;
    if (std::holds_alternative<std::monostate>(resolved.reference)) {
        auto ref = workflow.exact_reference(model);
        if (!ref || ref->key != key) {
            fail(ErrorCode::NoReference,
                 workflow.name() + " has no exact reference for '" + key + "'");
        }
        resolved.reference = std::move(ref->value);
    }
    return workflow.validate(model, ReferenceValidator(key, resolved));
}

std::vector<double> parse_reference_csv(std::string_view text) {
    std::vector<double> values;
    std::size_t line_no = 0;
    bool first = true;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        const auto comma = line.rfind(',');
        std::string field =
            comma == std::string::npos ? line.substr(start) : line.substr(comma + 1);
        const auto b = field.find_first_not_of(" \t");
        const auto e = field.find_last_not_of(" \t");
        field = b == std::string::npos ? std::string{} : field.substr(b, e - b + 1);
        double v = 0.0;
        const auto *end = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(field.data(), end, v);
        if (ec != std::errc{} || ptr != end) {
            if (first) {
                first = false;
                continue; // header
            }
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                            ": bad value '" + field + "'");
        }
        first = false;
        values.push_back(v);
    }
    return values;
}

std::vector<double> read_reference_csv(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_reference_csv(ss.str());
}

ValidatorRegistry::ValidatorRegistry() {
    factories_["reference"] = [](const ParameterMap &p) {
        p.reject_unknown({"key", "metric", "threshold", "reference"},
                         ErrorCode::InvalidConfig);
        ValidationCriteria c;
        c.metric = parse_metric(p.get_string_or("metric", "max-abs"));
        c.threshold = p.get_real("threshold");
        if (p.contains("reference")) {
            const auto &v = p.values().find("reference")->second;
            if (std::holds_alternative<double>(v) ||
                std::holds_alternative<std::int64_t>(v)) {
                c.reference = p.get_real("reference");
            } else {
                c.reference = p.get_real_list("reference");
            }
        }
        return std::make_unique<ReferenceValidator>(p.get_string("key"), c);
    };
}

ValidatorRegistry &ValidatorRegistry::instance() {
    static ValidatorRegistry registry;
    return registry;
}

void ValidatorRegistry::register_validator(const std::string &name,
                                           Factory factory) {
    if (name.empty() || !factory) {
        fail(ErrorCode::InvalidArgument, "validator name and factory required");
    }
    std::lock_guard lock(mutex_);
    factories_[name] = std::move(factory);
}

std::unique_ptr<QuantumValidationModel>
ValidatorRegistry::create(const std::string &name,
                          const ParameterMap &params) const {
    Factory factory;
    {
        std::lock_guard lock(mutex_);
        auto it = factories_.find(name);
        if (it == factories_.end()) {
            fail(ErrorCode::UnknownValidator, name);
        }
        factory = it->second;
    }
    return factory(params);
}

bool ValidatorRegistry::contains(const std::string &name) const {
    std::lock_guard lock(mutex_);
    return factories_.contains(name);
}

} // namespace qsimflow
