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

#include "qsimflow/params.hpp"

#include <algorithm>

namespace qsimflow {

bool ParameterMap::contains(std::string_view key) const {
    return values_.find(key) != values_.end();
}

const ParamValue &ParameterMap::at(std::string_view key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        fail(ErrorCode::MissingParameter, std::string(key));
    }
    return it->second;
}

double ParameterMap::get_real(std::string_view key) const {
    const auto &v = at(key);
    if (const auto *d = std::get_if<double>(&v)) {
        return *d;
    }
    if (const auto *i = std::get_if<std::int64_t>(&v)) {
        return static_cast<double>(*i);
    }
    fail(ErrorCode::BadParameterType, std::string(key));
}

std::int64_t ParameterMap::get_int(std::string_view key) const {
    const auto &v = at(key);
    if (const auto *i = std::get_if<std::int64_t>(&v)) {
        return *i;
    }
    fail(ErrorCode::BadParameterType, std::string(key));
}

std::string ParameterMap::get_string(std::string_view key) const {
    const auto &v = at(key);
    if (const auto *s = std::get_if<std::string>(&v)) {
        return *s;
    }
    fail(ErrorCode::BadParameterType, std::string(key));
}

std::vector<double> ParameterMap::get_real_list(std::string_view key) const {
    const auto &v = at(key);
    if (const auto *d = std::get_if<std::vector<double>>(&v)) {
        return *d;
    }
    if (const auto *i = std::get_if<std::vector<std::int64_t>>(&v)) {
        return {i->begin(), i->end()};
    }
    fail(ErrorCode::BadParameterType, std::string(key));
}

std::vector<std::int64_t>
ParameterMap::get_int_list(std::string_view key) const {
    const auto &v = at(key);
    if (const auto *i = std::get_if<std::vector<std::int64_t>>(&v)) {
        return *i;
    }
    // an empty JSON array carries no element type
    if (const auto *d = std::get_if<std::vector<double>>(&v); d && d->empty()) {
        return {};
    }
    fail(ErrorCode::BadParameterType, std::string(key));
}

double ParameterMap::get_real_or(std::string_view key, double fallback) const {
    return contains(key) ? get_real(key) : fallback;
}

std::int64_t ParameterMap::get_int_or(std::string_view key,
                                      std::int64_t fallback) const {
    return contains(key) ? get_int(key) : fallback;
}

std::string ParameterMap::get_string_or(std::string_view key,
                                        std::string fallback) const {
    return contains(key) ? get_string(key) : std::move(fallback);
}

void ParameterMap::reject_unknown(std::initializer_list<std::string_view> allowed,
                                  ErrorCode code) const {
    for (const auto &[key, value] : values_) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(code, key);
        }
    }
}

} // namespace qsimflow
