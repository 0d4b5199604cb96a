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

#pragma once

#include "qsimflow/error.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsimflow {

/// Typed value in a string-keyed parameter map (model parameters, workflow
/// configuration).
using ParamValue = std::variant<double, std::int64_t, std::string,
                                std::vector<double>, std::vector<std::int64_t>>;

/**
 * @brief String-keyed typed parameter map.
 *
 * Getters throw MissingParameter for absent keys and BadParameterType for
 * type mismatches; integers are accepted where reals are expected.
 */
class ParameterMap {
  public:
    ParameterMap() = default;
    ParameterMap(std::initializer_list<std::pair<const std::string, ParamValue>>
                     init)
        : values_(init) {}

    ParameterMap &set(std::string key, ParamValue value) {
        values_.insert_or_assign(std::move(key), std::move(value));
        return *this;
    }

    [[nodiscard]] bool contains(std::string_view key) const;
    [[nodiscard]] const std::map<std::string, ParamValue, std::less<>> &
    values() const noexcept {
        return values_;
    }

    [[nodiscard]] double get_real(std::string_view key) const;
    [[nodiscard]] std::int64_t get_int(std::string_view key) const;
    [[nodiscard]] std::string get_string(std::string_view key) const;
    [[nodiscard]] std::vector<double> get_real_list(std::string_view key) const;
    [[nodiscard]] std::vector<std::int64_t>
    get_int_list(std::string_view key) const;

    [[nodiscard]] double get_real_or(std::string_view key, double fallback) const;
    [[nodiscard]] std::int64_t get_int_or(std::string_view key,
                                          std::int64_t fallback) const;
    [[nodiscard]] std::string get_string_or(std::string_view key,
                                            std::string fallback) const;

    /// Throws `code` naming the first key not in `allowed`.
    void reject_unknown(std::initializer_list<std::string_view> allowed,
                        ErrorCode code) const;

  private:
    [[nodiscard]] const ParamValue &at(std::string_view key) const;

    std::map<std::string, ParamValue, std::less<>> values_;
};

} // namespace qsimflow
