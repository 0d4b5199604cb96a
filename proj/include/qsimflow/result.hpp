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
#include "qsimflow/params.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsimflow {

using ResultValue = std::variant<double, std::int64_t, bool, std::string,
                                 std::vector<double>>;

/// Keyed workflow output. Stable keys: "exp-vals", "times" (td-evolution);
/// "energy", "opt-params", "energy-history" (vqe, qaoa).
class WorkflowResult {
  public:
    WorkflowResult &set(std::string key, ResultValue value) {
        values_.insert_or_assign(std::move(key), std::move(value));
        return *this;
    }

    [[nodiscard]] bool contains(std::string_view key) const {
        return values_.find(key) != values_.end();
    }

    template <class T> [[nodiscard]] const T &get(std::string_view key) const {
        auto it = values_.find(key);
        if (it == values_.end()) {
            fail(ErrorCode::MissingKey, std::string(key));
        }
        if (const auto *v = std::get_if<T>(&it->second)) {
            return *v;
        }
        fail(ErrorCode::TypeError, std::string(key));
    }

    [[nodiscard]] const ResultValue &at(std::string_view key) const {
        auto it = values_.find(key);
        if (it == values_.end()) {
            fail(ErrorCode::MissingKey, std::string(key));
        }
        return it->second;
    }

    [[nodiscard]] const std::map<std::string, ResultValue, std::less<>> &
    values() const noexcept {
        return values_;
    }

    /// Configuration the producing workflow ran with.
    [[nodiscard]] const ParameterMap &config() const noexcept { return config_; }
    void set_config(ParameterMap cfg) { config_ = std::move(cfg); }

  private:
    std::map<std::string, ResultValue, std::less<>> values_;
    ParameterMap config_;
};

} // namespace qsimflow
