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

#include "qsimflow/log.hpp"

#include <iostream>
#include <mutex>

namespace qsimflow {

namespace {

std::mutex &sink_mutex() {
    static std::mutex m;
    return m;
}

LogSink &sink_slot() {
    static LogSink sink;
    return sink;
}

} // namespace

LogSink set_log_sink(LogSink sink) {
    std::lock_guard lock(sink_mutex());
    LogSink prev = std::move(sink_slot());
    sink_slot() = std::move(sink);
    return prev;
}

void log_message(std::string_view msg) {
    std::lock_guard lock(sink_mutex());
    if (sink_slot()) {
        sink_slot()(msg);
    } else {
        std::cerr << "qsimflow: " << msg << '\n';
    }
}

} // namespace qsimflow
