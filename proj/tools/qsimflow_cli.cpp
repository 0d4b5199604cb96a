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

// qsimflow: run a simulation workflow described by a JSON config.
//
//   qsimflow run --config cfg.json [--out result.csv] [--seed N]
//                [--shots N] [--backend NAME]
//
// Exit status: 0 success, 2 validation rejected the result, 1 any error.

#include "qsimflow/qsimflow.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct RunArgs {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::string> backend;
};

int report() {
    std::cerr << "qsimflow: error: " << qsf_last_error() << '\n';
    return 1;
}

int run(const RunArgs &args) {
    qsf_runspec *spec = nullptr;
    if (qsf_status st = qsf_runspec_load(args.config.c_str(), &spec); st != QSF_OK) {
        return report();
    }
    qsf_status st = QSF_OK;
    if (args.seed) {
        st = qsf_runspec_set_seed(spec, *args.seed);
    }
    if (st == QSF_OK && args.shots) {
        st = qsf_runspec_set_shots(spec, *args.shots);
    }
    if (st == QSF_OK && args.backend) {
        st = qsf_runspec_set_backend(spec, args.backend->c_str());
    }
    if (st == QSF_OK && args.out) {
        st = qsf_runspec_set_output(spec, args.out->c_str());
    }
    size_t out_len = 0;
    if (st == QSF_OK) {
        st = qsf_runspec_output(spec, nullptr, 0, &out_len);
    }
    qsf_run *result = nullptr;
    if (st == QSF_OK) {
        st = qsf_runspec_run(spec, &result);
    }
    qsf_runspec_free(spec);
    if (st != QSF_OK) {
        return report();
    }

    size_t needed = 0;
    qsf_run_csv(result, nullptr, 0, &needed);
    std::string csv(needed + 1, '\0');
    qsf_run_csv(result, csv.data(), csv.size(), &needed);
    csv.resize(needed);

    int validated = 0;
    qsf_validation v{};
    qsf_run_validation(result, &validated, &v);
    const int code = qsf_run_exit_code(result);
    qsf_run_free(result);

    // no file destination: the CSV goes to stdout
    if (out_len == 0) {
        std::fwrite(csv.data(), 1, csv.size(), stdout);
    }
    if (validated) {
        std::fprintf(stderr, "validation: distance=%.6g threshold=%.6g %s\n",
                     v.distance, v.threshold, v.accepted ? "accepted" : "rejected");
    }
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsimflow: hybrid quantum simulation workflows"};
    app.require_subcommand(1);

    RunArgs args;
    auto *run_cmd = app.add_subcommand("run", "Execute a workflow from a JSON config");
    run_cmd->add_option("--config,-c", args.config, "Path to the JSON config")
        ->required();
    run_cmd->add_option("--out,-o", args.out, "Write the CSV here");
    run_cmd->add_option("--seed", args.seed, "Override evaluator.seed");
    run_cmd->add_option("--shots", args.shots,
                        "Override evaluator.shots (0 selects analytic mode)");
    run_cmd->add_option("--backend", args.backend, "Override backend.name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    return run(args);
}
