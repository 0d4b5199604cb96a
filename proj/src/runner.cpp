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

#include "qsimflow/runner.hpp"
#include "format.hpp"
#include "qsimflow/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace qsimflow {

namespace {

using json = nlohmann::json;

std::string join(std::string_view block, std::string_view key) {
    return block.empty() ? std::string(key)
                         : std::string(block) + "." + std::string(key);
}

void check_keys(const json &obj, std::string_view block,
                std::initializer_list<std::string_view> allowed) {
    for (const auto &[k, v] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            fail(ErrorCode::UnknownKey, join(block, k));
        }
    }
}

const json &require(const json &obj, std::string_view block,
                    std::string_view key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(ErrorCode::MissingKey, join(block, key));
    }
    return *it;
}

const json &require_object(const json &obj, std::string_view block,
                           std::string_view key) {
    const json &v = require(obj, block, key);
    if (!v.is_object()) {
        fail(ErrorCode::TypeError, join(block, key));
    }
    return v;
}

std::string as_string(const json &v, const std::string &path) {
    if (!v.is_string()) {
        fail(ErrorCode::TypeError, path);
    }
    return v.get<std::string>();
}

double as_real(const json &v, const std::string &path) {
    if (!v.is_number()) {
        fail(ErrorCode::TypeError, path);
    }
    return v.get<double>();
}

std::uint64_t as_count(const json &v, const std::string &path) {
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    fail(ErrorCode::TypeError, path);
}

// JSON scalar or array -> ParamValue. Integral arrays stay integral.
ParamValue to_param(const json &v, const std::string &path) {
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (v.is_number_float()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        bool all_int = true;
        for (const auto &e : v) {
            if (!e.is_number()) {
                fail(ErrorCode::TypeError, path);
            }
            all_int = all_int && e.is_number_integer();
        }
        if (all_int && !v.empty()) {
            std::vector<std::int64_t> out;
            for (const auto &e : v) {
                out.push_back(e.get<std::int64_t>());
            }
            return out;
        }
        std::vector<double> out;
        for (const auto &e : v) {
            out.push_back(e.get<double>());
        }
        return out;
    }
    fail(ErrorCode::TypeError, path);
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path resolve(const std::filesystem::path &base,
                              const std::string &p) {
    const std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

ModelSpec parse_model(const json &m) {
    ModelSpec spec;
    if (auto it = m.find("type"); it != m.end()) {
        spec.name = as_string(*it, "model.type");
    } else if (m.contains("hamiltonian") || m.contains("observable")) {
        spec.name = "custom";
    } else {
        fail(ErrorCode::MissingKey, "model.type");
    }
    if (spec.name == "custom") {
        check_keys(m, "model", {"type", "hamiltonian", "observable",
                                "ansatz_file", "n_params", "num_qubits"});
        if (auto it = m.find("hamiltonian"); it != m.end()) {
            spec.hamiltonian = as_string(*it, "model.hamiltonian");
        }
        if (auto it = m.find("observable"); it != m.end()) {
            spec.observable = as_string(*it, "model.observable");
        }
        if (spec.hamiltonian.empty() && spec.observable.empty()) {
            fail(ErrorCode::MissingKey, "model.observable");
        }
        if (auto it = m.find("ansatz_file"); it != m.end()) {
            spec.ansatz_file = as_string(*it, "model.ansatz_file");
        }
        if (auto it = m.find("n_params"); it != m.end()) {
            spec.n_params = as_count(*it, "model.n_params");
        }
        if (auto it = m.find("num_qubits"); it != m.end()) {
            spec.num_qubits = as_count(*it, "model.num_qubits");
        }
        if (spec.ansatz_file.empty() && !spec.num_qubits) {
            fail(ErrorCode::MissingKey, "model.ansatz_file");
        }
        return spec;
    }
    for (const auto &[k, v] : m.items()) {
        if (k != "type") {
            spec.params.set(k, to_param(v, "model." + k));
        }
    }
    return spec;
}

ValidationSpec parse_validation(const json &v, const std::filesystem::path &base) {
    check_keys(v, "validation", {"metric", "threshold", "reference", "key"});
    ValidationSpec spec;
    if (auto it = v.find("metric"); it != v.end()) {
        const std::string name = as_string(*it, "validation.metric");
        try {
            spec.metric = parse_metric(name);
        } catch (const Error &) {
            fail(ErrorCode::TypeError, "validation.metric");
        }
    }
    spec.threshold = as_real(require(v, "validation", "threshold"),
                             "validation.threshold");
    if (auto it = v.find("key"); it != v.end()) {
        spec.key = as_string(*it, "validation.key");
    }
    const json &ref = require(v, "validation", "reference");
    if (ref.is_string()) {
        if (ref.get<std::string>() != "exact") {
            fail(ErrorCode::TypeError, "validation.reference");
        }
    } else if (ref.is_number()) {
        spec.reference = ref.get<double>();
    } else if (ref.is_array()) {
        std::vector<double> values;
        for (const auto &e : ref) {
            values.push_back(as_real(e, "validation.reference"));
        }
        spec.reference = std::move(values);
    } else if (ref.is_object()) {
        check_keys(ref, "validation.reference", {"csv"});
        const std::string csv = as_string(require(ref, "validation.reference", "csv"),
                                          "validation.reference.csv");
        spec.reference = read_reference_csv(resolve(base, csv).string());
    } else {
        fail(ErrorCode::TypeError, "validation.reference");
    }
    return spec;
}

void append_row(std::string &out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto &c : cells) {
        if (!first) {
            out += ',';
        }
        out += c;
        first = false;
    }
    out += '\n';
}

std::string fmt(double v) { return detail::format_double(v, 12); }

} // namespace

RunSpec parse_run_spec(std::string_view json_text,
                       const std::filesystem::path &base_dir) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error &e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, json_text.size());
        const auto line =
            1 + std::count(json_text.begin(), json_text.begin() + upto, '\n');
        fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " +
                                        e.what());
    }
    if (!root.is_object()) {
        fail(ErrorCode::TypeError, "<root>");
    }
    check_keys(root, "",
               {"model", "workflow", "backend", "evaluator", "validation", "output"});

    RunSpec spec;
    spec.base_dir = base_dir;
    spec.model = parse_model(require_object(root, "", "model"));

    const json &wf = require_object(root, "", "workflow");
    spec.workflow = as_string(require(wf, "workflow", "name"), "workflow.name");
    for (const auto &[k, v] : wf.items()) {
        if (k != "name") {
            spec.workflow_config.set(k, to_param(v, "workflow." + k));
        }
    }

    if (auto it = root.find("backend"); it != root.end()) {
        if (!it->is_object()) {
            fail(ErrorCode::TypeError, "backend");
        }
        check_keys(*it, "backend", {"name", "max_qubits"});
        if (auto n = it->find("name"); n != it->end()) {
            spec.backend = as_string(*n, "backend.name");
        }
        if (auto q = it->find("max_qubits"); q != it->end()) {
            spec.max_qubits = as_count(*q, "backend.max_qubits");
        }
    }

    if (auto it = root.find("evaluator"); it != root.end()) {
        if (!it->is_object()) {
            fail(ErrorCode::TypeError, "evaluator");
        }
        check_keys(*it, "evaluator", {"mode", "shots", "seed"});
        if (auto s = it->find("shots"); s != it->end()) {
            spec.evaluator.shots = as_count(*s, "evaluator.shots");
        }
        if (auto s = it->find("seed"); s != it->end()) {
            spec.evaluator.seed = as_count(*s, "evaluator.seed");
        }
        spec.evaluator.mode = spec.evaluator.shots > 0 ? EvaluatorMode::Shots
                                                       : EvaluatorMode::Analytic;
        if (auto m = it->find("mode"); m != it->end()) {
            const std::string mode = as_string(*m, "evaluator.mode");
            if (mode == "analytic") {
                spec.evaluator.mode = EvaluatorMode::Analytic;
            } else if (mode == "shots") {
                spec.evaluator.mode = EvaluatorMode::Shots;
            } else {
                fail(ErrorCode::TypeError, "evaluator.mode");
            }
        }
    }

    if (auto it = root.find("validation"); it != root.end()) {
        if (!it->is_object()) {
            fail(ErrorCode::TypeError, "validation");
        }
        spec.validation = parse_validation(*it, base_dir);
    }

    if (auto it = root.find("output"); it != root.end()) {
        if (!it->is_object()) {
            fail(ErrorCode::TypeError, "output");
        }
        check_keys(*it, "output", {"csv"});
        if (auto c = it->find("csv"); c != it->end()) {
            spec.output = resolve(base_dir, as_string(*c, "output.csv")).string();
        }
    }

    // named models are cheap to build, so their parameters are checked here
    if (spec.model.name != "custom") {
        (void)build_model(spec);
    }
    return spec;
}

RunSpec load_run_spec(const std::filesystem::path &path) {
    return parse_run_spec(read_file(path), path.parent_path());
}

QuantumSimulationModel build_model(const RunSpec &spec) {
    const ModelSpec &m = spec.model;
    if (m.name != "custom") {
        try {
            return create_named_model(m.name, m.params);
        } catch (const Error &e) {
            switch (e.code()) {
            case ErrorCode::UnknownKey:
                fail(ErrorCode::UnknownKey, "model." + e.detail());
            case ErrorCode::MissingParameter:
                fail(ErrorCode::MissingKey, "model." + e.detail());
            case ErrorCode::BadParameterType:
                fail(ErrorCode::TypeError, "model." + e.detail());
            default:
                throw;
            }
        }
    }

    auto parse_op = [](const std::string &text, const char *path) {
        try {
            return parse_pauli_sum(text);
        } catch (const Error &e) {
            fail(e.code(), std::string(path) + ": " + e.detail());
        }
    };
    const PauliSum hamiltonian =
        parse_op(m.hamiltonian.empty() ? m.observable : m.hamiltonian,
                 "model.hamiltonian");
    const PauliSum observable =
        m.observable.empty() ? hamiltonian : parse_op(m.observable, "model.observable");

    Circuit ansatz(m.num_qubits.value_or(1), 0);
    if (!m.ansatz_file.empty()) {
        ansatz = parse_circuit(read_file(resolve(spec.base_dir, m.ansatz_file)));
        if (m.num_qubits && *m.num_qubits != ansatz.n_qubits()) {
            fail(ErrorCode::QubitCountMismatch, "model.num_qubits");
        }
    }
    CustomModelBuilder b;
    b.ansatz(ansatz).observable(observable).hamiltonian(hamiltonian);
    b.n_params(m.n_params.value_or(ansatz.n_params()));
    return b.build();
}

std::string format_csv(const WorkflowResult &result) {
    std::string out;
    if (result.contains("exp-vals")) {
        const auto &vals = result.get<std::vector<double>>("exp-vals");
        const auto &times = result.get<std::vector<double>>("times");
        append_row(out, {"step", "time", "exp_val"});
        for (std::size_t k = 0; k < vals.size(); ++k) {
            append_row(out, {std::to_string(k + 1), fmt(times[k]), fmt(vals[k])});
        }
        return out;
    }
    if (result.contains("energy-history")) {
        out += "# energy=" + fmt(result.get<double>("energy")) + " opt-params=";
        const auto &p = result.get<std::vector<double>>("opt-params");
        for (std::size_t i = 0; i < p.size(); ++i) {
            out += (i ? ";" : "") + fmt(p[i]);
        }
        out += '\n';
        append_row(out, {"eval", "best_energy"});
        const auto &h = result.get<std::vector<double>>("energy-history");
        for (std::size_t i = 0; i < h.size(); ++i) {
            append_row(out, {std::to_string(i + 1), fmt(h[i])});
        }
        return out;
    }
    // unknown workflow shape: one key,value row per scalar entry
    append_row(out, {"key", "value"});
    for (const auto &[k, v] : result.values()) {
        std::string cell;
        if (const auto *d = std::get_if<double>(&v)) {
            cell = fmt(*d);
        } else if (const auto *i = std::get_if<std::int64_t>(&v)) {
            cell = std::to_string(*i);
        } else if (const auto *b = std::get_if<bool>(&v)) {
            cell = *b ? "true" : "false";
        } else if (const auto *s = std::get_if<std::string>(&v)) {
            cell = *s;
        } else {
            const auto &vec = std::get<std::vector<double>>(v);
            for (std::size_t i = 0; i < vec.size(); ++i) {
                cell += (i ? ";" : "") + fmt(vec[i]);
            }
        }
        append_row(out, {k, cell});
    }
    return out;
}

RunOutcome execute_run(const RunSpec &spec) {
    const QuantumSimulationModel model = build_model(spec);
    ExecutionContext ctx;
    ctx.backend = BackendRegistry::instance().create(spec.backend, spec.max_qubits);
    ctx.evaluator = spec.evaluator;
    auto workflow = get_workflow(spec.workflow, spec.workflow_config, ctx);

    RunOutcome outcome;
    outcome.workflow = spec.workflow;
    if (spec.validation) {
        const ValidationSpec &v = *spec.validation;
        std::string key = v.key.empty() ? workflow->primary_key() : v.key;
        ValidationCriteria criteria{v.metric, v.threshold, v.reference};
        if (std::holds_alternative<std::monostate>(criteria.reference)) {
            auto ref = workflow->exact_reference(model);
            if (!ref || ref->key != key) {
                fail(ErrorCode::NoReference, key);
            }
            criteria.reference = std::move(ref->value);
        }
        outcome.result = workflow->execute(model);
        outcome.decision = accept_results(outcome.result, key, criteria);
    } else {
        outcome.result = workflow->execute(model);
    }
    outcome.csv = format_csv(outcome.result);

    if (!spec.output.empty()) {
        std::ofstream out(spec.output, std::ios::binary | std::ios::trunc);
        if (!out) {
            fail(ErrorCode::Io, "cannot write " + spec.output);
        }
        out << outcome.csv;
        if (!out) {
            fail(ErrorCode::Io, "cannot write " + spec.output);
        }
    }
    return outcome;
}

} // namespace qsimflow
