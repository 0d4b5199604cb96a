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

#include "qsimflow/evaluator.hpp"
#include "qsimflow/error.hpp"

namespace qsimflow {

double term_expectation(const ShotCounts &counts, const PauliString &term) {
    if (counts.shots == 0 || counts.counts.empty()) {
        fail(ErrorCode::EmptyCounts, "no shots to estimate from");
    }
    double acc = 0.0;
    for (const auto &[bits, count] : counts.counts) {
        const std::size_t n = bits.size();
        if (term.min_qubits() > n) {
            fail(ErrorCode::DimensionMismatch,
                 "term " + term.to_string() + " outside " + std::to_string(n) +
                     "-bit outcomes");
        }
        int parity = 0;
        for (const auto &[q, p] : term.factors()) {
            parity ^= bits[n - 1 - q] == '1' ? 1 : 0;
        }
        acc += (parity ? -1.0 : 1.0) * static_cast<double>(count);
    }
    return acc / static_cast<double>(counts.shots);
}

double evaluate_state(const PauliSum &obs, const DenseState &state) {
    return exact_expectation(state, obs);
}

double evaluate(const PauliSum &obs, const Circuit &prep,
                const QuantumBackend &backend, const EvaluatorConfig &cfg) {
    const PauliSum herm = require_hermitian(obs, "observable");
    if (herm.min_qubits() > prep.n_qubits()) {
        fail(ErrorCode::DimensionMismatch,
             "observable acts outside the prepared register");
    }
    if (cfg.analytic()) {
        return exact_expectation(backend.run_statevector(prep), herm);
    }
    const auto &terms = herm.terms();
    std::vector<double> contributions(terms.size(), 0.0);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto &t = terms[k];
        const double c = t.coefficient.real();
        if (t.string.is_identity()) {
            contributions[k] = c;
            continue;
        }
        const Circuit rotated =
            compose(prep, basis_change(t.string, prep.n_qubits()));
        const ShotCounts counts =
            backend.sample(rotated, cfg.shots, derive_seed(cfg.seed, k));
        contributions[k] = c * term_expectation(counts, t.string);
    }
    double total = 0.0;
    for (double v : contributions) {
        total += v;
    }
    return total;
}

} // namespace qsimflow
