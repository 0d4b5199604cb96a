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

#include "qsimflow/optimizer.hpp"
#include "qsimflow/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qsimflow {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
constexpr double kStep = 0.05;
constexpr double kZeroStep = 0.00025;

// Counts evaluations and tracks the best point seen so far.
struct BudgetedObjective {
    const Objective &f;
    std::size_t budget;
    std::size_t evals = 0;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    std::vector<double> history;

    [[nodiscard]] bool exhausted() const noexcept { return evals >= budget; }

    double operator()(const std::vector<double> &x) {
        const double v = f(x);
        ++evals;
        if (history.empty() || v < best) {
            best = v;
            best_x = x;
        }
        history.push_back(best);
        return v;
    }
};

} // namespace

OptimizationResult nelder_mead(const Objective &f,
                               const OptimizerSettings &settings) {
    if (!(settings.f_tol > 0.0)) {
        fail(ErrorCode::InvalidArgument, "f_tol must be positive");
    }
    if (settings.max_evals == 0) {
        fail(ErrorCode::InvalidArgument, "max_evals must be at least 1");
    }
    if (settings.x0.empty()) {
        fail(ErrorCode::InvalidArgument, "x0 must be non-empty");
    }
    for (double v : settings.x0) {
        if (!std::isfinite(v)) {
            fail(ErrorCode::InvalidArgument, "x0 must be finite");
        }
    }

    const std::size_t n = settings.x0.size();
    BudgetedObjective obj{f, settings.max_evals, 0,
                          std::numeric_limits<double>::infinity(), {}, {}};
    OptimizationResult result;

    auto finish = [&](bool converged) {
        result.x_min = obj.best_x;
        result.f_min = obj.best;
        result.history = obj.history;
        result.evaluations = obj.evals;
        result.converged = converged;
        return result;
    };

    std::vector<std::vector<double>> simplex(n + 1, settings.x0);
    std::vector<double> fv(n + 1, 0.0);
    fv[0] = obj(simplex[0]);
    for (std::size_t i = 0; i < n; ++i) {
        if (obj.exhausted()) {
            return finish(false);
        }
        auto &v = simplex[i + 1];
        v[i] += v[i] != 0.0 ? kStep : kZeroStep;
        fv[i + 1] = obj(v);
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n);
    auto point = [&](double coeff) {
        // centroid + coeff * (centroid - worst)
        const auto &worst = simplex[order[n]];
        std::vector<double> p(n);
        for (std::size_t j = 0; j < n; ++j) {
            p[j] = centroid[j] + coeff * (centroid[j] - worst[j]);
        }
        return p;
    };

    while (true) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const double best = fv[order[0]];
        const double worst = fv[order[n]];
        if (worst - best < settings.f_tol) {
            return finish(true);
        }
        if (obj.exhausted()) {
            return finish(false);
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto &v = simplex[order[i]];
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += v[j] / static_cast<double>(n);
            }
        }
        const double second_worst = fv[order[n - 1]];
        const std::size_t w = order[n];

        auto xr = point(kReflect);
        const double fr = obj(xr);
        if (fr < best) {
            if (obj.exhausted()) {
                simplex[w] = std::move(xr);
                fv[w] = fr;
                continue;
            }
            auto xe = point(kExpand);
            const double fe = obj(xe);
            if (fe < fr) {
                simplex[w] = std::move(xe);
                fv[w] = fe;
            } else {
                simplex[w] = std::move(xr);
                fv[w] = fr;
            }
            continue;
        }
        if (fr < second_worst) {
            simplex[w] = std::move(xr);
            fv[w] = fr;
            continue;
        }
        if (obj.exhausted()) {
            continue;
        }
        // contraction: outside if the reflected point beat the worst
        const bool outside = fr < worst;
        auto xc = point(outside ? kContract * kReflect : -kContract);
        const double fc = obj(xc);
        if (fc < (outside ? fr : worst)) {
            simplex[w] = std::move(xc);
            fv[w] = fc;
            continue;
        }
        // shrink toward the best vertex
        const auto &xb = simplex[order[0]];
        for (std::size_t i = 1; i <= n; ++i) {
            if (obj.exhausted()) {
                break;
            }
            auto &v = simplex[order[i]];
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = xb[j] + kShrink * (v[j] - xb[j]);
            }
            fv[order[i]] = obj(v);
        }
    }
}

OptimizationResult NelderMead::minimize(const Objective &f,
                                        const OptimizerSettings &settings) const {
    return nelder_mead(f, settings);
}

OptimizerRegistry::OptimizerRegistry() {
    factories_["nelder-mead"] = [] { return std::make_unique<NelderMead>(); };
}

OptimizerRegistry &OptimizerRegistry::instance() {
    static OptimizerRegistry registry;
    return registry;
}

void OptimizerRegistry::register_optimizer(const std::string &name,
                                           Factory factory) {
    if (name.empty()) {
        fail(ErrorCode::InvalidArgument, "optimizer name must be non-empty");
    }
    std::lock_guard lock(mutex_);
    factories_[name] = std::move(factory);
}

std::unique_ptr<Optimizer>
OptimizerRegistry::create(const std::string &name) const {
    std::lock_guard lock(mutex_);
    auto it = factories_.find(name);
    if (it == factories_.end()) {
        fail(ErrorCode::UnknownOptimizer, name);
    }
    return it->second();
}

bool OptimizerRegistry::contains(const std::string &name) const {
    std::lock_guard lock(mutex_);
    return factories_.contains(name);
}

} // namespace qsimflow
