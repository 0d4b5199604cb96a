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

#include "qsimflow/circuit.hpp"
#include "qsimflow/dense.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qsimflow {

/// Measurement histogram. Keys are n-character bitstrings with qubit 0 as the
/// rightmost character.
struct ShotCounts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
};

struct BackendCapabilities {
    bool analytic_state = false;
    bool shots = false;
};

/// Portable 64-bit generator: splitmix64-seeded xoshiro256**. Output is
/// identical on every platform for the same seed.
class Xoshiro256 {
  public:
    using result_type = std::uint64_t;
    explicit Xoshiro256(std::uint64_t seed);

    result_type operator()() noexcept;
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

  private:
    std::uint64_t s_[4];
};

/// Sub-seed for the `ordinal`-th independent stream under `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t ordinal) noexcept;

/// Amplitude-level kernels shared by backends. All act in place.
namespace kernels {
void apply_gate(std::span<Complex> amps, const Gate &g);
} // namespace kernels

/**
 * @brief Abstract quantum execution target.
 *
 * A backend runs fully bound circuits either analytically (returning the
 * final state) or by sampling full-register computational-basis shots.
 */
class QuantumBackend {
  public:
    virtual ~QuantumBackend() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual BackendCapabilities capabilities() const = 0;

    /// Final state of `c` applied to |0...0>.
    [[nodiscard]] virtual DenseState run_statevector(const Circuit &c) const = 0;
    /// Final state of `c` applied to `initial`.
    [[nodiscard]] virtual DenseState run_statevector(const Circuit &c,
                                                     DenseState initial) const = 0;
    [[nodiscard]] virtual ShotCounts sample(const Circuit &c,
                                            std::uint64_t shots,
                                            std::uint64_t seed) const = 0;
};

class StatevectorBackend final : public QuantumBackend {
  public:
    static constexpr std::size_t kDefaultMaxQubits = 24;

    explicit StatevectorBackend(std::size_t max_qubits = kDefaultMaxQubits)
        : max_qubits_(max_qubits) {}

    [[nodiscard]] std::string name() const override { return "statevector"; }
    [[nodiscard]] BackendCapabilities capabilities() const override {
        return {true, true};
    }
    [[nodiscard]] std::size_t max_qubits() const noexcept { return max_qubits_; }

    [[nodiscard]] DenseState run_statevector(const Circuit &c) const override;
    [[nodiscard]] DenseState run_statevector(const Circuit &c,
                                             DenseState initial) const override;
    [[nodiscard]] ShotCounts sample(const Circuit &c, std::uint64_t shots,
                                    std::uint64_t seed) const override;

  private:
    void check(const Circuit &c) const;

    std::size_t max_qubits_;
};

/// Draw `shots` samples from |amplitudes|^2 with the given seed.
ShotCounts sample_state(const DenseState &state, std::uint64_t shots,
                        std::uint64_t seed);

/// Name -> backend factory. "statevector" is registered on first use; the
/// factory argument is the qubit cap.
class BackendRegistry {
  public:
    using Factory =
        std::function<std::shared_ptr<QuantumBackend>(std::size_t max_qubits)>;

    static BackendRegistry &instance();

    void register_backend(const std::string &name, Factory factory);
    [[nodiscard]] std::shared_ptr<QuantumBackend>
    create(const std::string &name,
           std::size_t max_qubits = StatevectorBackend::kDefaultMaxQubits) const;
    [[nodiscard]] bool contains(const std::string &name) const;
    [[nodiscard]] std::vector<std::string> names() const;

  private:
    BackendRegistry();

    mutable std::mutex mutex_;
    std::map<std::string, Factory> factories_;
};

} // namespace qsimflow
