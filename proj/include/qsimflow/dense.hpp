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

// Dense state vectors and the exact (dense-matrix) oracle. Everything in here
// is bounded by kOracleMaxQubits and is meant for validation and tests, not
// for the production execution path.

#pragma once

#include "qsimflow/pauli.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace qsimflow {

using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kOracleMaxQubits = 12;

/// Normalized amplitude vector over n qubits. std::vector<std::complex<double>>
/// is laid out as interleaved (re, im) doubles, which is what the statevector
/// kernels operate on.
class DenseState {
  public:
    DenseState() = default;
    /// |0...0>
    explicit DenseState(std::size_t n_qubits);
    /// Takes ownership of amplitudes; size must be 2^n and norm 1 within
    /// 1e-10.
    DenseState(std::size_t n_qubits, std::vector<Complex> amplitudes);

    static DenseState basis_state(std::size_t n_qubits, std::uint64_t index);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }
    [[nodiscard]] double norm() const;

  private:
    std::size_t n_ = 0;
    std::vector<Complex> amps_;
};

/// Σ c_k ⊗ P_k as a dense 2^n × 2^n matrix. Throws OracleTooLarge for
/// n > kOracleMaxQubits, DimensionMismatch if a term touches qubit >= n.
Matrix to_dense_matrix(const PauliSum &s, std::size_t n_qubits);

/// Smallest eigenvalue of the (Hermitian) dense matrix of `s`.
double exact_ground_energy(const PauliSum &s, std::size_t n_qubits);

/// exp(-iHt)|psi> via eigendecomposition of H.
DenseState exact_evolve(const PauliSum &h, const DenseState &psi, double t);

/// <psi|S|psi> for Hermitian S. Computed matrix-free from the Pauli masks, so
/// it is not bounded by the oracle size.
double exact_expectation(const DenseState &psi, const PauliSum &s);

/**
 * @brief Cached eigendecomposition of a Hamiltonian for evolving one state to
 * many times.
 *
 * exact_evolve() rebuilds the decomposition on each call; reference series
 * over hundreds of time points should use this instead.
 */
class ExactPropagator {
  public:
    ExactPropagator(const PauliSum &h, std::size_t n_qubits);

    [[nodiscard]] DenseState evolve(const DenseState &psi, double t) const;
    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] const Eigen::VectorXd &eigenvalues() const noexcept {
        return evals_;
    }

  private:
    std::size_t n_;
    Eigen::VectorXd evals_;
    Matrix evecs_;
};

/// ⟨psi(t_k)|obs|psi(t_k)⟩ at each time, from the exact propagator.
std::vector<double> exact_expectation_series(const PauliSum &h,
                                             const PauliSum &obs,
                                             const DenseState &psi0,
                                             std::span<const double> times);

} // namespace qsimflow
