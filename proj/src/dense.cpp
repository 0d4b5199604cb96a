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

#include "qsimflow/dense.hpp"
#include "qsimflow/error.hpp"

#include <bit>
#include <cmath>

namespace qsimflow {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_oracle_size(std::size_t n) {
    if (n > kOracleMaxQubits) {
        fail(ErrorCode::OracleTooLarge,
             std::to_string(n) + " qubits exceeds the dense oracle bound of " +
                 std::to_string(kOracleMaxQubits));
    }
}

void check_support(const PauliSum &s, std::size_t n, const char *what) {
    if (s.min_qubits() > n) {
        fail(ErrorCode::DimensionMismatch,
             std::string(what) + " acts on qubit " +
                 std::to_string(s.min_qubits() - 1) + " but the register has " +
                 std::to_string(n) + " qubits");
    }
}

// i^k for k mod 4
Complex i_power(std::size_t k) {
    switch (k % 4) {
    case 0:
        return {1, 0};
    case 1:
        return {0, 1};
    case 2:
        return {-1, 0};
    default:
        return {0, -1};
    }
}

Eigen::VectorXcd to_eigen(const DenseState &psi) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.dimension()));
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        v(static_cast<Eigen::Index>(i)) = psi[i];
    }
    return v;
}

} // namespace

DenseState::DenseState(std::size_t n_qubits)
    : n_(n_qubits), amps_(std::size_t{1} << n_qubits, Complex(0.0, 0.0)) {
    amps_[0] = 1.0;
}

DenseState::DenseState(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n_)) {
        fail(ErrorCode::DimensionMismatch,
             "state of " + std::to_string(amps_.size()) +
                 " amplitudes does not match " + std::to_string(n_) +
                 " qubits");
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        fail(ErrorCode::InvalidArgument, "state is not normalized");
    }
}

DenseState DenseState::basis_state(std::size_t n_qubits, std::uint64_t index) {
    DenseState s(n_qubits);
    if (index >= s.dimension()) {
        fail(ErrorCode::InvalidArgument, "basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double DenseState::norm() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

Matrix to_dense_matrix(const PauliSum &s, std::size_t n_qubits) {
    check_oracle_size(n_qubits);
    check_support(s, n_qubits, "operator");
    const std::size_t dim = std::size_t{1} << n_qubits;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
    // P|b> = i^{#Y} (-1)^{|b & zmask|} |b ^ xmask>
    for (const auto &t : s.terms()) {
        const std::uint64_t xm = t.string.x_mask();
        const std::uint64_t zm = t.string.z_mask();
        const Complex base = t.coefficient * i_power(t.string.y_count());
        for (std::uint64_t b = 0; b < dim; ++b) {
            const double sign = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(b ^ xm), static_cast<Eigen::Index>(b)) +=
                sign * base;
        }
    }
    return m;
}

double exact_ground_energy(const PauliSum &s, std::size_t n_qubits) {
    const PauliSum h = require_hermitian(s, "Hamiltonian");
    const Matrix m = to_dense_matrix(h, n_qubits);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ExactPropagator::ExactPropagator(const PauliSum &h, std::size_t n_qubits)
    : n_(n_qubits) {
    const PauliSum herm = require_hermitian(h, "Hamiltonian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(
        to_dense_matrix(herm, n_qubits));
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
}

DenseState ExactPropagator::evolve(const DenseState &psi, double t) const {
    if (psi.n_qubits() != n_) {
        fail(ErrorCode::DimensionMismatch,
             "state has " + std::to_string(psi.n_qubits()) +
                 " qubits, propagator has " + std::to_string(n_));
    }
    Eigen::VectorXcd coeffs = evecs_.adjoint() * to_eigen(psi);
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::exp(Complex(0.0, -evals_(k) * t));
    }
    const Eigen::VectorXcd out = evecs_ * coeffs;
    std::vector<Complex> amps(out.data(), out.data() + out.size());
    // re-normalize away eigensolver round-off so the DenseState invariant holds
    double nrm = 0.0;
    for (const auto &a : amps) {
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto &a : amps) {
        a /= nrm;
    }
    return DenseState(n_, std::move(amps));
}

DenseState exact_evolve(const PauliSum &h, const DenseState &psi, double t) {
    check_oracle_size(psi.n_qubits());
    check_support(h, psi.n_qubits(), "Hamiltonian");
    if (t == 0.0) {
        require_hermitian(h, "Hamiltonian");
        return psi;
    }
    return ExactPropagator(h, psi.n_qubits()).evolve(psi, t);
}

double exact_expectation(const DenseState &psi, const PauliSum &s) {
    const PauliSum obs = require_hermitian(s, "observable");
    check_support(obs, psi.n_qubits(), "observable");
    const auto amps = psi.amplitudes();
    Complex total = 0.0;
    for (const auto &t : obs.terms()) {
        const std::uint64_t xm = t.string.x_mask();
        const std::uint64_t zm = t.string.z_mask();
        const Complex base = i_power(t.string.y_count());
        Complex acc = 0.0;
        for (std::uint64_t b = 0; b < amps.size(); ++b) {
            const double sign = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
            acc += std::conj(amps[b ^ xm]) * amps[b] * sign;
        }
        total += t.coefficient * base * acc;
    }
    if (std::abs(total.imag()) > 1e-9) {
        fail(ErrorCode::NotHermitian,
             "expectation value has imaginary part " +
                 std::to_string(total.imag()));
    }
    return total.real();
}

std::vector<double> exact_expectation_series(const PauliSum &h,
                                             const PauliSum &obs,
                                             const DenseState &psi0,
                                             std::span<const double> times) {
    check_oracle_size(psi0.n_qubits());
    check_support(h, psi0.n_qubits(), "Hamiltonian");
    const ExactPropagator prop(h, psi0.n_qubits());
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        out.push_back(exact_expectation(prop.evolve(psi0, t), obs));
    }
    return out;
}

} // namespace qsimflow
