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

// Reference constructions for tests, built directly from 2x2 matrices and
// Kronecker products without going through the library's own kernels.

#pragma once

#include "qsimflow/pauli.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat pauli(int p) {
    Mat m(2, 2);
    switch (p) {
    case 1:
        m << 0, 1, 1, 0;
        break;
    case 2:
        m << 0, C(0, -1), C(0, 1), 0;
        break;
    case 3:
        m << 1, 0, 0, -1;
        break;
    default:
        m << 1, 0, 0, 1;
        break;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// qubit 0 is the least-significant bit, so it is the rightmost factor
inline Mat string_matrix(const qsimflow::PauliString &s, std::size_t n) {
    Mat m = Mat::Identity(1, 1);
    for (std::size_t q = n; q-- > 0;) {
        m = kron(m, pauli(s.at(q)));
    }
    return m;
}

inline Mat sum_matrix(const qsimflow::PauliSum &s, std::size_t n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Mat m = Mat::Zero(d, d);
    for (const auto &t : s.terms()) {
        m += t.coefficient * string_matrix(t.string, n);
    }
    return m;
}

// single-qubit gate g on qubit q of n
inline Mat embed1(const Mat &g, std::size_t q, std::size_t n) {
    Mat m = Mat::Identity(1, 1);
    for (std::size_t k = n; k-- > 0;) {
        m = kron(m, k == q ? g : Mat(Mat::Identity(2, 2)));
    }
    return m;
}

// CNOT from projectors: |0><0|_c ⊗ I + |1><1|_c ⊗ X_t
inline Mat cnot(std::size_t c, std::size_t t, std::size_t n) {
    Mat p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    Mat a = Mat::Identity(1, 1), b = Mat::Identity(1, 1);
    for (std::size_t k = n; k-- > 0;) {
        const Mat id = Mat::Identity(2, 2);
        a = kron(a, k == c ? p0 : id);
        b = kron(b, k == c ? p1 : (k == t ? pauli(1) : id));
    }
    return a + b;
}

// exp(-i theta P) for a Pauli string P (P^2 = I)
inline Mat pauli_exp(const qsimflow::PauliString &s, double theta, std::size_t n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    return std::cos(theta) * Mat::Identity(d, d) -
           C(0, 1) * std::sin(theta) * string_matrix(s, n);
}

// equal up to a global phase
inline double phase_distance(const Mat &a, const Mat &b) {
    C overlap = (a.adjoint() * b).trace();
    const C phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : C(1);
    return (a * phase - b).cwiseAbs().maxCoeff();
}

} // namespace oracle
