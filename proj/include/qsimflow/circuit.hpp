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

#include "qsimflow/dense.hpp"
#include "qsimflow/pauli.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsimflow {

enum class GateKind {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    Rx,
    Ry,
    Rz,
    CNOT,
    CZ,
    RawUnitary,
};

std::string_view to_string(GateKind kind) noexcept;

/// Bound angle = scale * params[index] + offset.
struct ParameterRef {
    std::size_t index = 0;
    double scale = 1.0;
    double offset = 0.0;

    friend bool operator==(const ParameterRef &, const ParameterRef &) = default;
};

using Angle = std::variant<double, ParameterRef>;

/**
 * @brief One gate of the circuit IR.
 *
 * Rotation gates (Rx/Ry/Rz) use the convention R_P(a) = exp(-i a P / 2).
 * For CNOT, targets = {control, target}.
 *
 * A RawUnitary acts on k targets with a 2^k x 2^k matrix whose row/column
 * index uses targets[0] as its least-significant bit. It is either fixed
 * (`matrix` set) or generated: matrix = exp(i * angle * generator), with a
 * Hermitian generator, realized when the angle is bound.
 */
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<std::size_t> targets;
    Angle angle = 0.0;
    Matrix matrix;    // RawUnitary only; empty while unbound
    Matrix generator; // RawUnitary only; empty for fixed matrices

    [[nodiscard]] bool is_rotation() const noexcept {
        return kind == GateKind::Rx || kind == GateKind::Ry ||
               kind == GateKind::Rz;
    }
    [[nodiscard]] bool is_bound() const noexcept {
        return std::holds_alternative<double>(angle);
    }
    [[nodiscard]] bool is_parameterized() const noexcept {
        return !is_bound();
    }
    /// Numeric angle; throws Unbound when the angle is a ParameterRef.
    [[nodiscard]] double bound_angle() const;

    static Gate single(GateKind kind, std::size_t q);
    static Gate rotation(GateKind kind, std::size_t q, Angle angle);
    static Gate controlled(GateKind kind, std::size_t control,
                           std::size_t target);
    static Gate raw_unitary(std::vector<std::size_t> targets, Matrix matrix);
    static Gate generated_unitary(std::vector<std::size_t> targets,
                                  Matrix hermitian_generator, Angle angle);
};

/// 2x2 (or 4x4 for CNOT/CZ, 2^k for RawUnitary) matrix of a bound gate in its
/// local basis. For CNOT the control is local bit 0.
Matrix gate_matrix(const Gate &g);

/// Ordered gate list over an n-qubit register with n_params free parameters.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t n_qubits, std::size_t n_params = 0);

    Circuit &append(Gate g);

    // convenience builders
    Circuit &x(std::size_t q) { return append(Gate::single(GateKind::X, q)); }
    Circuit &y(std::size_t q) { return append(Gate::single(GateKind::Y, q)); }
    Circuit &z(std::size_t q) { return append(Gate::single(GateKind::Z, q)); }
    Circuit &h(std::size_t q) { return append(Gate::single(GateKind::H, q)); }
    Circuit &s(std::size_t q) { return append(Gate::single(GateKind::S, q)); }
    Circuit &sdg(std::size_t q) {
        return append(Gate::single(GateKind::Sdg, q));
    }
    Circuit &rx(std::size_t q, Angle a) {
        return append(Gate::rotation(GateKind::Rx, q, a));
    }
    Circuit &ry(std::size_t q, Angle a) {
        return append(Gate::rotation(GateKind::Ry, q, a));
    }
    Circuit &rz(std::size_t q, Angle a) {
        return append(Gate::rotation(GateKind::Rz, q, a));
    }
    Circuit &cnot(std::size_t c, std::size_t t) {
        return append(Gate::controlled(GateKind::CNOT, c, t));
    }
    Circuit &cz(std::size_t a, std::size_t b) {
        return append(Gate::controlled(GateKind::CZ, a, b));
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t n_params() const noexcept { return n_params_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool is_bound() const noexcept { return n_params_ == 0; }
    [[nodiscard]] std::size_t parameter_ref_count() const noexcept;

  private:
    std::size_t n_qubits_ = 0;
    std::size_t n_params_ = 0;
    std::vector<Gate> gates_;
};

/// Substitute params into every ParameterRef. Result has n_params = 0.
Circuit bind(const Circuit &c, std::span<const double> params);

/// Gates of a followed by gates of b. n_params of the result is the max of
/// the two; the caller is responsible for disjoint parameter numbering.
Circuit compose(const Circuit &a, const Circuit &b);

/// Rotation taking `term` to the Z-string on the same support: H for X,
/// Sdg then H for Y, nothing for Z.
Circuit basis_change(const PauliString &term, std::size_t n_qubits);

inline constexpr std::size_t kUnitaryOracleMaxQubits = 10;

/// Dense unitary of a bound circuit (application order: later gates multiply
/// on the left).
Matrix unitary_of(const Circuit &c);

/// Debug dump: a header "qubits N params K" then one gate per line, e.g.
/// "RZ 3 1.5708", "RZ 1 p0*0.5+0.25", "CNOT 0 1",
/// "UNITARY 0 1 ; re,im re,im ..." (row-major),
/// "UEXP 0 1 p0*0.5 ; X0 Y1 - Y0 X1" (generator as local Pauli text).
std::string dump_circuit(const Circuit &c);
Circuit parse_circuit(std::string_view text);

} // namespace qsimflow
