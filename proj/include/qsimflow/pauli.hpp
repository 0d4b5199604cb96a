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

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsimflow {

using Complex = std::complex<double>;

/// Terms whose |coefficient| falls below this are dropped by simplify().
inline constexpr double kDedupEpsilon = 1e-12;

enum class Pauli : std::uint8_t { X = 1, Y = 2, Z = 3 };

char to_char(Pauli p) noexcept;

/**
 * @brief Sparse tensor product of single-qubit Pauli operators.
 *
 * Stored as (qubit, Pauli) pairs sorted by qubit index; qubits not listed
 * carry the identity. The empty string is the identity operator.
 *
 * Qubit convention used throughout the library: qubit 0 is the
 * least-significant bit of a basis-state index.
 */
class PauliString {
  public:
    using Factor = std::pair<std::size_t, Pauli>;

    PauliString() = default;
    /// Factors may be given in any order; duplicate qubits are rejected.
    PauliString(std::initializer_list<Factor> factors);
    explicit PauliString(std::vector<Factor> factors);

    [[nodiscard]] const std::vector<Factor> &factors() const noexcept {
        return factors_;
    }
    [[nodiscard]] bool is_identity() const noexcept { return factors_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return factors_.size(); }
    /// Highest qubit index plus one (0 for the identity).
    [[nodiscard]] std::size_t min_qubits() const noexcept;
    /// True when every factor is Z.
    [[nodiscard]] bool is_diagonal() const noexcept;
    /// Pauli on `qubit` as its enum value, 0 for identity.
    [[nodiscard]] std::uint8_t at(std::size_t qubit) const noexcept;

    /// Bit masks over qubits (qubit q -> bit q). Only valid for q < 64.
    [[nodiscard]] std::uint64_t x_mask() const noexcept; // X or Y
    [[nodiscard]] std::uint64_t z_mask() const noexcept; // Z or Y
    [[nodiscard]] std::size_t y_count() const noexcept;

    /// e.g. "X0 Y1", or "I" for the identity.
    [[nodiscard]] std::string to_string() const;

    /// Canonical order: qubit-index lists lexicographically, then the Pauli
    /// letters (X < Y < Z). Identity sorts first.
    friend std::strong_ordering operator<=>(const PauliString &a,
                                            const PauliString &b);
    friend bool operator==(const PauliString &a,
                           const PauliString &b) = default;

  private:
    std::vector<Factor> factors_;
};

struct PauliProduct {
    Complex phase; // one of {1, -1, i, -i}
    PauliString product;
};

/// Operator product a·b = phase·product.
PauliProduct multiply(const PauliString &a, const PauliString &b);

struct PauliTerm {
    Complex coefficient;
    PauliString string;
};

/// Linear combination of Pauli strings. Terms are kept in insertion order
/// until simplify() puts them in canonical order.
class PauliSum {
  public:
    PauliSum() = default;
    explicit PauliSum(std::vector<PauliTerm> terms);

    PauliSum &add(Complex coefficient, PauliString string);

    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t min_qubits() const noexcept;

    /// All coefficients (after merging like terms) have negligible imaginary
    /// part.
    [[nodiscard]] bool is_hermitian() const;
    /// Only Z / identity strings.
    [[nodiscard]] bool is_diagonal() const noexcept;

    [[nodiscard]] std::string to_string() const;

    PauliSum &operator+=(const PauliSum &other);
    PauliSum &operator*=(Complex scale);
    friend PauliSum operator+(PauliSum a, const PauliSum &b) {
        return a += b;
    }
    friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
    friend PauliSum operator*(const PauliSum &a, const PauliSum &b);

  private:
    std::vector<PauliTerm> terms_;
};

/// Merge like terms, drop |c| < kDedupEpsilon, sort canonically.
PauliSum simplify(const PauliSum &s);

/// Throws NotHermitian unless `s` is Hermitian; returns simplify(s).
PauliSum require_hermitian(const PauliSum &s, std::string_view what);

/**
 * Parse the textual PauliSum format, e.g.
 *   "-2.1433 * X0 X1 - 2.1433 * Y0 Y1 + 0.21829 * Z0 - 6.125 * Z1 + 5.907"
 * Terms are joined by + or -. A term is an optional coefficient (real, or
 * complex as "(re,im)") followed by optional '*' and Pauli factors written
 * P<q> or P(q), optionally separated by '*'. "I" or a bare coefficient is
 * the identity. Pauli letters are case-insensitive. An empty (blank) string
 * parses to the identity 1.0·I.
 */
PauliSum parse_pauli_sum(std::string_view text);

} // namespace qsimflow
