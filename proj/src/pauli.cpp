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

#include "qsimflow/pauli.hpp"
#include "qsimflow/error.hpp"
#include "format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

namespace qsimflow {

char to_char(Pauli p) noexcept {
    switch (p) {
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    case Pauli::Z:
        return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::initializer_list<Factor> factors)
    : PauliString(std::vector<Factor>(factors)) {}

PauliString::PauliString(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor &a, const Factor &b) { return a.first < b.first; });
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        if (factors_[i].first == factors_[i - 1].first) {
            fail(ErrorCode::InvalidArgument,
                 "qubit " + std::to_string(factors_[i].first) +
                     " appears twice in a Pauli string");
        }
    }
}

std::size_t PauliString::min_qubits() const noexcept {
    return factors_.empty() ? 0 : factors_.back().first + 1;
}

bool PauliString::is_diagonal() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor &f) { return f.second == Pauli::Z; });
}

std::uint8_t PauliString::at(std::size_t qubit) const noexcept {
    auto it = std::lower_bound(
        factors_.begin(), factors_.end(), qubit,
        [](const Factor &f, std::size_t q) { return f.first < q; });
    if (it == factors_.end() || it->first != qubit) {
        return 0;
    }
    return static_cast<std::uint8_t>(it->second);
}

std::uint64_t PauliString::x_mask() const noexcept {
    std::uint64_t m = 0;
    for (auto [q, p] : factors_) {
        if (p != Pauli::Z) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

std::uint64_t PauliString::z_mask() const noexcept {
    std::uint64_t m = 0;
    for (auto [q, p] : factors_) {
        if (p != Pauli::X) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

std::size_t PauliString::y_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(factors_.begin(), factors_.end(),
                      [](const Factor &f) { return f.second == Pauli::Y; }));
}

std::string PauliString::to_string() const {
    if (factors_.empty()) {
        return "I";
    }
    std::string out;
    for (auto [q, p] : factors_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_char(p);
        out += std::to_string(q);
    }
    return out;
}

std::strong_ordering operator<=>(const PauliString &a, const PauliString &b) {
    const auto &fa = a.factors_;
    const auto &fb = b.factors_;
    const std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = fa[i].first <=> fb[i].first; c != 0) {
            return c;
        }
    }
    if (auto c = fa.size() <=> fb.size(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = fa[i].second <=> fb[i].second; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

namespace {

// Single-qubit product p·q = phase · r.
struct SingleProduct {
    Complex phase;
    std::uint8_t result; // 0 = identity
};

SingleProduct multiply_single(Pauli p, Pauli q) {
    if (p == q) {
        return {1.0, 0};
    }
    const int a = static_cast<int>(p);
    const int b = static_cast<int>(q);
    // X·Y = iZ, Y·Z = iX, Z·X = iY; reversed order picks up -i.
    const int r = 6 - a - b;
    const bool cyclic = (b - a + 3) % 3 == 1;
    return {cyclic ? Complex(0, 1) : Complex(0, -1),
            static_cast<std::uint8_t>(r)};
}

} // namespace

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    std::vector<PauliString::Factor> out;
    Complex phase = 1.0;
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            out.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].first < fa[i].first) {
            out.push_back(fb[j++]);
        } else {
            auto sp = multiply_single(fa[i].second, fb[j].second);
            phase *= sp.phase;
            if (sp.result != 0) {
                out.emplace_back(fa[i].first, static_cast<Pauli>(sp.result));
            }
            ++i;
            ++j;
        }
    }
    return {phase, PauliString(std::move(out))};
}

PauliSum::PauliSum(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {
    for (const auto &t : terms_) {
        if (!std::isfinite(t.coefficient.real()) ||
            !std::isfinite(t.coefficient.imag())) {
            fail(ErrorCode::InvalidArgument, "non-finite Pauli coefficient");
        }
    }
}

PauliSum &PauliSum::add(Complex coefficient, PauliString string) {
    if (!std::isfinite(coefficient.real()) ||
        !std::isfinite(coefficient.imag())) {
        fail(ErrorCode::InvalidArgument, "non-finite Pauli coefficient");
    }
    terms_.push_back({coefficient, std::move(string)});
    return *this;
}

std::size_t PauliSum::min_qubits() const noexcept {
    std::size_t n = 0;
    for (const auto &t : terms_) {
        n = std::max(n, t.string.min_qubits());
    }
    return n;
}

bool PauliSum::is_hermitian() const {
    const PauliSum merged = simplify(*this);
    for (const auto &t : merged.terms()) {
        if (std::abs(t.coefficient.imag()) > kDedupEpsilon) {
            return false;
        }
    }
    return true;
}

bool PauliSum::is_diagonal() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm &t) {
        return t.string.is_diagonal();
    });
}

std::string PauliSum::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &t : terms_) {
        std::string coeff;
        const Complex c = t.coefficient;
        if (c.imag() == 0.0) {
            const double v = c.real();
            if (out.empty()) {
                coeff = detail::format_double(v, 17);
            } else {
                out += v < 0 ? " - " : " + ";
                coeff = detail::format_double(std::abs(v), 17);
            }
        } else {
            if (!out.empty()) {
                out += " + ";
            }
            coeff = "(" + detail::format_double(c.real(), 17) + "," +
                    detail::format_double(c.imag(), 17) + ")";
        }
        out += coeff;
        if (!t.string.is_identity()) {
            out += " * " + t.string.to_string();
        }
    }
    return out;
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

PauliSum &PauliSum::operator*=(Complex scale) {
    for (auto &t : terms_) {
        t.coefficient *= scale;
    }
    return *this;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    PauliSum out;
    for (const auto &ta : a.terms_) {
        for (const auto &tb : b.terms_) {
            auto [phase, prod] = multiply(ta.string, tb.string);
            out.terms_.push_back(
                {ta.coefficient * tb.coefficient * phase, std::move(prod)});
        }
    }
    return simplify(out);
}

PauliSum simplify(const PauliSum &s) {
    std::map<PauliString, Complex> merged;
    for (const auto &t : s.terms()) {
        merged[t.string] += t.coefficient;
    }
    std::vector<PauliTerm> out;
    out.reserve(merged.size());
    for (auto &[str, c] : merged) {
        if (std::abs(c) >= kDedupEpsilon) {
            out.push_back({c, str});
        }
    }
    return PauliSum(std::move(out));
}

PauliSum require_hermitian(const PauliSum &s, std::string_view what) {
    PauliSum simplified = simplify(s);
    std::vector<PauliTerm> real_terms;
    for (const auto &t : simplified.terms()) {
        if (std::abs(t.coefficient.imag()) > kDedupEpsilon) {
            fail(ErrorCode::NotHermitian,
                 std::string(what) + " has complex coefficient on " +
                     t.string.to_string());
        }
        real_terms.push_back({Complex(t.coefficient.real(), 0.0), t.string});
    }
    return PauliSum(std::move(real_terms));
}

// ---------------------------------------------------------------------------
// Text parser

namespace {

class PauliSumParser {
  public:
    explicit PauliSumParser(std::string_view text) : text_(text) {}

    PauliSum parse() {
        skip_ws();
        if (at_end()) {
            return PauliSum({{1.0, PauliString()}});
        }
        PauliSum out;
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) {
                if (first) {
                    error("expected a term");
                }
                break;
            }
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                ++pos_;
                skip_ws();
            } else if (!first) {
                error("expected '+' or '-' between terms");
            }
            auto [coeff, str] = term();
            out.add(sign * coeff, std::move(str));
            first = false;
        }
        return out;
    }

  private:
    std::pair<Complex, PauliString> term() {
        Complex coeff = 1.0;
        bool have_coeff = false;
        if (peek() == '(') {
            coeff = complex_number();
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek())) ||
                   peek() == '.') {
            coeff = number();
            have_coeff = true;
        }
        skip_ws();
        bool need_factor = false;
        if (have_coeff && peek() == '*') {
            ++pos_;
            skip_ws();
            need_factor = true;
        }
        std::vector<PauliString::Factor> factors;
        bool saw_factor = false;
        while (!at_end()) {
            skip_ws();
            const char c = static_cast<char>(
                std::toupper(static_cast<unsigned char>(peek())));
            if (c == 'I' && !is_index_char(peek_at(1))) {
                ++pos_;
                saw_factor = true;
            } else if (c == 'X' || c == 'Y' || c == 'Z') {
                ++pos_;
                const std::size_t q = qubit_index();
                factors.emplace_back(q, c == 'X'   ? Pauli::X
                                        : c == 'Y' ? Pauli::Y
                                                   : Pauli::Z);
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                const char n = static_cast<char>(
                    std::toupper(static_cast<unsigned char>(peek())));
                if (n != 'X' && n != 'Y' && n != 'Z' && n != 'I') {
                    // "X0 * 2.0" style trailing coefficients are not supported
                    error("expected a Pauli factor after '*'");
                }
            }
        }
        if (!have_coeff && !saw_factor) {
            error("expected a coefficient or Pauli factor");
        }
        if (need_factor && !saw_factor) {
            error("expected a Pauli factor after '*'");
        }
        try {
            return {coeff, PauliString(std::move(factors))};
        } catch (const Error &e) {
            error(e.detail());
        }
    }

    std::size_t qubit_index() {
        bool paren = false;
        skip_ws();
        if (peek() == '(') {
            paren = true;
            ++pos_;
            skip_ws();
        }
        std::size_t value = 0;
        const char *begin = text_.data() + pos_;
        const char *end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            error("expected qubit index");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        if (paren) {
            skip_ws();
            if (peek() != ')') {
                error("expected ')'");
            }
            ++pos_;
        }
        return value;
    }

    double number() {
        const char *begin = text_.data() + pos_;
        const char *end = text_.data() + text_.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            error("expected number");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    double signed_number() {
        skip_ws();
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1.0 : 1.0;
            ++pos_;
            skip_ws();
        }
        return sign * number();
    }

    Complex complex_number() {
        ++pos_; // '('
        const double re = signed_number();
        skip_ws();
        if (peek() != ',') {
            error("expected ',' in complex coefficient");
        }
        ++pos_;
        const double im = signed_number();
        skip_ws();
        if (peek() != ')') {
            error("expected ')' after complex coefficient");
        }
        ++pos_;
        return {re, im};
    }

    static bool is_index_char(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(';
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[nodiscard]] char peek_at(std::size_t k) const {
        return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
    }

    [[noreturn]] void error(const std::string &msg) const {
        fail(ErrorCode::ParseError, "Pauli sum, column " +
                                        std::to_string(pos_ + 1) + ": " + msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

PauliSum parse_pauli_sum(std::string_view text) {
    return PauliSumParser(text).parse();
}

} // namespace qsimflow
