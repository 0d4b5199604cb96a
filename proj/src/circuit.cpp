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

#include "qsimflow/circuit.hpp"
#include "qsimflow/error.hpp"
#include "format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qsimflow {

namespace {

constexpr double kUnitaryTolerance = 1e-8;

bool is_unitary(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Matrix prod = m.adjoint() * m;
    return (prod - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <=
           kUnitaryTolerance;
}

Matrix expi_hermitian(const Matrix &generator, double angle) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(generator);
    const auto &evals = solver.eigenvalues();
    Eigen::VectorXcd phases(evals.size());
    for (Eigen::Index k = 0; k < evals.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, angle * evals(k)));
    }
    return solver.eigenvectors() * phases.asDiagonal() *
           solver.eigenvectors().adjoint();
}

void check_distinct(const std::vector<std::size_t> &targets) {
    auto sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        fail(ErrorCode::InvalidArgument, "gate targets must be distinct");
    }
}

std::size_t expected_arity(GateKind k) {
    switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
        return 2;
    case GateKind::RawUnitary:
        return 0; // any
    default:
        return 1;
    }
}

} // namespace

std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
        return "X";
    case GateKind::Y:
        return "Y";
    case GateKind::Z:
        return "Z";
    case GateKind::H:
        return "H";
    case GateKind::S:
        return "S";
    case GateKind::Sdg:
        return "SDG";
    case GateKind::Rx:
        return "RX";
    case GateKind::Ry:
        return "RY";
    case GateKind::Rz:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::CZ:
        return "CZ";
    case GateKind::RawUnitary:
        return "UNITARY";
    }
    return "?";
}

double Gate::bound_angle() const {
    if (const auto *v = std::get_if<double>(&angle)) {
        return *v;
    }
    fail(ErrorCode::Unbound, std::string(to_string(kind)) +
                                 " gate has an unbound parameter");
}

Gate Gate::single(GateKind kind, std::size_t q) {
    if (expected_arity(kind) != 1 || kind == GateKind::Rx ||
        kind == GateKind::Ry || kind == GateKind::Rz) {
        fail(ErrorCode::InvalidArgument,
             std::string(to_string(kind)) + " is not a fixed 1-qubit gate");
    }
    return Gate{kind, {q}, 0.0, {}, {}};
}

Gate Gate::rotation(GateKind kind, std::size_t q, Angle angle) {
    if (kind != GateKind::Rx && kind != GateKind::Ry && kind != GateKind::Rz) {
        fail(ErrorCode::InvalidArgument,
             std::string(to_string(kind)) + " is not a rotation");
    }
    return Gate{kind, {q}, angle, {}, {}};
}

Gate Gate::controlled(GateKind kind, std::size_t control, std::size_t target) {
    if (kind != GateKind::CNOT && kind != GateKind::CZ) {
        fail(ErrorCode::InvalidArgument,
             std::string(to_string(kind)) + " is not a 2-qubit gate");
    }
    Gate g{kind, {control, target}, 0.0, {}, {}};
    check_distinct(g.targets);
    return g;
}

Gate Gate::raw_unitary(std::vector<std::size_t> targets, Matrix matrix) {
    check_distinct(targets);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
    if (targets.empty() || matrix.rows() != dim || matrix.cols() != dim) {
        fail(ErrorCode::DimensionMismatch,
             "raw unitary matrix does not match its target count");
    }
    if (!is_unitary(matrix)) {
        fail(ErrorCode::InvalidArgument, "raw unitary matrix is not unitary");
    }
    return Gate{GateKind::RawUnitary, std::move(targets), 0.0,
                std::move(matrix), {}};
}

Gate Gate::generated_unitary(std::vector<std::size_t> targets,
                             Matrix hermitian_generator, Angle angle) {
    check_distinct(targets);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
    if (targets.empty() || hermitian_generator.rows() != dim ||
        hermitian_generator.cols() != dim) {
        fail(ErrorCode::DimensionMismatch,
             "unitary generator does not match its target count");
    }
    if ((hermitian_generator - hermitian_generator.adjoint())
            .cwiseAbs()
            .maxCoeff() > kUnitaryTolerance) {
        fail(ErrorCode::NotHermitian, "unitary generator is not Hermitian");
    }
    Gate g{GateKind::RawUnitary, std::move(targets), angle, {},
           std::move(hermitian_generator)};
    if (const auto *a = std::get_if<double>(&angle)) {
        g.matrix = expi_hermitian(g.generator, *a);
    }
    return g;
}

Matrix gate_matrix(const Gate &g) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::numbers::sqrt2;
    Matrix m(2, 2);
    switch (g.kind) {
    case GateKind::X:
        m << 0, 1, 1, 0;
        return m;
    case GateKind::Y:
        m << 0, -1i, 1i, 0;
        return m;
    case GateKind::Z:
        m << 1, 0, 0, -1;
        return m;
    case GateKind::H:
        m << r, r, r, -r;
        return m;
    case GateKind::S:
        m << 1, 0, 0, 1i;
        return m;
    case GateKind::Sdg:
        m << 1, 0, 0, -1i;
        return m;
    case GateKind::Rx: {
        const double a = g.bound_angle() / 2;
        m << std::cos(a), -1i * std::sin(a), -1i * std::sin(a), std::cos(a);
        return m;
    }
    case GateKind::Ry: {
        const double a = g.bound_angle() / 2;
        m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
        return m;
    }
    case GateKind::Rz: {
        const double a = g.bound_angle() / 2;
        m << std::exp(Complex(0, -a)), 0, 0, std::exp(Complex(0, a));
        return m;
    }
    case GateKind::CNOT: {
        // local index = control + 2 * target
        Matrix c = Matrix::Zero(4, 4);
        c(0, 0) = 1;
        c(2, 2) = 1;
        c(3, 1) = 1;
        c(1, 3) = 1;
        return c;
    }
    case GateKind::CZ: {
        Matrix c = Matrix::Identity(4, 4);
        c(3, 3) = -1;
        return c;
    }
    case GateKind::RawUnitary:
        if (g.matrix.size() == 0) {
            fail(ErrorCode::Unbound, "raw unitary has an unbound parameter");
        }
        return g.matrix;
    }
    return m;
}

Circuit::Circuit(std::size_t n_qubits, std::size_t n_params)
    : n_qubits_(n_qubits), n_params_(n_params) {
    if (n_qubits == 0) {
        fail(ErrorCode::InvalidArgument, "circuit needs at least one qubit");
    }
}

Circuit &Circuit::append(Gate g) {
    const std::size_t arity = expected_arity(g.kind);
    if (arity != 0 && g.targets.size() != arity) {
        fail(ErrorCode::InvalidArgument,
             std::string(to_string(g.kind)) + " expects " +
                 std::to_string(arity) + " target(s)");
    }
    for (auto q : g.targets) {
        if (q >= n_qubits_) {
            fail(ErrorCode::DimensionMismatch,
                 "gate target " + std::to_string(q) + " outside " +
                     std::to_string(n_qubits_) + "-qubit register");
        }
    }
    if (const auto *p = std::get_if<ParameterRef>(&g.angle)) {
        if (p->index >= n_params_) {
            fail(ErrorCode::ArityMismatch,
                 "parameter index " + std::to_string(p->index) +
                     " outside circuit with " + std::to_string(n_params_) +
                     " parameter(s)");
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

std::size_t Circuit::parameter_ref_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(),
                      [](const Gate &g) { return g.is_parameterized(); }));
}

Circuit bind(const Circuit &c, std::span<const double> params) {
    if (params.size() != c.n_params()) {
        fail(ErrorCode::ArityMismatch,
             "circuit has " + std::to_string(c.n_params()) +
                 " parameter(s), got " + std::to_string(params.size()));
    }
    Circuit out(c.n_qubits());
    for (const auto &g : c.gates()) {
        const auto *p = std::get_if<ParameterRef>(&g.angle);
        if (p == nullptr) {
            out.append(g);
            continue;
        }
        const double a = p->scale * params[p->index] + p->offset;
        if (g.kind == GateKind::RawUnitary) {
            out.append(Gate::generated_unitary(g.targets, g.generator, a));
        } else {
            Gate bound = g;
            bound.angle = a;
            out.append(std::move(bound));
        }
    }
    return out;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    if (a.n_qubits() != b.n_qubits()) {
        fail(ErrorCode::QubitCountMismatch,
             "cannot compose " + std::to_string(a.n_qubits()) + "-qubit and " +
                 std::to_string(b.n_qubits()) + "-qubit circuits");
    }
    Circuit out(a.n_qubits(), std::max(a.n_params(), b.n_params()));
    for (const auto &g : a.gates()) {
        out.append(g);
    }
    for (const auto &g : b.gates()) {
        out.append(g);
    }
    return out;
}

Circuit basis_change(const PauliString &term, std::size_t n_qubits) {
    Circuit out(n_qubits);
    for (auto [q, p] : term.factors()) {
        if (p == Pauli::X) {
            out.h(q);
        } else if (p == Pauli::Y) {
            out.sdg(q);
            out.h(q);
        }
    }
    return out;
}

Matrix unitary_of(const Circuit &c) {
    if (!c.is_bound()) {
        fail(ErrorCode::Unbound, "unitary_of needs a fully bound circuit");
    }
    const std::size_t n = c.n_qubits();
    if (n > kUnitaryOracleMaxQubits) {
        fail(ErrorCode::OracleTooLarge,
             std::to_string(n) + " qubits exceeds the unitary oracle bound");
    }
    const std::size_t dim = std::size_t{1} << n;
    Matrix u = Matrix::Identity(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(dim));
    for (const auto &g : c.gates()) {
        const Matrix local = gate_matrix(g);
        const auto &t = g.targets;
        std::uint64_t support = 0;
        for (auto q : t) {
            support |= std::uint64_t{1} << q;
        }
        // Embed: full(r, col) = local(sub(r), sub(col)) when r and col agree
        // outside the support.
        auto sub = [&t](std::uint64_t idx) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < t.size(); ++k) {
                s |= ((idx >> t[k]) & 1u) << k;
            }
            return s;
        };
        Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim),
                                   static_cast<Eigen::Index>(dim));
        for (std::uint64_t r = 0; r < dim; ++r) {
            for (std::uint64_t col = 0; col < dim; ++col) {
                if ((r & ~support) != (col & ~support)) {
                    continue;
                }
                full(static_cast<Eigen::Index>(r),
                     static_cast<Eigen::Index>(col)) =
                    local(static_cast<Eigen::Index>(sub(r)),
                          static_cast<Eigen::Index>(sub(col)));
            }
        }
        u = full * u;
    }
    return u;
}

// ---------------------------------------------------------------------------
// Text dump

namespace {

std::string format_angle(const Angle &a) {
    if (const auto *v = std::get_if<double>(&a)) {
        return detail::format_double(*v, 17);
    }
    const auto &p = std::get<ParameterRef>(a);
    std::string s = "p" + std::to_string(p.index);
    if (p.scale != 1.0) {
        s += "*" + detail::format_double(p.scale, 17);
    }
    if (p.offset != 0.0) {
        s += (p.offset > 0 ? "+" : "") + detail::format_double(p.offset, 17);
    }
    return s;
}

// Pauli decomposition of a Hermitian k-qubit matrix: c_P = Tr(P G) / 2^k.
PauliSum pauli_decompose(const Matrix &g, std::size_t k) {
    PauliSum out;
    const std::size_t count = std::size_t{1} << (2 * k);
    const double norm = static_cast<double>(std::size_t{1} << k);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<PauliString::Factor> factors;
        for (std::size_t q = 0; q < k; ++q) {
            const auto p = static_cast<std::uint8_t>((code >> (2 * q)) & 3u);
            if (p != 0) {
                factors.emplace_back(q, static_cast<Pauli>(p));
            }
        }
        PauliString ps(std::move(factors));
        const Matrix pm = to_dense_matrix(PauliSum({{1.0, ps}}), k);
        const Complex c = (pm * g).trace() / norm;
        if (std::abs(c) >= kDedupEpsilon) {
            out.add(c, ps);
        }
    }
    return simplify(out);
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void dump_error(std::size_t line, const std::string &msg) {
    fail(ErrorCode::ParseError,
         "circuit line " + std::to_string(line) + ": " + msg);
}

double parse_double(std::string_view tok, std::size_t line) {
    double v = 0.0;
    const char *b = tok.data();
    const char *e = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') {
        ++b;
    }
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) {
        dump_error(line, "bad number '" + std::string(tok) + "'");
    }
    return v;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        dump_error(line, "bad index '" + std::string(tok) + "'");
    }
    return v;
}

Angle parse_angle(std::string_view tok, std::size_t line) {
    if (tok.empty() || (tok.front() != 'p' && tok.front() != 'P')) {
        return parse_double(tok, line);
    }
    ParameterRef ref;
    std::size_t pos = 1;
    auto [ptr, ec] = std::from_chars(tok.data() + pos, tok.data() + tok.size(),
                                     ref.index);
    if (ec != std::errc() || ptr == tok.data() + pos) {
        dump_error(line, "bad parameter reference '" + std::string(tok) + "'");
    }
    pos = static_cast<std::size_t>(ptr - tok.data());
    if (pos < tok.size() && tok[pos] == '*') {
        ++pos;
        // scale runs until a '+'/'-' that is not an exponent sign
        std::size_t end = pos + 1;
        while (end < tok.size() &&
               !((tok[end] == '+' || tok[end] == '-') && tok[end - 1] != 'e' &&
                 tok[end - 1] != 'E')) {
            ++end;
        }
        ref.scale = parse_double(tok.substr(pos, end - pos), line);
        pos = end;
    }
    if (pos < tok.size()) {
        ref.offset = parse_double(tok.substr(pos), line);
    }
    return ref;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

} // namespace

std::string dump_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.n_qubits()) + " params " +
                      std::to_string(c.n_params()) + "\n";
    for (const auto &g : c.gates()) {
        std::string line;
        const bool generated =
            g.kind == GateKind::RawUnitary && g.generator.size() != 0;
        line += generated ? "UEXP" : std::string(to_string(g.kind));
        for (auto q : g.targets) {
            line += " " + std::to_string(q);
        }
        if (g.is_rotation()) {
            line += " " + format_angle(g.angle);
        } else if (generated) {
            line += " " + format_angle(g.angle) + " ; " +
                    pauli_decompose(g.generator, g.targets.size()).to_string();
        } else if (g.kind == GateKind::RawUnitary) {
            line += " ;";
            for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
                for (Eigen::Index col = 0; col < g.matrix.cols(); ++col) {
                    const Complex v = g.matrix(r, col);
                    line += " " + detail::format_double(v.real(), 17) + "," +
                            detail::format_double(v.imag(), 17);
                }
            }
        }
        out += line + "\n";
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string line = trim(text.substr(start, end - start));
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line = trim(line.substr(0, hash));
        }
        if (line.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        std::string head = line;
        std::string tail;
        if (auto semi = line.find(';'); semi != std::string::npos) {
            head = trim(line.substr(0, semi));
            tail = trim(line.substr(semi + 1));
        }
        auto toks = split_ws(head);
        std::string kind = toks.front();
        std::transform(kind.begin(), kind.end(), kind.begin(), [](char ch) {
            return static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        });
        try {
            if (!circuit) {
                if (kind != "QUBITS" || toks.size() != 4 ||
                    (toks[2] != "params" && toks[2] != "PARAMS")) {
                    dump_error(line_no,
                               "expected header 'qubits <n> params <k>'");
                }
                circuit.emplace(parse_index(toks[1], line_no),
                                parse_index(toks[3], line_no));
                continue;
            }
            auto target = [&](std::size_t i) {
                if (i >= toks.size()) {
                    dump_error(line_no, "missing operand");
                }
                return parse_index(toks[i], line_no);
            };
            auto arity_check = [&](std::size_t n) {
                if (toks.size() != n) {
                    dump_error(line_no, "wrong operand count for " + kind);
                }
            };
            if (kind == "X" || kind == "Y" || kind == "Z" || kind == "H" ||
                kind == "S" || kind == "SDG") {
                arity_check(2);
                const GateKind k = kind == "X"   ? GateKind::X
                                   : kind == "Y" ? GateKind::Y
                                   : kind == "Z" ? GateKind::Z
                                   : kind == "H" ? GateKind::H
                                   : kind == "S" ? GateKind::S
                                                 : GateKind::Sdg;
                circuit->append(Gate::single(k, target(1)));
            } else if (kind == "RX" || kind == "RY" || kind == "RZ") {
                arity_check(3);
                const GateKind k = kind == "RX"   ? GateKind::Rx
                                   : kind == "RY" ? GateKind::Ry
                                                  : GateKind::Rz;
                circuit->append(
                    Gate::rotation(k, target(1), parse_angle(toks[2], line_no)));
            } else if (kind == "CNOT" || kind == "CX" || kind == "CZ") {
                arity_check(3);
                circuit->append(Gate::controlled(
                    kind == "CZ" ? GateKind::CZ : GateKind::CNOT, target(1),
                    target(2)));
            } else if (kind == "UNITARY") {
                std::vector<std::size_t> targets;
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    targets.push_back(target(i));
                }
                const auto entries = split_ws(tail);
                const auto dim = static_cast<Eigen::Index>(std::size_t{1}
                                                           << targets.size());
                if (static_cast<Eigen::Index>(entries.size()) != dim * dim) {
                    dump_error(line_no, "UNITARY needs 4^k matrix entries");
                }
                Matrix m(dim, dim);
                for (Eigen::Index i = 0; i < dim * dim; ++i) {
                    const auto &e = entries[static_cast<std::size_t>(i)];
                    const auto comma = e.find(',');
                    if (comma == std::string::npos) {
                        dump_error(line_no, "matrix entry must be re,im");
                    }
                    m(i / dim, i % dim) =
                        Complex(parse_double(e.substr(0, comma), line_no),
                                parse_double(e.substr(comma + 1), line_no));
                }
                circuit->append(Gate::raw_unitary(std::move(targets), m));
            } else if (kind == "UEXP") {
                if (toks.size() < 3) {
                    dump_error(line_no, "UEXP needs targets and an angle");
                }
                std::vector<std::size_t> targets;
                for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
                    targets.push_back(target(i));
                }
                const Angle angle = parse_angle(toks.back(), line_no);
                const PauliSum gen = parse_pauli_sum(tail);
                circuit->append(Gate::generated_unitary(
                    targets, to_dense_matrix(gen, targets.size()), angle));
            } else {
                dump_error(line_no, "unknown gate '" + toks.front() + "'");
            }
        } catch (const Error &e) {
            if (e.code() == ErrorCode::ParseError) {
                throw;
            }
            dump_error(line_no, e.what());
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!circuit) {
        fail(ErrorCode::ParseError, "circuit dump is missing its header");
    }
    return *std::move(circuit);
}

} // namespace qsimflow
