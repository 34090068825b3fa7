// Copyright 2026 The stabcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabcert/hamiltonian.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "text_util.h"

namespace stabcert {

namespace {

using Matrix = Eigen::MatrixXcd;

// Entries s * (-1)^{f(a, b)} / sqrt(2)^k of a k-fold tensor power.
template <typename SignFn>
Matrix signed_tensor_power(size_t k, SignFn sign_of) {
    size_t dim = size_t{1} << k;
    double scale = std::pow(std::numbers::sqrt2 / 2, static_cast<double>(k));
    Matrix m(dim, dim);
    for (size_t a = 0; a < dim; a++) {
        for (size_t b = 0; b < dim; b++) {
            m(a, b) = sign_of(a, b) ? -scale : scale;
        }
    }
    return m;
}

Matrix hadamard_power(size_t k) {
    return signed_tensor_power(k, [](size_t a, size_t b) { return std::popcount(a & b) & 1; });
}

// (-XHX) = (Z - X)/sqrt(2) has entries -1 unless both indices are 0.
Matrix conj_hadamard_power(size_t k) {
    return signed_tensor_power(k, [](size_t a, size_t b) { return std::popcount(a | b) & 1; });
}

// Local matrix of the restriction of `s` to `support`, including its phase.
Matrix pauli_local(const PauliWord &s, const QubitSet &support) {
    size_t k = support.size();
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t j = 0; j < k; j++) {
        x |= uint64_t{s.x_bits().get(support[j])} << j;
        z |= uint64_t{s.z_bits().get(support[j])} << j;
    }
    static const Amplitude powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amplitude scale = powers[(s.phase_exp() + std::popcount(x & z)) % 4];
    size_t dim = size_t{1} << k;
    Matrix m = Matrix::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        m(b ^ x, b) = (std::popcount(z & b) & 1) ? -scale : scale;
    }
    return m;
}

Matrix half_complement(const Matrix &m) {
    return (Matrix::Identity(m.rows(), m.cols()) - m) / 2.0;
}

void check_dense_cap(size_t n) {
    if (n > kDenseHamiltonianCap) {
        throw std::invalid_argument("dense Hamiltonian refused: " + std::to_string(n) + " qubits exceeds the cap of " +
                                    std::to_string(kDenseHamiltonianCap));
    }
}

QubitSet parse_support(std::string_view text, size_t n) {
    std::vector<size_t> members;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        auto q = text::parse_size(text.substr(pos, comma - pos));
        if (!q) {
            throw std::invalid_argument("bad qubit list '" + std::string(text) + "'");
        }
        members.push_back(*q);
        pos = comma + 1;
    }
    return QubitSet(n, std::move(members));
}

}  // namespace

double sin2_pi_over_8() {
    return (1 - 1 / std::numbers::sqrt2) / 2;
}

const char *term_kind_name(TermKind kind) {
    switch (kind) {
        case TermKind::PauliProjector:
            return "PauliProjector";
        case TermKind::HadamardType:
            return "HadamardType";
        case TermKind::ConjHadamardType:
            return "ConjHadamardType";
        case TermKind::Dense:
            return "Dense";
    }
    return "?";
}

HamTerm HamTerm::pauli_projector(PauliWord s) {
    if (!s.is_hermitian()) {
        throw std::invalid_argument("projector word " + s.str() + " is not Hermitian");
    }
    if (s.is_identity_up_to_phase()) {
        throw std::invalid_argument("projector word " + s.str() + " is the identity");
    }
    std::vector<size_t> members;
    for (size_t q = 0; q < s.num_qubits(); q++) {
        if (s.at(q) != PauliLetter::I) {
            members.push_back(q);
        }
    }
    HamTerm term;
    term.kind_ = TermKind::PauliProjector;
    term.support_ = QubitSet(s.num_qubits(), std::move(members));
    term.projector_ = std::move(s);
    return term;
}

HamTerm HamTerm::hadamard_type(QubitSet support) {
    if (support.empty()) {
        throw std::invalid_argument("Hadamard-type term needs a non-empty support");
    }
    HamTerm term;
    term.kind_ = TermKind::HadamardType;
    term.support_ = std::move(support);
    return term;
}

HamTerm HamTerm::conj_hadamard_type(QubitSet support) {
    if (support.empty()) {
        throw std::invalid_argument("conjugated Hadamard-type term needs a non-empty support");
    }
    HamTerm term;
    term.kind_ = TermKind::ConjHadamardType;
    term.support_ = std::move(support);
    return term;
}

HamTerm HamTerm::dense(QubitSet support, Eigen::MatrixXcd matrix) {
    auto dim = static_cast<Eigen::Index>(size_t{1} << support.size());
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("dense term on " + std::to_string(support.size()) + " qubits needs a " +
                                    std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    if ((matrix - matrix.adjoint()).norm() > 1e-12) {
        throw std::invalid_argument("dense term matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-12 || solver.eigenvalues().maxCoeff() > 1 + 1e-12) {
        throw std::invalid_argument("dense term matrix has spectrum outside [0, 1]");
    }
    HamTerm term;
    term.kind_ = TermKind::Dense;
    term.support_ = std::move(support);
    term.matrix_ = std::move(matrix);
    return term;
}

const PauliWord &HamTerm::projector() const {
    if (kind_ != TermKind::PauliProjector) {
        throw std::logic_error(std::string("projector() on a ") + term_kind_name(kind_) + " term");
    }
    return projector_;
}

Eigen::MatrixXcd HamTerm::local_matrix() const {
    switch (kind_) {
        case TermKind::PauliProjector:
            return half_complement(pauli_local(projector_, support_));
        case TermKind::HadamardType:
            return half_complement(hadamard_power(support_.size()));
        case TermKind::ConjHadamardType:
            return half_complement(conj_hadamard_power(support_.size()));
        case TermKind::Dense:
            return matrix_;
    }
    throw std::logic_error("unknown term kind");
}

LocalHamiltonian::LocalHamiltonian(size_t n, std::vector<HamTerm> terms) : n_(n), terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("a Hamiltonian needs at least one term");
    }
    for (size_t i = 0; i < terms_.size(); i++) {
        if (terms_[i].support().num_qubits() != n_) {
            throw std::invalid_argument("term " + std::to_string(i) + " is defined on " +
                                        std::to_string(terms_[i].support().num_qubits()) + " qubits, expected " +
                                        std::to_string(n_));
        }
    }
}

size_t LocalHamiltonian::locality() const {
    size_t k = 0;
    for (const auto &t : terms_) {
        k = std::max(k, t.locality());
    }
    return k;
}

size_t LocalHamiltonian::max_degree() const {
    std::vector<size_t> degree(n_, 0);
    for (const auto &t : terms_) {
        for (size_t q : t.support()) {
            degree[q]++;
        }
    }
    return n_ ? *std::max_element(degree.begin(), degree.end()) : 0;
}

LocalHamiltonian build_magic_hamiltonian(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("magic-state Hamiltonian needs n >= 1");
    }
    std::vector<HamTerm> terms;
    for (size_t q = 0; q < n; q++) {
        terms.push_back(HamTerm::hadamard_type(QubitSet(n, {q})));
    }
    return LocalHamiltonian(n, std::move(terms));
}

LocalHamiltonian build_stabilizer_hamiltonian(std::span<const PauliWord> gens, std::optional<size_t> max_degree) {
    if (gens.empty()) {
        throw std::invalid_argument("stabilizer Hamiltonian needs at least one generator");
    }
    size_t n = gens.front().num_qubits();
    std::vector<HamTerm> terms;
    size_t k = 0;
    for (const auto &g : gens) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("generator " + g.str() + " does not act on " + std::to_string(n) + " qubits");
        }
        terms.push_back(HamTerm::pauli_projector(g));
        k = std::max(k, g.weight());
    }
    LocalHamiltonian h(n, std::move(terms));
    size_t limit = max_degree.value_or(k);
    if (h.max_degree() > limit) {
        throw std::invalid_argument("degree bound violated: some qubit is in " + std::to_string(h.max_degree()) +
                                    " terms, limit " + std::to_string(limit));
    }
    return h;
}

LocalHamiltonian rotate_css(const LocalHamiltonian &h) {
    std::vector<HamTerm> out;
    for (size_t i = 0; i < h.num_terms(); i++) {
        const HamTerm &term = h.terms()[i];
        if (term.kind() != TermKind::PauliProjector) {
            throw std::invalid_argument("rotate_css: term " + std::to_string(i) + " is " +
                                        term_kind_name(term.kind()) + ", not a Pauli projector");
        }
        const PauliWord &s = term.projector();
        bool x_type = s.z_bits().none();
        bool z_type = s.x_bits().none();
        if (!x_type && !z_type) {
            throw std::invalid_argument("rotate_css: generator " + s.str() + " is neither X-type nor Z-type");
        }
        if (s.phase_exp() == 0) {
            out.push_back(x_type ? HamTerm::hadamard_type(term.support())
                                 : HamTerm::conj_hadamard_type(term.support()));
            continue;
        }
        // (I + M^{(x) k})/2 with M the rotated single-qubit letter.
        size_t k = term.locality();
        Matrix m = x_type ? hadamard_power(k) : conj_hadamard_power(k);
        out.push_back(HamTerm::dense(term.support(), (Matrix::Identity(m.rows(), m.cols()) + m) / 2.0));
    }
    return LocalHamiltonian(h.num_qubits(), std::move(out));
}

double term_energy(const HamTerm &term, const Statevector &psi) {
    const QubitSet &support = term.support();
    if (support.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("term and state act on different qubit counts");
    }
    Matrix m = term.local_matrix();
    size_t k = support.size();
    size_t dim = size_t{1} << k;
    uint64_t support_mask = 0;
    std::vector<uint64_t> offsets(dim, 0);
    for (size_t j = 0; j < k; j++) {
        support_mask |= uint64_t{1} << support[j];
    }
    for (uint64_t b = 0; b < dim; b++) {
        for (size_t j = 0; j < k; j++) {
            if ((b >> j) & 1) {
                offsets[b] |= uint64_t{1} << support[j];
            }
        }
    }
    auto amps = psi.amplitudes();
    Eigen::VectorXcd local(static_cast<Eigen::Index>(dim));
    Amplitude total = 0;
    for (uint64_t base = 0; base < amps.size(); base++) {
        if (base & support_mask) {
            continue;
        }
        for (uint64_t b = 0; b < dim; b++) {
            local(static_cast<Eigen::Index>(b)) = amps[base | offsets[b]];
        }
        total += local.dot(m * local);
    }
    if (std::abs(total.imag()) > 1e-9) {
        throw std::logic_error("term energy has imaginary part " + std::to_string(total.imag()));
    }
    return std::clamp(total.real(), 0.0, 1.0);
}

double energy(const LocalHamiltonian &h, const Statevector &psi) {
    double total = 0;
    for (const auto &term : h.terms()) {
        total += term_energy(term, psi);
    }
    return std::clamp(total * h.normalization(), 0.0, 1.0);
}

double theorem1_bound(size_t n, size_t t) {
    if (n == 0) {
        throw std::invalid_argument("theorem1_bound needs n >= 1");
    }
    double fraction = 1 - static_cast<double>(t) / static_cast<double>(n);
    return std::max(0.0, fraction) * sin2_pi_over_8();
}

Eigen::MatrixXcd dense_term_matrix(const HamTerm &term, size_t n) {
    check_dense_cap(n);
    const QubitSet &support = term.support();
    Matrix local = term.local_matrix();
    size_t full = size_t{1} << n;
    auto local_index = [&](uint64_t j) {
        uint64_t b = 0;
        for (size_t s = 0; s < support.size(); s++) {
            b |= ((j >> support[s]) & 1) << s;
        }
        return b;
    };
    uint64_t mask = 0;
    for (size_t q : support) {
        mask |= uint64_t{1} << q;
    }
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(full), static_cast<Eigen::Index>(full));
    for (uint64_t r = 0; r < full; r++) {
        for (uint64_t c = 0; c < full; c++) {
            if ((r & ~mask) == (c & ~mask)) {
                out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    local(static_cast<Eigen::Index>(local_index(r)), static_cast<Eigen::Index>(local_index(c)));
            }
        }
    }
    return out;
}

Eigen::MatrixXcd dense_matrix(const LocalHamiltonian &h) {
    size_t n = h.num_qubits();
    check_dense_cap(n);
    auto full = static_cast<Eigen::Index>(size_t{1} << n);
    Matrix out = Matrix::Zero(full, full);
    for (const auto &term : h.terms()) {
        out += dense_term_matrix(term, n);
    }
    return out * h.normalization();
}

double ground_energy(const LocalHamiltonian &h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(dense_matrix(h), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

std::vector<PauliWord> repetition_x_checks(size_t n, size_t width) {
    if (width == 0 || n < width) {
        throw std::invalid_argument("repetition checks of width " + std::to_string(width) + " need n >= width");
    }
    std::vector<PauliWord> out;
    for (size_t i = 0; i + width <= n; i++) {
        BitVector x(n);
        for (size_t q = i; q < i + width; q++) {
            x.set(q, true);
        }
        out.emplace_back(std::move(x), BitVector(n));
    }
    return out;
}

std::vector<PauliWord> repetition_z_checks(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("repetition Z checks need n >= 2");
    }
    std::vector<PauliWord> out;
    for (size_t i = 0; i + 1 < n; i++) {
        BitVector z(n);
        z.set(i, true);
        z.set(i + 1, true);
        out.emplace_back(BitVector(n), std::move(z));
    }
    return out;
}

std::vector<PauliWord> steane_generators() {
    // Rows of the [7,4] Hamming parity-check matrix.
    const char *rows[3] = {"0001111", "0110011", "1010101"};
    std::vector<PauliWord> out;
    for (const char *r : rows) {
        out.emplace_back(BitVector::from_string(r), BitVector(7));
    }
    for (const char *r : rows) {
        out.emplace_back(BitVector(7), BitVector::from_string(r));
    }
    return out;
}

LocalHamiltonian read_hamiltonian(std::istream &in) {
    std::string line;
    size_t line_number = 0;
    std::optional<size_t> n;
    std::optional<double> norm;
    std::vector<HamTerm> terms;
    auto context = [&]() { return "Hamiltonian line " + std::to_string(line_number) + ": "; };
    while (std::getline(in, line)) {
        line_number++;
        auto toks = text::tokens(text::drop_comment(line));
        if (toks.empty()) {
            continue;
        }
        if (!n) {
            if (toks.size() == 3 && toks[0] == "HAM") {
                if (auto v = text::key_value(toks[1], "n")) {
                    n = text::parse_size(*v);
                }
                if (auto v = text::key_value(toks[2], "norm")) {
                    norm = text::parse_double(*v);
                }
            }
            if (!n || !norm) {
                throw std::invalid_argument(context() + "expected header 'HAM n=<qubits> norm=<1/m>'");
            }
            continue;
        }
        if (toks.size() != 2) {
            throw std::invalid_argument(context() + "expected '<KIND> <operand>'");
        }
        try {
            if (toks[0] == "PROJ") {
                PauliWord s = parse_pauli(toks[1]);
                if (s.num_qubits() != *n) {
                    throw std::invalid_argument("word " + s.str() + " does not act on " + std::to_string(*n) +
                                                " qubits");
                }
                terms.push_back(HamTerm::pauli_projector(std::move(s)));
            } else if (toks[0] == "HADTYPE") {
                terms.push_back(HamTerm::hadamard_type(parse_support(toks[1], *n)));
            } else if (toks[0] == "CONJHADTYPE") {
                terms.push_back(HamTerm::conj_hadamard_type(parse_support(toks[1], *n)));
            } else {
                throw std::invalid_argument("unknown term kind '" + std::string(toks[0]) + "'");
            }
        } catch (const ParseError &e) {
            throw ParseError(context() + e.what(), e.position());
        } catch (const std::out_of_range &e) {
            throw std::out_of_range(context() + e.what());
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(context() + e.what());
        }
    }
    if (!n) {
        throw std::invalid_argument("Hamiltonian: missing 'HAM n=<qubits> norm=<1/m>' header");
    }
    if (terms.empty()) {
        throw std::invalid_argument("Hamiltonian: no terms");
    }
    double expected = 1.0 / static_cast<double>(terms.size());
    if (std::abs(*norm - expected) > 1e-12 * expected + 1e-15) {
        throw std::invalid_argument("Hamiltonian: norm=" + std::to_string(*norm) + " but there are " +
                                    std::to_string(terms.size()) + " terms");
    }
    return LocalHamiltonian(*n, std::move(terms));
}

void write_hamiltonian(std::ostream &out, const LocalHamiltonian &h) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", h.normalization());
    out << "HAM n=" << h.num_qubits() << " norm=" << buf << '\n';
    for (size_t i = 0; i < h.num_terms(); i++) {
        const HamTerm &t = h.terms()[i];
        switch (t.kind()) {
            case TermKind::PauliProjector:
                out << "PROJ " << t.projector().str() << '\n';
                break;
            case TermKind::HadamardType:
                out << "HADTYPE " << t.support().str() << '\n';
                break;
            case TermKind::ConjHadamardType:
                out << "CONJHADTYPE " << t.support().str() << '\n';
                break;
            case TermKind::Dense:
                throw std::invalid_argument("write_hamiltonian: term " + std::to_string(i) +
                                            " is Dense and has no text form");
        }
    }
}

}  // namespace stabcert
