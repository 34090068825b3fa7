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

#include "stabcert/pauli_group.h"

#include <string>

#include "gf2.h"
#include "text_util.h"

namespace stabcert {

namespace {

std::vector<SymplecticVector> vectors_of(std::span<const PauliWord> words) {
    std::vector<SymplecticVector> result;
    result.reserve(words.size());
    for (const auto &w : words) {
        result.push_back(to_pauli_vector(w));
    }
    return result;
}

PauliWord product_of(std::span<const PauliWord> words, const BitVector &mask, size_t n) {
    PauliWord acc(n);
    for (size_t k = 0; k < words.size(); k++) {
        if (mask.get(k)) {
            acc = acc * words[k];
        }
    }
    return acc;
}

void verify_canonical_basis(const PauliSubgroup &m, const CanonicalBasis &basis) {
    size_t n = m.num_qubits();
    std::vector<PauliWord> all = basis.s_gens;
    all.insert(all.end(), basis.x_gens.begin(), basis.x_gens.end());
    all.insert(all.end(), basis.z_gens.begin(), basis.z_gens.end());
    F2Subspace spanned = F2Subspace::span(n, vectors_of(all));
    F2Subspace target = m.pauli_vectors();
    if (spanned.dim() != all.size()) {
        throw std::logic_error("canonical basis elements are not independent");
    }
    if (spanned != target) {
        throw std::logic_error("canonical basis does not generate the group");
    }
    if (F2Subspace::span(n, vectors_of(basis.s_gens)) != radical(target)) {
        throw std::logic_error("canonical basis S-part does not generate the center");
    }
    for (size_t i = 0; i < basis.l(); i++) {
        for (size_t j = 0; j < basis.l(); j++) {
            if (commutes(basis.x_gens[i], basis.z_gens[j]) != (i != j)) {
                throw std::logic_error("canonical basis X/Z pairing is violated");
            }
            if (i != j && (!commutes(basis.x_gens[i], basis.x_gens[j]) ||
                           !commutes(basis.z_gens[i], basis.z_gens[j]))) {
                throw std::logic_error("canonical basis logical pairs do not commute across pairs");
            }
        }
    }
    for (const auto &s : basis.s_gens) {
        for (const auto &w : all) {
            if (!commutes(s, w)) {
                throw std::logic_error("canonical basis center element anticommutes");
            }
        }
    }
}

}  // namespace

F2Subspace PauliSubgroup::pauli_vectors() const {
    return F2Subspace::span(n_, vectors_of(generators_));
}

PauliSubgroup PauliSubgroup::quotient() const {
    PauliSubgroup result(n_, GroupKind::phaseless);
    for (const auto &g : generators_) {
        result.generators_.push_back(g.phaseless());
    }
    return result;
}

PauliWord PauliSubgroup::element(const BitVector &mask) const {
    if (mask.size() != generators_.size()) {
        throw std::invalid_argument("element mask has " + std::to_string(mask.size()) + " bits for " +
                                    std::to_string(generators_.size()) + " generators");
    }
    PauliWord result = product_of(generators_, mask, n_);
    return phaseful() ? result : result.phaseless();
}

PauliSubgroup independent_generators(size_t n, std::span<const PauliWord> words, GroupKind kind) {
    PauliSubgroup group(n, kind);
    std::vector<SymplecticVector> accepted_vectors;
    for (const auto &word : words) {
        if (word.num_qubits() != n) {
            throw std::invalid_argument("generator " + word.str() + " does not act on " + std::to_string(n) +
                                        " qubits");
        }
        if (kind == GroupKind::stabilizer) {
            if (!word.is_hermitian()) {
                throw NotAStabilizerGroup("not a stabilizer group: generator " + word.str() +
                                          " squares to -I");
            }
            for (const auto &g : group.generators_) {
                if (!commutes(g, word)) {
                    throw NotAStabilizerGroup("not a stabilizer group: " + g.str() + " and " + word.str() +
                                              " anticommute");
                }
            }
        }
        SymplecticVector v = to_pauli_vector(word);
        auto combo = gf2::solve(accepted_vectors, v, 2 * n);
        if (!combo) {
            accepted_vectors.push_back(std::move(v));
            group.generators_.push_back(kind == GroupKind::stabilizer ? word : word.phaseless());
            continue;
        }
        if (kind == GroupKind::stabilizer) {
            PauliWord product = product_of(group.generators_, *combo, n);
            if (product.phase_exp() != word.phase_exp()) {
                throw NotAStabilizerGroup("not a stabilizer group: " + word.str() + " and " + product.str() +
                                          " are both generated, so -I is in the group");
            }
        }
    }
    return group;
}

std::optional<BitVector> decompose(const PauliSubgroup &g, const PauliWord &p) {
    if (p.num_qubits() != g.num_qubits()) {
        throw std::invalid_argument("word " + p.str() + " does not act on " + std::to_string(g.num_qubits()) +
                                    " qubits");
    }
    return gf2::solve(vectors_of(g.generators()), to_pauli_vector(p), 2 * g.num_qubits());
}

bool member(const PauliSubgroup &g, const PauliWord &p) {
    auto combo = decompose(g, p);
    if (!combo) {
        return false;
    }
    if (!g.phaseful()) {
        return true;
    }
    return g.element(*combo).phase_exp() == p.phase_exp();
}

CanonicalBasis canonical_basis(const PauliSubgroup &m) {
    std::vector<PauliWord> rest;
    for (const auto &g : m.generators()) {
        rest.push_back(g.phaseless());
    }
    CanonicalBasis basis;
    while (true) {
        size_t pi = rest.size();
        size_t pj = rest.size();
        for (size_t i = 0; i < rest.size() && pi == rest.size(); i++) {
            for (size_t j = i + 1; j < rest.size(); j++) {
                if (!commutes(rest[i], rest[j])) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == rest.size()) {
            break;
        }
        PauliWord x = rest[pi];
        PauliWord z = rest[pj];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pj));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pi));
        for (auto &g : rest) {
            if (!commutes(g, x)) {
                g = (z * g).phaseless();
            }
        }
        for (auto &g : rest) {
            if (!commutes(g, z)) {
                g = (x * g).phaseless();
            }
        }
        basis.x_gens.push_back(std::move(x));
        basis.z_gens.push_back(std::move(z));
    }
    basis.s_gens = std::move(rest);
    verify_canonical_basis(m, basis);
    return basis;
}

PauliSubgroup center(const PauliSubgroup &m) {
    return independent_generators(m.num_qubits(), canonical_basis(m).s_gens);
}

size_t max_commuting_dimension(const PauliSubgroup &m) {
    CanonicalBasis basis = canonical_basis(m);
    return basis.r() + basis.l();
}

PauliSubgroup max_commuting_subgroup(const PauliSubgroup &m) {
    CanonicalBasis basis = canonical_basis(m);
    std::vector<PauliWord> words = basis.s_gens;
    words.insert(words.end(), basis.x_gens.begin(), basis.x_gens.end());
    return independent_generators(m.num_qubits(), words);
}

std::vector<PauliWord> read_generators(std::istream &in) {
    std::vector<PauliWord> words;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        std::string_view content = text::strip(text::drop_comment(line));
        if (content.empty()) {
            continue;
        }
        PauliWord word;
        try {
            word = parse_pauli(content);
        } catch (const ParseError &e) {
            throw ParseError("generator list line " + std::to_string(line_number) + ": " + e.what(), e.position());
        }
        if (!words.empty() && word.num_qubits() != words.front().num_qubits()) {
            throw std::invalid_argument("generator list line " + std::to_string(line_number) + ": word " +
                                        word.str() + " has " + std::to_string(word.num_qubits()) +
                                        " qubits, expected " + std::to_string(words.front().num_qubits()));
        }
        words.push_back(std::move(word));
    }
    return words;
}

void write_generators(std::ostream &out, std::span<const PauliWord> words) {
    for (const auto &w : words) {
        out << w.str() << '\n';
    }
}

}  // namespace stabcert
