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

#include "stabcert/symplectic.h"

#include <set>
#include <stdexcept>
#include <string>

#include "gf2.h"

namespace stabcert {

namespace {

void require_same_ambient(const F2Subspace &a, const F2Subspace &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("subspaces live in different ambient spaces: F_2^" +
                                    std::to_string(a.ambient_dim()) + " vs F_2^" + std::to_string(b.ambient_dim()));
    }
}

// J x = [x_b | x_a], so that omega(x, y) = <x, J y> as flat vectors.
BitVector swapped_flat(const SymplecticVector &v) {
    return v.b().concat(v.a());
}

}  // namespace

SymplecticVector::SymplecticVector(BitVector a, BitVector b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) {
        throw std::invalid_argument("symplectic vector halves differ in length");
    }
}

SymplecticVector SymplecticVector::from_flat(const BitVector &bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("symplectic vector needs even length, got " + std::to_string(bits.size()));
    }
    size_t n = bits.size() / 2;
    return SymplecticVector(bits.slice(0, n), bits.slice(n, n));
}

SymplecticVector SymplecticVector::from_string(std::string_view text) {
    return from_flat(BitVector::from_string(text));
}

size_t SymplecticVector::first_set() const {
    size_t k = a_.first_set();
    if (k < a_.size()) {
        return k;
    }
    return a_.size() + b_.first_set();
}

SymplecticVector &SymplecticVector::operator^=(const SymplecticVector &other) {
    a_ ^= other.a_;
    b_ ^= other.b_;
    return *this;
}

bool symplectic_product(const SymplecticVector &x, const SymplecticVector &y) {
    if (x.len() != y.len()) {
        throw std::invalid_argument("symplectic product of vectors with lengths " + std::to_string(x.len()) +
                                    " and " + std::to_string(y.len()));
    }
    return x.a().dot(y.b()) ^ x.b().dot(y.a());
}

F2Subspace F2Subspace::span(size_t n, std::span<const SymplecticVector> rows) {
    std::vector<SymplecticVector> work;
    work.reserve(rows.size());
    for (const auto &row : rows) {
        if (row.num_qubits() != n) {
            throw std::invalid_argument("row of length " + std::to_string(row.len()) + " in F_2^" +
                                        std::to_string(2 * n));
        }
        work.push_back(row);
    }
    gf2::row_reduce(work, 2 * n);
    F2Subspace result(n);
    result.basis_ = std::move(work);
    return result;
}

F2Subspace F2Subspace::full(size_t n) {
    std::vector<SymplecticVector> rows;
    for (size_t k = 0; k < 2 * n; k++) {
        SymplecticVector v(n);
        v.set(k, true);
        rows.push_back(std::move(v));
    }
    return span(n, rows);
}

std::vector<size_t> F2Subspace::pivots() const {
    std::vector<size_t> result;
    for (const auto &row : basis_) {
        result.push_back(row.first_set());
    }
    return result;
}

SymplecticVector F2Subspace::reduce(SymplecticVector v) const {
    if (v.num_qubits() != n_) {
        throw std::invalid_argument("vector of length " + std::to_string(v.len()) + " tested against F_2^" +
                                    std::to_string(ambient_dim()));
    }
    for (const auto &row : basis_) {
        if (v.get(row.first_set())) {
            v ^= row;
        }
    }
    return v;
}

bool F2Subspace::contains(const SymplecticVector &v) const {
    return reduce(v).none();
}

bool F2Subspace::contains(const F2Subspace &other) const {
    require_same_ambient(*this, other);
    for (const auto &row : other.basis_) {
        if (!contains(row)) {
            return false;
        }
    }
    return true;
}

F2Subspace rref(size_t n, std::span<const SymplecticVector> rows) {
    return F2Subspace::span(n, rows);
}

F2Subspace subspace_sum(const F2Subspace &a, const F2Subspace &b) {
    require_same_ambient(a, b);
    std::vector<SymplecticVector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return F2Subspace::span(a.num_qubits(), rows);
}

F2Subspace intersect(const F2Subspace &a, const F2Subspace &b) {
    require_same_ambient(a, b);
    // Zassenhaus: reduce [u | u] for u in A and [v | 0] for v in B; rows whose
    // left half vanishes carry a basis of the intersection in their right half.
    size_t len = a.ambient_dim();
    std::vector<BitVector> rows;
    for (const auto &u : a.basis()) {
        BitVector f = u.flat();
        rows.push_back(f.concat(f));
    }
    for (const auto &v : b.basis()) {
        rows.push_back(v.flat().concat(BitVector(len)));
    }
    gf2::row_reduce(rows, 2 * len);
    std::vector<SymplecticVector> common;
    for (const auto &row : rows) {
        if (row.first_set() >= len) {
            common.push_back(SymplecticVector::from_flat(row.slice(len, len)));
        }
    }
    return F2Subspace::span(a.num_qubits(), common);
}

F2Subspace orthogonal_complement(const F2Subspace &w) {
    size_t n = w.num_qubits();
    std::vector<BitVector> constraints;
    for (const auto &row : w.basis()) {
        constraints.push_back(swapped_flat(row));
    }
    std::vector<SymplecticVector> kernel;
    for (const auto &v : gf2::nullspace(constraints, 2 * n)) {
        kernel.push_back(SymplecticVector::from_flat(v));
    }
    return F2Subspace::span(n, kernel);
}

F2Subspace radical(const F2Subspace &w) {
    return intersect(w, orthogonal_complement(w));
}

bool is_isotropic(const F2Subspace &w) {
    const auto &basis = w.basis();
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = i + 1; j < basis.size(); j++) {
            if (symplectic_product(basis[i], basis[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_lagrangian(const F2Subspace &w) {
    return w.dim() == w.num_qubits() && is_isotropic(w);
}

bool is_nondegenerate(const F2Subspace &w) {
    return radical(w).dim() == 0;
}

RadicalDecomposition radical_decomposition(const F2Subspace &w) {
    size_t n = w.num_qubits();
    RadicalDecomposition result;
    std::vector<SymplecticVector> rest = w.basis();
    std::vector<SymplecticVector> complement_rows;
    while (true) {
        size_t pi = rest.size();
        size_t pj = rest.size();
        for (size_t i = 0; i < rest.size() && pi == rest.size(); i++) {
            for (size_t j = i + 1; j < rest.size(); j++) {
                if (symplectic_product(rest[i], rest[j])) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == rest.size()) {
            break;
        }
        SymplecticVector e = rest[pi];
        SymplecticVector f = rest[pj];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pj));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pi));
        for (auto &r : rest) {
            bool with_e = symplectic_product(r, e);
            bool with_f = symplectic_product(r, f);
            if (with_f) {
                r ^= e;
            }
            if (with_e) {
                r ^= f;
            }
        }
        complement_rows.push_back(e);
        complement_rows.push_back(f);
        result.symplectic_pairs.emplace_back(std::move(e), std::move(f));
    }
    // Whatever survives the sweep is orthogonal to every vector of w.
    result.rad = F2Subspace::span(n, rest);
    result.complement = F2Subspace::span(n, complement_rows);
    return result;
}

F2Subspace extend_to_lagrangian(const F2Subspace &w) {
    if (!is_isotropic(w)) {
        throw std::invalid_argument("extend_to_lagrangian: input subspace is not isotropic");
    }
    F2Subspace current = w;
    while (current.dim() < current.num_qubits()) {
        F2Subspace perp = orthogonal_complement(current);
        bool grown = false;
        for (const auto &v : perp.basis()) {
            if (!current.contains(v)) {
                std::vector<SymplecticVector> rows = current.basis();
                rows.push_back(v);
                current = F2Subspace::span(current.num_qubits(), rows);
                grown = true;
                break;
            }
        }
        if (!grown) {
            throw std::logic_error("isotropic subspace below half dimension has W-perp == W");
        }
    }
    return current;
}

F2Subspace maximal_isotropic_subspace(const F2Subspace &w) {
    RadicalDecomposition parts = radical_decomposition(w);
    std::vector<SymplecticVector> rows = parts.rad.basis();
    for (const auto &pair : parts.symplectic_pairs) {
        rows.push_back(pair.first);
    }
    return F2Subspace::span(w.num_qubits(), rows);
}

unsigned long long lagrangian_count(size_t n) {
    unsigned long long total = 1;
    for (size_t i = 1; i <= n; i++) {
        total *= (1ULL << i) + 1;
    }
    return total;
}

std::vector<F2Subspace> enumerate_lagrangians(size_t n) {
    constexpr size_t kMaxQubits = 4;
    if (n > kMaxQubits) {
        throw std::invalid_argument("enumerate_lagrangians: n=" + std::to_string(n) + " would yield " +
                                    std::to_string(lagrangian_count(n)) +
                                    " subspaces; enumeration is capped at n=" + std::to_string(kMaxQubits));
    }
    std::set<F2Subspace> level{F2Subspace(n)};
    for (size_t d = 0; d < n; d++) {
        std::set<F2Subspace> next;
        for (const auto &w : level) {
            F2Subspace perp = orthogonal_complement(w);
            const auto &basis = perp.basis();
            // Walk every element of W-perp in Gray-code order.
            SymplecticVector v(n);
            size_t count = size_t{1} << basis.size();
            for (size_t step = 1; step < count; step++) {
                v ^= basis[std::countr_zero(step)];
                if (w.contains(v)) {
                    continue;
                }
                std::vector<SymplecticVector> rows = w.basis();
                rows.push_back(v);
                next.insert(F2Subspace::span(n, rows));
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

std::vector<SymplecticVector> read_matrix(std::istream &in) {
    std::vector<SymplecticVector> rows;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            if (rows.empty()) {
                continue;
            }
            break;
        }
        SymplecticVector row;
        try {
            row = SymplecticVector::from_string(line);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("matrix line " + std::to_string(line_number) + ": " + e.what());
        }
        if (!rows.empty() && row.len() != rows.front().len()) {
            throw std::invalid_argument("matrix line " + std::to_string(line_number) + ": row length " +
                                        std::to_string(row.len()) + " differs from " +
                                        std::to_string(rows.front().len()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_matrix(std::ostream &out, std::span<const SymplecticVector> rows) {
    for (const auto &row : rows) {
        out << row.str() << '\n';
    }
    out << '\n';
}

}  // namespace stabcert
