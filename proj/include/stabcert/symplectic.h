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

// Linear and symplectic algebra over GF(2) on the standard space F_2^{2n}.
//
// Vectors use the layout [a | b] with a, b in F_2^n, so that the Pauli vector
// of a phaseless Pauli word has a = X-part and b = Z-part. The symplectic
// product is omega(x, y) = <x_a, y_b> + <x_b, y_a> (mod 2).

#ifndef STABCERT_SYMPLECTIC_H
#define STABCERT_SYMPLECTIC_H

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabcert/bits.h"

namespace stabcert {

/// A vector of F_2^{2n} stored as its two halves.
class SymplecticVector {
   public:
    SymplecticVector() = default;
    /// Zero vector of length 2n.
    explicit SymplecticVector(size_t n) : a_(n), b_(n) {
    }
    SymplecticVector(BitVector a, BitVector b);

    /// Interprets a flat bit vector of even length as [a | b].
    static SymplecticVector from_flat(const BitVector &bits);
    /// Parses 2n characters of '0'/'1'.
    static SymplecticVector from_string(std::string_view text);

    size_t num_qubits() const {
        return a_.size();
    }
    size_t len() const {
        return 2 * a_.size();
    }
    const BitVector &a() const {
        return a_;
    }
    const BitVector &b() const {
        return b_;
    }

    /// Flat index access: k < n addresses a, otherwise b.
    bool get(size_t k) const {
        return k < a_.size() ? a_.get(k) : b_.get(k - a_.size());
    }
    void set(size_t k, bool value) {
        if (k < a_.size()) {
            a_.set(k, value);
        } else {
            b_.set(k - a_.size(), value);
        }
    }
    /// Lowest flat index holding a one, or len() for the zero vector.
    size_t first_set() const;
    bool none() const {
        return a_.none() && b_.none();
    }

    SymplecticVector &operator^=(const SymplecticVector &other);
    friend SymplecticVector operator^(SymplecticVector x, const SymplecticVector &y) {
        return x ^= y;
    }

    BitVector flat() const {
        return a_.concat(b_);
    }
    std::string str() const {
        return a_.str() + b_.str();
    }

    friend bool operator==(const SymplecticVector &, const SymplecticVector &) = default;
    friend auto operator<=>(const SymplecticVector &, const SymplecticVector &) = default;

   private:
    BitVector a_;
    BitVector b_;
};

/// omega(x, y); throws std::invalid_argument on a length mismatch.
bool symplectic_product(const SymplecticVector &x, const SymplecticVector &y);

/// Subspace of F_2^{2n} held by its reduced row echelon basis.
///
/// Pivots are the first set flat index of each row; they strictly increase and
/// every pivot column is zero in all other rows. Equal subspaces therefore have
/// bit-identical bases.
class F2Subspace {
   public:
    F2Subspace() = default;
    /// The zero subspace of F_2^{2n}.
    explicit F2Subspace(size_t n) : n_(n) {
    }

    /// Row-reduces `rows` (all of length 2n) into the canonical basis of their span.
    static F2Subspace span(size_t n, std::span<const SymplecticVector> rows);
    static F2Subspace full(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    size_t ambient_dim() const {
        return 2 * n_;
    }
    size_t dim() const {
        return basis_.size();
    }
    const std::vector<SymplecticVector> &basis() const {
        return basis_;
    }
    /// Pivot flat index of each basis row.
    std::vector<size_t> pivots() const;

    bool contains(const SymplecticVector &v) const;
    bool contains(const F2Subspace &other) const;
    /// Remainder of `v` after elimination by the basis; zero iff v is in the span.
    SymplecticVector reduce(SymplecticVector v) const;

    friend bool operator==(const F2Subspace &, const F2Subspace &) = default;
    friend auto operator<=>(const F2Subspace &, const F2Subspace &) = default;

   private:
    size_t n_ = 0;
    std::vector<SymplecticVector> basis_;
};

F2Subspace rref(size_t n, std::span<const SymplecticVector> rows);
F2Subspace subspace_sum(const F2Subspace &a, const F2Subspace &b);
F2Subspace intersect(const F2Subspace &a, const F2Subspace &b);
/// W-perp with respect to omega on the full non-degenerate space.
F2Subspace orthogonal_complement(const F2Subspace &w);
/// rad(W) = W intersect W-perp.
F2Subspace radical(const F2Subspace &w);
bool is_isotropic(const F2Subspace &w);
bool is_lagrangian(const F2Subspace &w);
/// True when omega restricted to `w` has trivial radical.
bool is_nondegenerate(const F2Subspace &w);

struct RadicalDecomposition {
    F2Subspace rad;
    F2Subspace complement;
    /// Basis of `complement` as omega-dual pairs (e_j, f_j): omega(e_i, f_j) = delta_ij,
    /// omega(e_i, e_j) = omega(f_i, f_j) = 0.
    std::vector<std::pair<SymplecticVector, SymplecticVector>> symplectic_pairs;
};

/// Splits w = rad(w) (+) S with S non-degenerate under the restricted form.
///
/// S is built by pivoting on the first omega-nonorthogonal pair in basis order,
/// then sweeping the pair out of the remaining vectors; the result is
/// deterministic for a given canonical basis.
RadicalDecomposition radical_decomposition(const F2Subspace &w);

/// Greedily adjoins vectors of W-perp outside W until W is Lagrangian.
/// Throws std::invalid_argument if `w` is not isotropic.
F2Subspace extend_to_lagrangian(const F2Subspace &w);

/// A maximal isotropic subspace of `w` under the restricted form:
/// rad(w) plus one vector from each symplectic pair of the complement.
/// Its dimension is (dim w + dim rad w) / 2.
F2Subspace maximal_isotropic_subspace(const F2Subspace &w);

/// Product over i = 1..n of (2^i + 1): the number of Lagrangian subspaces of F_2^{2n}.
unsigned long long lagrangian_count(size_t n);

/// Every Lagrangian subspace of F_2^{2n}, each exactly once, in canonical order.
/// Built level by level: isotropic subspaces of dimension d + 1 are the spans of
/// a dimension-d isotropic W with one vector of W-perp outside W.
/// Refuses (std::invalid_argument, with the size estimate) for n > 4.
std::vector<F2Subspace> enumerate_lagrangians(size_t n);

/// Matrix text format: one row per line of '0'/'1' characters, all of length 2n,
/// terminated by a blank line or end of input. Lines starting with '#' are skipped.
std::vector<SymplecticVector> read_matrix(std::istream &in);
void write_matrix(std::ostream &out, std::span<const SymplecticVector> rows);

}  // namespace stabcert

#endif
