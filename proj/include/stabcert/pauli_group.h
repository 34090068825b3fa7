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

#ifndef STABCERT_PAULI_GROUP_H
#define STABCERT_PAULI_GROUP_H

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "stabcert/pauli.h"
#include "stabcert/symplectic.h"

namespace stabcert {

/// Raised when a phaseful generating set does not describe a stabilizer group
/// (a non-commuting pair, a non-Hermitian generator, or -I in the span).
class NotAStabilizerGroup : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class GroupKind {
    /// Subgroup of the phaseless Pauli group; generator phases are dropped.
    phaseless,
    /// Stabilizer group: commuting, Hermitian generators, -I not generated.
    stabilizer,
};

/// Subgroup of the (phaseless or phaseful) Pauli group held by independent generators.
class PauliSubgroup {
   public:
    PauliSubgroup() = default;
    /// Trivial group on n qubits.
    explicit PauliSubgroup(size_t n, GroupKind kind = GroupKind::phaseless) : n_(n), kind_(kind) {
    }

    size_t num_qubits() const {
        return n_;
    }
    GroupKind kind() const {
        return kind_;
    }
    bool phaseful() const {
        return kind_ == GroupKind::stabilizer;
    }
    const std::vector<PauliWord> &generators() const {
        return generators_;
    }
    size_t dim() const {
        return generators_.size();
    }
    /// Span of the generators' Pauli vectors.
    F2Subspace pauli_vectors() const;

    /// The phaseless image of this group (same dimension for stabilizer groups).
    PauliSubgroup quotient() const;

    /// The group element prod_{k in mask} generators[k], with exact phase.
    PauliWord element(const BitVector &mask) const;

   private:
    friend PauliSubgroup independent_generators(size_t, std::span<const PauliWord>, GroupKind);
    size_t n_ = 0;
    GroupKind kind_ = GroupKind::phaseless;
    std::vector<PauliWord> generators_;
};

/// Drops words that are products of earlier ones. For GroupKind::stabilizer,
/// throws NotAStabilizerGroup if a pair anticommutes, a generator is not
/// Hermitian, or a dependent word disagrees in sign with the product that
/// spans it (which would put -I in the group).
PauliSubgroup independent_generators(size_t n, std::span<const PauliWord> words,
                                     GroupKind kind = GroupKind::phaseless);

/// Expresses p in terms of g's generators: the index mask, or nullopt if the
/// Pauli vector of p is outside the span.
std::optional<BitVector> decompose(const PauliSubgroup &g, const PauliWord &p);

/// Span membership of the Pauli vector; for stabilizer groups the sign must
/// also match the product of generators that produces it.
bool member(const PauliSubgroup &g, const PauliWord &p);

/// {S, X-bar, Z-bar}: r center generators plus l anticommuting pairs.
struct CanonicalBasis {
    std::vector<PauliWord> s_gens;
    std::vector<PauliWord> x_gens;
    std::vector<PauliWord> z_gens;

    size_t r() const {
        return s_gens.size();
    }
    size_t l() const {
        return x_gens.size();
    }
};

/// Canonical basis of a phaseless subgroup. Pairs are found by scanning
/// generators left to right and taking the first anticommuting pair; the rest
/// are swept to commute with the pair, and the process repeats. The result is
/// re-verified (independence, center, pairing, generation) before returning.
CanonicalBasis canonical_basis(const PauliSubgroup &m);

/// Z(M), generated by the S-part of the canonical basis.
PauliSubgroup center(const PauliSubgroup &m);

/// c(M) = r + l: the dimension of a largest commuting subgroup of M.
size_t max_commuting_dimension(const PauliSubgroup &m);

/// The commuting subgroup <S u X-bar> of dimension c(M).
PauliSubgroup max_commuting_subgroup(const PauliSubgroup &m);

/// Generator-list text format: one Pauli word per line; '#' starts a comment;
/// blank lines are ignored. All words must have the same length.
std::vector<PauliWord> read_generators(std::istream &in);
void write_generators(std::ostream &out, std::span<const PauliWord> words);

}  // namespace stabcert

#endif
