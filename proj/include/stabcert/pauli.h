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

#ifndef STABCERT_PAULI_H
#define STABCERT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stabcert/bits.h"
#include "stabcert/symplectic.h"

namespace stabcert {

/// Thrown for malformed text input; carries the 0-based offending position.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t position)
        : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"), position_(position) {
    }
    size_t position() const {
        return position_;
    }

   private:
    size_t position_;
};

enum class PauliLetter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// An element i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1} of the n-qubit Pauli group.
///
/// Qubit k carries I/X/Z/Y exactly when (x_k, z_k) = (0,0)/(1,0)/(0,1)/(1,1),
/// with Y the Hermitian Pauli matrix. A word is Hermitian iff its phase is even.
///
/// The phaseless group is represented by words with phase 0; functions that
/// ignore the phase say so.
class PauliWord {
   public:
    PauliWord() = default;
    /// Identity on n qubits.
    explicit PauliWord(size_t n) : x_(n), z_(n) {
    }
    PauliWord(BitVector x_bits, BitVector z_bits, int phase_exp = 0);

    /// Parses an optional phase prefix (`+`, `-`, `i`, `-i`) followed by letters I/X/Y/Z.
    static PauliWord parse(std::string_view text);
    /// Single-letter word: `letter` on `qubit`, identity elsewhere.
    static PauliWord single(size_t n, size_t qubit, PauliLetter letter);

    size_t num_qubits() const {
        return x_.size();
    }
    int phase_exp() const {
        return phase_;
    }
    const BitVector &x_bits() const {
        return x_;
    }
    const BitVector &z_bits() const {
        return z_;
    }
    PauliLetter at(size_t qubit) const {
        return static_cast<PauliLetter>(int{x_.get(qubit)} | (int{z_.get(qubit)} << 1));
    }

    PauliWord with_phase(int phase_exp) const;
    PauliWord phaseless() const {
        return with_phase(0);
    }
    bool is_hermitian() const {
        return phase_ % 2 == 0;
    }
    /// True when every qubit carries I, regardless of phase.
    bool is_identity_up_to_phase() const {
        return x_.none() && z_.none();
    }
    /// Number of non-identity qubits.
    size_t weight() const {
        return (x_ | z_).popcount();
    }

    /// Canonical spelling: prefix "", "i", "-", "-i" for phases 0..3.
    std::string str() const;

    friend bool operator==(const PauliWord &, const PauliWord &) = default;

   private:
    BitVector x_;
    BitVector z_;
    int phase_ = 0;
};

PauliWord parse_pauli(std::string_view text);

/// Exact product p * q; throws std::invalid_argument on a size mismatch.
PauliWord multiply(const PauliWord &p, const PauliWord &q);
inline PauliWord operator*(const PauliWord &p, const PauliWord &q) {
    return multiply(p, q);
}

/// True iff p and q commute; phases are ignored.
bool commutes(const PauliWord &p, const PauliWord &q);
/// +1 when p and q commute, -1 when they anticommute.
inline int commutator(const PauliWord &p, const PauliWord &q) {
    return commutes(p, q) ? +1 : -1;
}

/// Phase-dropping map to F_2^{2n}: a = X-part, b = Z-part.
SymplecticVector to_pauli_vector(const PauliWord &p);
/// Phaseless word X^{a_1} Z^{b_1} (x) ... ; identifies (1,1) with Y.
PauliWord from_pauli_vector(const SymplecticVector &v);

}  // namespace stabcert

#endif
