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

// Brute-force reference implementations used to cross-check the core
// library. Everything here works on explicit element sets and shares no
// elimination code with the core, so agreement is meaningful.
//
// Vectors of F_2^{2n} (2n <= 16) are packed into an integer: bits [0, n) hold
// the X-part and bits [n, 2n) the Z-part.

#ifndef STABCERT_HARNESS_ORACLES_H
#define STABCERT_HARNESS_ORACLES_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stabcert/pauli.h"
#include "stabcert/qubit_set.h"
#include "stabcert/symplectic.h"

namespace stabcert::oracle {

using Code = uint32_t;
/// A subspace given by all of its elements, sorted, always containing 0.
using ElementSet = std::vector<Code>;

inline constexpr size_t kMaxOracleQubits = 8;
/// Limit for oracles that scan all of F_2^{2n}.
inline constexpr size_t kMaxScanQubits = 5;

Code encode(const SymplecticVector &v);
Code encode(const PauliWord &p);
SymplecticVector decode(Code c, size_t n);

/// Symplectic form on packed vectors.
bool omega(Code u, Code v, size_t n);

/// Closure of `gens` under XOR.
ElementSet closure(const std::vector<Code> &gens);
ElementSet elements_of(const F2Subspace &w);
/// log2 of the element count.
size_t dimension(const ElementSet &s);

ElementSet sum(const ElementSet &a, const ElementSet &b);
ElementSet intersection(const ElementSet &a, const ElementSet &b);
/// Every vector of F_2^{2n} that is omega-orthogonal to all of `s`.
ElementSet perp(const ElementSet &s, size_t n);
/// Elements of s orthogonal to all of s.
ElementSet radical(const ElementSet &s, size_t n);
bool is_isotropic(const ElementSet &s, size_t n);

/// Largest dimension of an isotropic subspace contained in `s`, by
/// exhaustive breadth-first search over isotropic subspaces.
size_t max_isotropic_dimension(const ElementSet &s, size_t n);

/// Every subspace of F_2^{2n}, for 2n <= 6.
std::vector<ElementSet> all_subspaces(size_t n);
/// Every Lagrangian subspace of F_2^{2n}, filtered from all_subspaces.
std::vector<ElementSet> all_lagrangians(size_t n);

/// Image of every element under restriction to the qubits of `a`.
ElementSet project(const ElementSet &s, const QubitSet &a);

/// Definition-level test of the type conditions, on a packed local view.
bool is_type_one(Code v, const QubitSet &a);
bool is_type_two(Code v, const QubitSet &a);

}  // namespace stabcert::oracle

#endif
