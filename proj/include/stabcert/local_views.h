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

// Restrictions of stabilizer groups to qubit subsets, pseudo-stabilizer
// certification, and the counting arguments built on top of them.

#ifndef STABCERT_LOCAL_VIEWS_H
#define STABCERT_LOCAL_VIEWS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stabcert/hamiltonian.h"
#include "stabcert/pauli.h"
#include "stabcert/pauli_group.h"
#include "stabcert/qubit_set.h"

namespace stabcert {

/// The phaseless word equal to p on `a` and identity elsewhere.
PauliWord project(const PauliWord &p, const QubitSet &a);

/// <project(gen, a)>, as a phaseless (generally non-commuting) group.
PauliSubgroup local_view_group(const PauliSubgroup &g, const QubitSet &a);

/// Dimension of the largest commuting subgroup of the local view at `a`.
size_t local_commuting_dimension(const PauliSubgroup &g, const QubitSet &a);

struct PseudoStabCertificate {
    QubitSet set;
    bool holds = false;
    /// Dimension of the largest commuting subgroup of the local view.
    size_t local_dim = 0;
    /// Elements of g whose local views independently generate a maximal
    /// commuting subgroup of the local view. Filled in whether or not `holds`.
    std::vector<PauliWord> witness_generators;
    /// The witness is a subgroup rather than an arbitrary subset. Taking a
    /// subgroup is assumed to lose nothing; this flag records the assumption.
    bool subgroup_witness_assumed = true;
};

/// holds iff the local view at `a` has a commuting subgroup of dimension |a|.
PseudoStabCertificate is_pseudo_stabilizer(const PauliSubgroup &g, const QubitSet &a);

enum class WitnessType { TypeI, TypeII };

const char *witness_type_name(WitnessType type);

struct TypeWitness {
    WitnessType kind = WitnessType::TypeI;
    /// An element of the input group.
    PauliWord element;
    /// project(element, set).
    PauliWord local_view;
};

/// Direct check of the type conditions on a local view at `a`:
/// TypeI means only Y and I on `a` with an odd number of Y;
/// TypeII means an odd number of X and Z letters on `a` combined.
bool satisfies_type(WitnessType type, const PauliWord &local_view, const QubitSet &a);

/// For a group whose local views at `a` commute and span a k = |a| dimensional
/// space (k odd), returns an element whose local view is Type I or Type II.
///
/// Letters on `a` are mapped to bits (X, Z -> 1; Y, I -> 0) and row-reduced,
/// with every row operation mirrored as a product of group elements. Throws
/// std::invalid_argument for even k, wrong dimension, or non-commuting views.
TypeWitness find_type_witness(const PauliSubgroup &k_group, const QubitSet &a);

/// Type witnesses of g at `a`, lifted to elements of g. Requires g to be
/// pseudo-stabilizer at `a` and |a| odd. Currently returns one witness, the
/// first found by the elimination order of find_type_witness.
std::vector<TypeWitness> classify_types(const PauliSubgroup &g, const QubitSet &a);

/// Greedy selection, in term order, of terms with pairwise disjoint supports.
std::vector<size_t> select_disjoint_terms(const LocalHamiltonian &h);

/// floor(m / (k^2 - k)) for k >= 2, and m for k = 1.
size_t disjoint_floor_count(size_t m, size_t k);

struct DimensionAudit {
    size_t group_dim = 0;
    std::vector<size_t> block_dims;
    size_t block_sum = 0;
    bool holds = false;
};

/// dim g versus the sum over blocks of local_commuting_dimension.
/// Throws std::invalid_argument unless `covering` partitions [0, n).
DimensionAudit dimension_bound_audit(const PauliSubgroup &g, std::span<const QubitSet> covering);

struct PseudoStabTermCount {
    /// Terms chosen by select_disjoint_terms.
    std::vector<size_t> selected_terms;
    /// Supports of the selected terms followed by the remainder block.
    std::vector<QubitSet> blocks;
    /// Certification result per block (remainder included).
    std::vector<bool> block_holds;
    /// Selected terms whose support is pseudo-stabilizer.
    size_t count = 0;
    /// Number of selected terms.
    size_t disjoint_count = 0;
    /// disjoint_count - t.
    int64_t bound = 0;
    /// disjoint_count - (n - dim g).
    int64_t structural_bound = 0;
    /// count >= structural_bound >= bound.
    bool holds = false;
    DimensionAudit audit;
};

/// Certifies each selected disjoint term block of h for g, where g is the
/// stabilizer group of a state prepared with `t` rotations.
PseudoStabTermCount count_pseudo_stabilizer_terms(const PauliSubgroup &g, const LocalHamiltonian &h, size_t t);

/// Number of qubits on which some element of g acts non-trivially.
size_t nontrivial_qubit_count(const PauliSubgroup &g);

}  // namespace stabcert

#endif
