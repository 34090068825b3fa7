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

// Named verification suites. Each suite is deterministic given its options
// and returns a report whose failure list is empty iff every assertion held.

#ifndef STABCERT_HARNESS_SUITES_H
#define STABCERT_HARNESS_SUITES_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stabcert/hamiltonian.h"
#include "stabcert/harness/report.h"
#include "stabcert/statevector.h"

namespace stabcert {

struct SuiteOptions {
    uint64_t seed = 1;
    /// Trials per configuration; the meaning is suite-specific.
    size_t trials = 200;
    Tolerances tol;
    /// Layers of random Clifford gates in generated circuits.
    size_t clifford_depth = 3;
    /// Worker threads; 0 picks the hardware concurrency.
    size_t threads = 0;
};

struct EnergyBreakdown {
    double energy = 0;
    std::vector<double> term_energies;
    size_t rotations = 0;
    /// Set when the Hamiltonian is H_D, so the rotation count gives a bound.
    std::optional<double> bound;
};

/// True iff h consists of one HadamardType term on each single qubit, in order.
bool is_magic_hamiltonian(const LocalHamiltonian &h);

EnergyBreakdown evaluate_energy(const Circuit &c, const LocalHamiltonian &h);

/// H_D ground state energy and psi_t saturation for 1 <= n <= n_max.
VerificationReport check_magic_energies(size_t n_max, const SuiteOptions &options);

/// Random circuits for n in [n_min, n_max], t in [0, n], options.trials each:
/// energy under H_D is at least the rotation-count bound, and (if
/// `check_dimension`) the stabilizer dimension is at least n - t. Also runs
/// the psi_t saturation check up to n_max.
VerificationReport check_theorem1(size_t n_min, size_t n_max, const SuiteOptions &options,
                                  bool check_dimension = true);

/// `pairs` random state pairs with anticommuting stabilizers, plus the
/// (|0>, |+>) saturation pair.
VerificationReport check_fidelity(size_t pairs, const SuiteOptions &options);

/// Every Lagrangian subgroup on k qubits, for each odd k, yields a verified
/// type witness; counts agree with the product formula and an independent
/// enumeration. Throws std::invalid_argument for even k.
VerificationReport check_stabilizerodd(const std::vector<size_t> &ks, const SuiteOptions &options);

/// options.trials pseudo-stabilizer instances per k: the Hadamard-type term
/// on the certified set has energy at least sin^2(pi/8).
VerificationReport check_localbound(const std::vector<size_t> &ks, const SuiteOptions &options);

/// options.trials random (stabilizer group, partition) pairs on up to n_max
/// qubits, plus the equality case on |0...0>.
VerificationReport check_dimension_bound(size_t n_max, const SuiteOptions &options);

/// options.trials random circuits per t in [0, t_max] against h: the number
/// of pseudo-stabilizer disjoint terms is at least p - t.
VerificationReport check_condition(const LocalHamiltonian &h, size_t t_max, const SuiteOptions &options);

/// Symplectic subspace identities: options.trials random trials with
/// 2n <= 2 n_max, plus exhaustive checks over all subspaces of F_2^4.
VerificationReport check_symplectic(size_t n_max, const SuiteOptions &options);

/// Largest commuting subgroup dimension versus exhaustive search, for every
/// subgroup on 2 qubits and options.trials random subgroups on 3 qubits.
VerificationReport check_commuting(const SuiteOptions &options);

/// Rotated repetition-code Hamiltonian: X-type weight-3 windows, D-rotated.
LocalHamiltonian rotated_repetition_hamiltonian(size_t n);

}  // namespace stabcert

#endif
