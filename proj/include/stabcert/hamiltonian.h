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

// Local Hamiltonians (1/m) sum_i h_i built from Pauli projectors and their
// D-rotated (Hadamard-type) forms, with exact energy evaluation.
//
// Local matrices of a term use the ordering "bit j of the local index is
// qubit support[j]".

#ifndef STABCERT_HAMILTONIAN_H
#define STABCERT_HAMILTONIAN_H

#include <Eigen/Dense>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "stabcert/pauli.h"
#include "stabcert/qubit_set.h"
#include "stabcert/statevector.h"

namespace stabcert {

/// sin^2(pi/8) = (1 - 1/sqrt(2)) / 2.
double sin2_pi_over_8();

inline constexpr size_t kDenseHamiltonianCap = 6;

enum class TermKind {
    /// (I - S)/2 for a Hermitian Pauli word S.
    PauliProjector,
    /// (I - H^{(x) k})/2 on the support.
    HadamardType,
    /// (I - (-XHX)^{(x) k})/2 on the support.
    ConjHadamardType,
    /// Explicit Hermitian 2^k x 2^k matrix on the support.
    Dense,
};

const char *term_kind_name(TermKind kind);

class HamTerm {
   public:
    HamTerm() = default;

    /// Support is the set of qubits where `s` is not the identity.
    static HamTerm pauli_projector(PauliWord s);
    static HamTerm hadamard_type(QubitSet support);
    static HamTerm conj_hadamard_type(QubitSet support);
    /// Throws unless `matrix` is 2^k x 2^k, Hermitian, and has spectrum in [0, 1].
    static HamTerm dense(QubitSet support, Eigen::MatrixXcd matrix);

    TermKind kind() const {
        return kind_;
    }
    const QubitSet &support() const {
        return support_;
    }
    size_t locality() const {
        return support_.size();
    }
    /// The word S of a PauliProjector term; throws for other kinds.
    const PauliWord &projector() const;

    /// The term's 2^k x 2^k matrix on its support.
    Eigen::MatrixXcd local_matrix() const;

   private:
    TermKind kind_ = TermKind::PauliProjector;
    QubitSet support_;
    PauliWord projector_;
    Eigen::MatrixXcd matrix_;
};

class LocalHamiltonian {
   public:
    LocalHamiltonian() = default;
    /// Throws if a term acts outside [0, n) or `terms` is empty.
    LocalHamiltonian(size_t n, std::vector<HamTerm> terms);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<HamTerm> &terms() const {
        return terms_;
    }
    size_t num_terms() const {
        return terms_.size();
    }
    /// 1/m.
    double normalization() const {
        return 1.0 / static_cast<double>(terms_.size());
    }
    /// Largest term support.
    size_t locality() const;
    /// Largest number of terms acting on one qubit.
    size_t max_degree() const;

   private:
    size_t n_ = 0;
    std::vector<HamTerm> terms_;
};

/// H_D: n HadamardType terms on {0}, ..., {n-1}.
LocalHamiltonian build_magic_hamiltonian(size_t n);

/// One PauliProjector term per generator. Terms must be non-identity and
/// Hermitian, and every qubit may appear in at most `max_degree` terms
/// (default: the largest generator weight).
LocalHamiltonian build_stabilizer_hamiltonian(std::span<const PauliWord> gens,
                                              std::optional<size_t> max_degree = std::nullopt);

/// Conjugates every term by D^{(x) n}: +X-type projectors become HadamardType,
/// +Z-type become ConjHadamardType. Negatively signed X/Z-type projectors have
/// no named form and become Dense terms. Throws, naming the generator, for
/// non-CSS projectors; throws for terms that are not projectors.
LocalHamiltonian rotate_css(const LocalHamiltonian &h);

/// <psi|term|psi>, computed from the local 2^k matrix.
double term_energy(const HamTerm &term, const Statevector &psi);

/// (1/m) sum_i <psi|h_i|psi>, summed in term order.
double energy(const LocalHamiltonian &h, const Statevector &psi);

/// max(0, 1 - t/n) * sin^2(pi/8).
double theorem1_bound(size_t n, size_t t);

/// The term embedded into the full 2^n x 2^n space (n <= kDenseHamiltonianCap).
Eigen::MatrixXcd dense_term_matrix(const HamTerm &term, size_t n);
/// The full Hamiltonian matrix (n <= kDenseHamiltonianCap).
Eigen::MatrixXcd dense_matrix(const LocalHamiltonian &h);
/// Smallest eigenvalue of dense_matrix(h).
double ground_energy(const LocalHamiltonian &h);

/// X-type checks X_i X_{i+1} ... X_{i+width-1} for i = 0..n-width.
std::vector<PauliWord> repetition_x_checks(size_t n, size_t width = 3);
/// Z-type checks Z_i Z_{i+1} for i = 0..n-2.
std::vector<PauliWord> repetition_z_checks(size_t n);
/// The six weight-4 generators (three X-type, three Z-type) of the 7-qubit Steane code.
std::vector<PauliWord> steane_generators();

/// Text format: header `HAM n=<n> norm=<1/m>`, then one term per line:
/// `PROJ <signed-pauli>`, `HADTYPE <i1,i2,...>` or `CONJHADTYPE <i1,...>`.
/// Qubits are 0-based; '#' starts a comment. Dense terms cannot be written.
LocalHamiltonian read_hamiltonian(std::istream &in);
void write_hamiltonian(std::ostream &out, const LocalHamiltonian &h);

}  // namespace stabcert

#endif
