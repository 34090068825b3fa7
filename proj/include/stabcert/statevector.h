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

// Dense simulation of Clifford + Pauli-rotation circuits, used as the
// brute-force oracle for everything that needs an actual quantum state.
//
// Amplitude layout is little-endian: bit q of the basis index is qubit q.

#ifndef STABCERT_STATEVECTOR_H
#define STABCERT_STATEVECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "stabcert/pauli.h"
#include "stabcert/pauli_group.h"
#include "stabcert/qubit_set.h"

namespace stabcert {

using Amplitude = std::complex<double>;

inline constexpr size_t kDefaultSimulationCap = 14;
inline constexpr size_t kStabilizerScanCap = 8;
inline constexpr double kDefaultStabilizerTolerance = 1e-9;

enum class GateKind { H, S, CNOT, ROT };

/// H, S = diag(1, i), CNOT(control, target), or ROT = exp(i * angle * axis).
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<size_t> targets;
    PauliWord axis;
    double angle = 0;

    static Gate h(size_t q) {
        return {GateKind::H, {q}, {}, 0};
    }
    static Gate s(size_t q) {
        return {GateKind::S, {q}, {}, 0};
    }
    static Gate cnot(size_t control, size_t target) {
        return {GateKind::CNOT, {control, target}, {}, 0};
    }
    static Gate rot(double angle, PauliWord axis) {
        return {GateKind::ROT, {}, std::move(axis), angle};
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t n) : n_(n) {
    }

    /// Validates targets (distinct, in range) and, for ROT, a Hermitian axis on n qubits.
    Circuit &add(Gate gate);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    /// Number of ROT gates.
    size_t rotation_count() const {
        return rotation_count_;
    }

    friend bool operator==(const Circuit &, const Circuit &) = default;

   private:
    size_t n_ = 0;
    std::vector<Gate> gates_;
    size_t rotation_count_ = 0;
};

class Statevector {
   public:
    Statevector() = default;
    /// Takes ownership of 2^n amplitudes; throws unless the norm is 1 within 1e-10.
    Statevector(size_t n, std::vector<Amplitude> amplitudes);

    static Statevector zero_state(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    double norm() const;

    void apply(const Gate &gate);
    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_cnot(size_t control, size_t target);
    void apply_rotation(double angle, const PauliWord &axis);

   private:
    size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

/// C|0...0>. Throws std::invalid_argument if the circuit exceeds `max_qubits`.
Statevector simulate(const Circuit &c, size_t max_qubits = kDefaultSimulationCap);

/// Circuit for (D|+>)^{(x) t} (x) |0>^{(x) n-t}, with D = exp(i pi/8 Y).
Circuit psi_t_circuit(size_t n, size_t t);
Statevector prepare_psi_t(size_t n, size_t t);

/// <psi|phi>.
Amplitude overlap(const Statevector &psi, const Statevector &phi);

/// P|psi>, including the phase of P.
Statevector apply_pauli(const Statevector &psi, const PauliWord &p);
/// <psi|P|psi>.
Amplitude expectation(const Statevector &psi, const PauliWord &p);

/// stab(|psi>) by scanning all 4^n phaseless words.
///
/// All expectations <psi|P|psi> sharing an X-part are computed together with a
/// Walsh-Hadamard transform. Words with |<P>| within `tol` of 1 are kept with
/// the sign that makes them fix |psi>; the kept set must be closed (size 2^d)
/// and form a stabilizer group, otherwise std::runtime_error is thrown.
PauliSubgroup extract_stabilizer_group(const Statevector &psi, double tol = kDefaultStabilizerTolerance,
                                       size_t max_qubits = kStabilizerScanCap);

size_t stabilizer_dimension(const Statevector &psi, double tol = kDefaultStabilizerTolerance);

struct FidelityCheck {
    bool applicable = false;
    /// g1 in stab(psi) and g2 in stab(phi) that anticommute.
    std::optional<std::pair<PauliWord, PauliWord>> witness;
    double overlap_abs = 0;
    double bound = 0;
    /// overlap_abs <= bound + tolerance, or true when not applicable.
    bool holds = true;
};

/// If stab(psi) and stab(phi) contain an anticommuting pair, checks
/// |<psi|phi>| <= 1/sqrt(2) + `bound_tol`. Generator pairs suffice: if every
/// generator pair commutes then so does every element pair.
FidelityCheck fidelity_bound_check(const Statevector &psi, const Statevector &phi,
                                   double stab_tol = kDefaultStabilizerTolerance, double bound_tol = 1e-9);

/// Conjugation P -> U P U^dagger by a Clifford gate, with exact phase.
PauliWord conjugate_by(const PauliWord &p, const Gate &gate);

/// Generators of stab(C|0...0>) for a Clifford circuit, propagated in the
/// Heisenberg picture from Z_0..Z_{n-1}. Throws if the circuit has ROT gates.
PauliSubgroup clifford_stabilizer_group(const Circuit &c);

struct RandomCircuitOptions {
    size_t n = 1;
    /// Number of layers; each layer holds n gates drawn from {H, S, CNOT}.
    size_t clifford_depth = 4;
    /// Number of ROT gates inserted at uniformly random positions.
    size_t rotations = 0;
    uint64_t seed = 0;
    /// If set, rotation axes are supported only on these qubits.
    std::optional<QubitSet> rotation_support;
    /// If set, Clifford gates act only within these qubits.
    std::optional<QubitSet> clifford_support;
    /// Angles are drawn from these values plus a uniform draw on [0, 2 pi).
    std::vector<double> angle_set = {0.39269908169872414, 0.6283185307179586, 1.0};
};

Circuit random_circuit(const RandomCircuitOptions &options);

/// Appends `depth` layers of random H/S/CNOT gates on `qubits` (each layer has
/// |qubits| gates).
void append_random_clifford(Circuit &c, const QubitSet &qubits, size_t depth, std::mt19937_64 &rng);

/// Random non-identity phaseless axis supported on `support`.
PauliWord random_axis(size_t n, const QubitSet &support, std::mt19937_64 &rng);

/// Circuit text format: header `CIRC n=<n>`, then one gate per line:
/// `H <q>`, `S <q>`, `CNOT <q1> <q2>`, `ROT <angle-radians> <pauli-string>`.
/// '#' starts a comment. Qubits are 0-based.
Circuit read_circuit(std::istream &in);
void write_circuit(std::ostream &out, const Circuit &c);

}  // namespace stabcert

#endif
