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

#include "stabcert/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "text_util.h"

namespace stabcert {

namespace {

constexpr Amplitude kI{0, 1};

Amplitude i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

void check_qubit(size_t q, size_t n) {
    if (q >= n) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside [0, " + std::to_string(n) + ")");
    }
}

// P|psi> written into `out`, which must already have the right size.
void pauli_action(std::span<const Amplitude> in, const PauliWord &p, std::vector<Amplitude> &out) {
    uint64_t x = p.x_bits().low_word();
    uint64_t z = p.z_bits().low_word();
    Amplitude scale = i_pow(p.phase_exp() + std::popcount(x & z));
    for (uint64_t j = 0; j < in.size(); j++) {
        Amplitude v = in[j] * scale;
        out[j ^ x] = (std::popcount(z & j) & 1) ? -v : v;
    }
}

// In-place unnormalized Walsh-Hadamard transform: f[z] <- sum_j f[j] (-1)^{z.j}.
void walsh_hadamard(std::vector<Amplitude> &f) {
    for (size_t h = 1; h < f.size(); h <<= 1) {
        for (size_t i = 0; i < f.size(); i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                Amplitude a = f[j];
                Amplitude b = f[j + h];
                f[j] = a + b;
                f[j + h] = a - b;
            }
        }
    }
}

std::string gate_context(size_t line_number) {
    return "circuit line " + std::to_string(line_number) + ": ";
}

}  // namespace

Circuit &Circuit::add(Gate gate) {
    size_t expected = 0;
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::S:
            expected = 1;
            break;
        case GateKind::CNOT:
            expected = 2;
            break;
        case GateKind::ROT:
            expected = 0;
            break;
    }
    if (gate.targets.size() != expected) {
        throw std::invalid_argument("gate expects " + std::to_string(expected) + " targets, got " +
                                    std::to_string(gate.targets.size()));
    }
    for (size_t q : gate.targets) {
        check_qubit(q, n_);
    }
    if (gate.kind == GateKind::CNOT && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument("CNOT control and target are both qubit " + std::to_string(gate.targets[0]));
    }
    if (gate.kind == GateKind::ROT) {
        if (gate.axis.num_qubits() != n_) {
            throw std::invalid_argument("rotation axis " + gate.axis.str() + " does not act on " +
                                        std::to_string(n_) + " qubits");
        }
        if (!gate.axis.is_hermitian()) {
            throw std::invalid_argument("rotation axis " + gate.axis.str() + " is not Hermitian");
        }
        if (!std::isfinite(gate.angle)) {
            throw std::invalid_argument("rotation angle is not finite");
        }
        rotation_count_++;
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Statevector::Statevector(size_t n, std::vector<Amplitude> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (n >= 63 || amps_.size() != (size_t{1} << n)) {
        throw std::invalid_argument("statevector on " + std::to_string(n) + " qubits needs 2^" + std::to_string(n) +
                                    " amplitudes, got " + std::to_string(amps_.size()));
    }
    if (std::abs(norm() - 1) > 1e-10) {
        throw std::invalid_argument("statevector is not normalized (norm " + std::to_string(norm()) + ")");
    }
}

Statevector Statevector::zero_state(size_t n) {
    std::vector<Amplitude> amps(size_t{1} << n);
    amps[0] = 1;
    return Statevector(n, std::move(amps));
}

double Statevector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void Statevector::apply_h(size_t q) {
    check_qubit(q, n_);
    const double r = std::numbers::sqrt2 / 2;
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t j = 0; j < amps_.size(); j++) {
        if (j & bit) {
            continue;
        }
        Amplitude a = amps_[j];
        Amplitude b = amps_[j | bit];
        amps_[j] = (a + b) * r;
        amps_[j | bit] = (a - b) * r;
    }
}

void Statevector::apply_s(size_t q) {
    check_qubit(q, n_);
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t j = 0; j < amps_.size(); j++) {
        if (j & bit) {
            amps_[j] *= kI;
        }
    }
}

void Statevector::apply_cnot(size_t control, size_t target) {
    check_qubit(control, n_);
    check_qubit(target, n_);
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    uint64_t c = uint64_t{1} << control;
    uint64_t t = uint64_t{1} << target;
    for (uint64_t j = 0; j < amps_.size(); j++) {
        if ((j & c) && !(j & t)) {
            std::swap(amps_[j], amps_[j | t]);
        }
    }
}

void Statevector::apply_rotation(double angle, const PauliWord &axis) {
    if (axis.num_qubits() != n_ || !axis.is_hermitian()) {
        throw std::invalid_argument("rotation axis " + axis.str() + " is not a Hermitian word on " +
                                    std::to_string(n_) + " qubits");
    }
    std::vector<Amplitude> moved(amps_.size());
    pauli_action(amps_, axis, moved);
    Amplitude c = std::cos(angle);
    Amplitude s = kI * std::sin(angle);
    for (size_t j = 0; j < amps_.size(); j++) {
        amps_[j] = c * amps_[j] + s * moved[j];
    }
}

void Statevector::apply(const Gate &gate) {
    switch (gate.kind) {
        case GateKind::H:
            apply_h(gate.targets.at(0));
            break;
        case GateKind::S:
            apply_s(gate.targets.at(0));
            break;
        case GateKind::CNOT:
            apply_cnot(gate.targets.at(0), gate.targets.at(1));
            break;
        case GateKind::ROT:
            apply_rotation(gate.angle, gate.axis);
            break;
    }
}

Statevector simulate(const Circuit &c, size_t max_qubits) {
    if (c.num_qubits() > max_qubits) {
        throw std::invalid_argument("simulation refused: " + std::to_string(c.num_qubits()) +
                                    " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    Statevector psi = Statevector::zero_state(c.num_qubits());
    for (const auto &gate : c.gates()) {
        psi.apply(gate);
    }
    return psi;
}

Circuit psi_t_circuit(size_t n, size_t t) {
    if (t > n) {
        throw std::invalid_argument("t = " + std::to_string(t) + " exceeds n = " + std::to_string(n));
    }
    Circuit c(n);
    for (size_t q = 0; q < t; q++) {
        c.add(Gate::h(q));
        c.add(Gate::rot(std::numbers::pi / 8, PauliWord::single(n, q, PauliLetter::Y)));
    }
    return c;
}

Statevector prepare_psi_t(size_t n, size_t t) {
    return simulate(psi_t_circuit(n, t));
}

Amplitude overlap(const Statevector &psi, const Statevector &phi) {
    if (psi.num_qubits() != phi.num_qubits()) {
        throw std::invalid_argument("overlap of states on different qubit counts");
    }
    auto a = psi.amplitudes();
    auto b = phi.amplitudes();
    Amplitude total = 0;
    for (size_t j = 0; j < a.size(); j++) {
        total += std::conj(a[j]) * b[j];
    }
    return total;
}

Statevector apply_pauli(const Statevector &psi, const PauliWord &p) {
    if (p.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("word " + p.str() + " does not act on " + std::to_string(psi.num_qubits()) +
                                    " qubits");
    }
    std::vector<Amplitude> out(psi.amplitudes().size());
    pauli_action(psi.amplitudes(), p, out);
    return Statevector(psi.num_qubits(), std::move(out));
}

Amplitude expectation(const Statevector &psi, const PauliWord &p) {
    return overlap(psi, apply_pauli(psi, p));
}

PauliSubgroup extract_stabilizer_group(const Statevector &psi, double tol, size_t max_qubits) {
    size_t n = psi.num_qubits();
    if (n > max_qubits) {
        throw std::invalid_argument("stabilizer scan refused: " + std::to_string(n) + " qubits needs 4^" +
                                    std::to_string(n) + " expectation values; cap is " +
                                    std::to_string(max_qubits));
    }
    auto amps = psi.amplitudes();
    uint64_t size = amps.size();
    std::vector<Amplitude> f(size);
    std::vector<PauliWord> found;
    for (uint64_t x = 0; x < size; x++) {
        for (uint64_t j = 0; j < size; j++) {
            f[j] = std::conj(amps[j ^ x]) * amps[j];
        }
        walsh_hadamard(f);
        for (uint64_t z = 0; z < size; z++) {
            if (x == 0 && z == 0) {
                continue;
            }
            Amplitude e = i_pow(std::popcount(x & z)) * f[z];
            if (std::abs(std::abs(e) - 1) > tol) {
                continue;
            }
            // e is close to one of +-1, +-i; only +-1 is possible for a Hermitian word.
            int k = 0;
            for (int c = 1; c < 4; c++) {
                if (std::abs(e - i_pow(c)) < std::abs(e - i_pow(k))) {
                    k = c;
                }
            }
            if (k % 2 == 1 || std::abs(e - i_pow(k)) > std::sqrt(tol)) {
                throw std::runtime_error("stabilizer scan tolerance failure: expectation of X-mask " +
                                         std::to_string(x) + " Z-mask " + std::to_string(z) +
                                         " has modulus 1 but is not real");
            }
            found.emplace_back(BitVector::from_uint64(x, n), BitVector::from_uint64(z, n), k);
        }
    }
    size_t count = found.size() + 1;
    if (!std::has_single_bit(count)) {
        throw std::runtime_error("stabilizer scan tolerance failure: " + std::to_string(count) +
                                 " stabilizing words is not a power of two");
    }
    PauliSubgroup group = independent_generators(n, found, GroupKind::stabilizer);
    if ((size_t{1} << group.dim()) != count) {
        throw std::runtime_error("stabilizer scan tolerance failure: " + std::to_string(count) +
                                 " stabilizing words do not form a group");
    }
    return group;
}

size_t stabilizer_dimension(const Statevector &psi, double tol) {
    return extract_stabilizer_group(psi, tol).dim();
}

FidelityCheck fidelity_bound_check(const Statevector &psi, const Statevector &phi, double stab_tol,
                                   double bound_tol) {
    FidelityCheck check;
    check.bound = std::numbers::sqrt2 / 2;
    check.overlap_abs = std::abs(overlap(psi, phi));
    PauliSubgroup a = extract_stabilizer_group(psi, stab_tol);
    PauliSubgroup b = extract_stabilizer_group(phi, stab_tol);
    for (const auto &g1 : a.generators()) {
        for (const auto &g2 : b.generators()) {
            if (!commutes(g1, g2)) {
                check.applicable = true;
                check.witness = {g1, g2};
                check.holds = check.overlap_abs <= check.bound + bound_tol;
                return check;
            }
        }
    }
    return check;
}

PauliWord conjugate_by(const PauliWord &p, const Gate &gate) {
    BitVector x = p.x_bits();
    BitVector z = p.z_bits();
    int phase = p.phase_exp();
    switch (gate.kind) {
        case GateKind::H: {
            size_t q = gate.targets.at(0);
            bool xq = x.get(q);
            bool zq = z.get(q);
            if (xq && zq) {
                phase += 2;
            }
            x.set(q, zq);
            z.set(q, xq);
            break;
        }
        case GateKind::S: {
            size_t q = gate.targets.at(0);
            if (x.get(q)) {
                if (z.get(q)) {
                    phase += 2;
                }
                z.flip(q);
            }
            break;
        }
        case GateKind::CNOT: {
            size_t c = gate.targets.at(0);
            size_t t = gate.targets.at(1);
            if (x.get(c) && z.get(t) && (x.get(t) == z.get(c))) {
                phase += 2;
            }
            x.set(t, x.get(t) ^ x.get(c));
            z.set(c, z.get(c) ^ z.get(t));
            break;
        }
        case GateKind::ROT:
            throw std::invalid_argument("conjugation by a rotation does not preserve Pauli words");
    }
    return PauliWord(std::move(x), std::move(z), phase);
}

PauliSubgroup clifford_stabilizer_group(const Circuit &c) {
    size_t n = c.num_qubits();
    std::vector<PauliWord> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back(PauliWord::single(n, q, PauliLetter::Z));
    }
    for (const auto &gate : c.gates()) {
        if (gate.kind == GateKind::ROT) {
            throw std::invalid_argument("clifford_stabilizer_group: circuit contains a rotation");
        }
        for (auto &g : gens) {
            g = conjugate_by(g, gate);
        }
    }
    return independent_generators(n, gens, GroupKind::stabilizer);
}

void append_random_clifford(Circuit &c, const QubitSet &qubits, size_t depth, std::mt19937_64 &rng) {
    if (qubits.empty()) {
        return;
    }
    std::uniform_int_distribution<size_t> pick_qubit(0, qubits.size() - 1);
    std::uniform_int_distribution<int> pick_kind(0, qubits.size() >= 2 ? 2 : 1);
    for (size_t layer = 0; layer < depth; layer++) {
        for (size_t k = 0; k < qubits.size(); k++) {
            int kind = pick_kind(rng);
            size_t a = qubits[pick_qubit(rng)];
            if (kind == 0) {
                c.add(Gate::h(a));
            } else if (kind == 1) {
                c.add(Gate::s(a));
            } else {
                size_t b = a;
                while (b == a) {
                    b = qubits[pick_qubit(rng)];
                }
                c.add(Gate::cnot(a, b));
            }
        }
    }
}

PauliWord random_axis(size_t n, const QubitSet &support, std::mt19937_64 &rng) {
    if (support.empty()) {
        throw std::invalid_argument("random_axis: empty support");
    }
    PauliWord w(n);
    while (w.is_identity_up_to_phase()) {
        BitVector x(n);
        BitVector z(n);
        std::uniform_int_distribution<int> letter(0, 3);
        for (size_t q : support) {
            int l = letter(rng);
            x.set(q, l & 1);
            z.set(q, l & 2);
        }
        w = PauliWord(std::move(x), std::move(z));
    }
    return w;
}

Circuit random_circuit(const RandomCircuitOptions &options) {
    size_t n = options.n;
    std::mt19937_64 rng(options.seed);
    QubitSet clifford_qubits = options.clifford_support.value_or(QubitSet::all(n));
    QubitSet rotation_qubits = options.rotation_support.value_or(QubitSet::all(n));
    Circuit clifford(n);
    append_random_clifford(clifford, clifford_qubits, options.clifford_depth, rng);

    std::uniform_int_distribution<size_t> pick_slot(0, clifford.gates().size());
    std::vector<size_t> slots;
    for (size_t k = 0; k < options.rotations; k++) {
        slots.push_back(pick_slot(rng));
    }
    std::sort(slots.begin(), slots.end());

    std::uniform_int_distribution<size_t> pick_angle(0, options.angle_set.size());
    std::uniform_real_distribution<double> uniform_angle(0, 2 * std::numbers::pi);
    auto next_rotation = [&]() {
        size_t a = pick_angle(rng);
        double angle = a < options.angle_set.size() ? options.angle_set[a] : uniform_angle(rng);
        return Gate::rot(angle, random_axis(n, rotation_qubits, rng));
    };

    Circuit result(n);
    size_t next_slot = 0;
    for (size_t g = 0; g <= clifford.gates().size(); g++) {
        while (next_slot < slots.size() && slots[next_slot] == g) {
            result.add(next_rotation());
            next_slot++;
        }
        if (g < clifford.gates().size()) {
            result.add(clifford.gates()[g]);
        }
    }
    return result;
}

Circuit read_circuit(std::istream &in) {
    std::string line;
    size_t line_number = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        line_number++;
        auto toks = text::tokens(text::drop_comment(line));
        if (toks.empty()) {
            continue;
        }
        if (!circuit) {
            std::optional<size_t> n;
            if (toks.size() == 2 && toks[0] == "CIRC") {
                if (auto v = text::key_value(toks[1], "n")) {
                    n = text::parse_size(*v);
                }
            }
            if (!n) {
                throw std::invalid_argument(gate_context(line_number) + "expected header 'CIRC n=<qubits>'");
            }
            circuit.emplace(*n);
            continue;
        }
        auto qubit = [&](std::string_view tok) {
            auto q = text::parse_size(tok);
            if (!q) {
                throw std::invalid_argument(gate_context(line_number) + "bad qubit index '" + std::string(tok) +
                                            "'");
            }
            return *q;
        };
        auto arity = [&](size_t count) {
            if (toks.size() != count + 1) {
                throw std::invalid_argument(gate_context(line_number) + std::string(toks[0]) + " takes " +
                                            std::to_string(count) + " operands");
            }
        };
        try {
            if (toks[0] == "H") {
                arity(1);
                circuit->add(Gate::h(qubit(toks[1])));
            } else if (toks[0] == "S") {
                arity(1);
                circuit->add(Gate::s(qubit(toks[1])));
            } else if (toks[0] == "CNOT") {
                arity(2);
                circuit->add(Gate::cnot(qubit(toks[1]), qubit(toks[2])));
            } else if (toks[0] == "ROT") {
                arity(2);
                auto angle = text::parse_double(toks[1]);
                if (!angle) {
                    throw std::invalid_argument(gate_context(line_number) + "bad angle '" + std::string(toks[1]) +
                                                "'");
                }
                circuit->add(Gate::rot(*angle, parse_pauli(toks[2])));
            } else {
                throw std::invalid_argument(gate_context(line_number) + "unknown gate '" + std::string(toks[0]) +
                                            "'");
            }
        } catch (const ParseError &e) {
            throw ParseError(gate_context(line_number) + e.what(), e.position());
        } catch (const std::out_of_range &e) {
            throw std::out_of_range(gate_context(line_number) + e.what());
        } catch (const std::invalid_argument &e) {
            std::string what = e.what();
            if (what.rfind("circuit line", 0) == 0) {
                throw;
            }
            throw std::invalid_argument(gate_context(line_number) + what);
        }
    }
    if (!circuit) {
        throw std::invalid_argument("circuit: missing 'CIRC n=<qubits>' header");
    }
    return *circuit;
}

void write_circuit(std::ostream &out, const Circuit &c) {
    out << "CIRC n=" << c.num_qubits() << '\n';
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
                out << "H " << g.targets[0] << '\n';
                break;
            case GateKind::S:
                out << "S " << g.targets[0] << '\n';
                break;
            case GateKind::CNOT:
                out << "CNOT " << g.targets[0] << ' ' << g.targets[1] << '\n';
                break;
            case GateKind::ROT: {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
                out << "ROT " << buf << ' ' << g.axis.str() << '\n';
                break;
            }
        }
    }
}

}  // namespace stabcert
