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

#include "stabcert/pauli.h"

#include <bit>

namespace stabcert {

namespace {

void require_same_size(const PauliWord &p, const PauliWord &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli words act on different qubit counts: " + std::to_string(p.num_qubits()) +
                                    " vs " + std::to_string(q.num_qubits()));
    }
}

int normalize_phase(int phase) {
    return ((phase % 4) + 4) % 4;
}

}  // namespace

PauliWord::PauliWord(BitVector x_bits, BitVector z_bits, int phase_exp)
    : x_(std::move(x_bits)), z_(std::move(z_bits)), phase_(normalize_phase(phase_exp)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("Pauli word X and Z parts differ in length");
    }
}

PauliWord PauliWord::parse(std::string_view text) {
    size_t pos = 0;
    int phase = 0;
    if (pos < text.size() && text[pos] == '+') {
        pos++;
    } else if (pos < text.size() && text[pos] == '-') {
        phase = 2;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        if (pos > 0 && text[0] == '+') {
            throw ParseError("phase prefix '+i' is not a recognized spelling; use 'i'", 0);
        }
        phase += 1;
        pos++;
    }
    size_t n = text.size() - pos;
    BitVector x(n);
    BitVector z(n);
    for (size_t k = 0; k < n; k++) {
        char c = text[pos + k];
        switch (c) {
            case 'I':
                break;
            case 'X':
                x.set(k, true);
                break;
            case 'Z':
                z.set(k, true);
                break;
            case 'Y':
                x.set(k, true);
                z.set(k, true);
                break;
            default:
                throw ParseError("illegal character '" + std::string(1, c) + "' in Pauli word \"" +
                                     std::string(text) + "\"",
                                 pos + k);
        }
    }
    return PauliWord(std::move(x), std::move(z), phase);
}

PauliWord PauliWord::single(size_t n, size_t qubit, PauliLetter letter) {
    if (qubit >= n) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside a " + std::to_string(n) +
                                "-qubit word");
    }
    BitVector x(n);
    BitVector z(n);
    x.set(qubit, static_cast<int>(letter) & 1);
    z.set(qubit, static_cast<int>(letter) & 2);
    return PauliWord(std::move(x), std::move(z));
}

PauliWord PauliWord::with_phase(int phase_exp) const {
    PauliWord result = *this;
    result.phase_ = normalize_phase(phase_exp);
    return result;
}

std::string PauliWord::str() const {
    static constexpr const char *kPrefix[4] = {"", "i", "-", "-i"};
    static constexpr char kLetter[4] = {'I', 'X', 'Z', 'Y'};
    std::string out = kPrefix[phase_];
    for (size_t k = 0; k < num_qubits(); k++) {
        out.push_back(kLetter[static_cast<int>(at(k))]);
    }
    return out;
}

PauliWord parse_pauli(std::string_view text) {
    return PauliWord::parse(text);
}

PauliWord multiply(const PauliWord &p, const PauliWord &q) {
    require_same_size(p, q);
    // Per qubit, XY = iZ, YZ = iX, ZX = iY contribute +1 to the phase exponent
    // and the reversed orders contribute -1.
    auto px = p.x_bits().words();
    auto pz = p.z_bits().words();
    auto qx = q.x_bits().words();
    auto qz = q.z_bits().words();
    int phase = p.phase_exp() + q.phase_exp();
    for (size_t w = 0; w < px.size(); w++) {
        uint64_t p_x = px[w] & ~pz[w];
        uint64_t p_y = px[w] & pz[w];
        uint64_t p_z = ~px[w] & pz[w];
        uint64_t q_x = qx[w] & ~qz[w];
        uint64_t q_y = qx[w] & qz[w];
        uint64_t q_z = ~qx[w] & qz[w];
        uint64_t plus = (p_x & q_y) | (p_y & q_z) | (p_z & q_x);
        uint64_t minus = (p_y & q_x) | (p_z & q_y) | (p_x & q_z);
        phase += std::popcount(plus) - std::popcount(minus);
    }
    return PauliWord(p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(), phase);
}

bool commutes(const PauliWord &p, const PauliWord &q) {
    require_same_size(p, q);
    return !(p.x_bits().dot(q.z_bits()) ^ p.z_bits().dot(q.x_bits()));
}

SymplecticVector to_pauli_vector(const PauliWord &p) {
    return SymplecticVector(p.x_bits(), p.z_bits());
}

PauliWord from_pauli_vector(const SymplecticVector &v) {
    return PauliWord(v.a(), v.b(), 0);
}

}  // namespace stabcert
