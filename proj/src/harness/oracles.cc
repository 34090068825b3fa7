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

#include "stabcert/harness/oracles.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace stabcert::oracle {

namespace {

void check_size(size_t n) {
    if (n > kMaxOracleQubits) {
        throw std::invalid_argument("oracle refused: " + std::to_string(n) + " qubits exceeds " +
                                    std::to_string(kMaxOracleQubits));
    }
}

bool contains(const ElementSet &s, Code v) {
    return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace

Code encode(const SymplecticVector &v) {
    size_t n = v.num_qubits();
    check_size(n);
    Code c = 0;
    for (size_t q = 0; q < n; q++) {
        c |= Code{v.a().get(q)} << q;
        c |= Code{v.b().get(q)} << (n + q);
    }
    return c;
}

Code encode(const PauliWord &p) {
    size_t n = p.num_qubits();
    check_size(n);
    Code c = 0;
    for (size_t q = 0; q < n; q++) {
        PauliLetter l = p.at(q);
        bool x = l == PauliLetter::X || l == PauliLetter::Y;
        bool z = l == PauliLetter::Z || l == PauliLetter::Y;
        c |= Code{x} << q;
        c |= Code{z} << (n + q);
    }
    return c;
}

SymplecticVector decode(Code c, size_t n) {
    BitVector a(n);
    BitVector b(n);
    for (size_t q = 0; q < n; q++) {
        a.set(q, (c >> q) & 1);
        b.set(q, (c >> (n + q)) & 1);
    }
    return SymplecticVector(std::move(a), std::move(b));
}

bool omega(Code u, Code v, size_t n) {
    Code low = (Code{1} << n) - 1;
    Code ua = u & low;
    Code ub = u >> n;
    Code va = v & low;
    Code vb = v >> n;
    return std::popcount((ua & vb) ^ (ub & va)) & 1;
}

ElementSet closure(const std::vector<Code> &gens) {
    ElementSet s{0};
    for (Code g : gens) {
        if (contains(s, g)) {
            continue;
        }
        size_t size = s.size();
        for (size_t i = 0; i < size; i++) {
            s.push_back(s[i] ^ g);
        }
        std::sort(s.begin(), s.end());
    }
    return s;
}

ElementSet elements_of(const F2Subspace &w) {
    std::vector<Code> gens;
    for (const auto &v : w.basis()) {
        gens.push_back(encode(v));
    }
    return closure(gens);
}

size_t dimension(const ElementSet &s) {
    if (!std::has_single_bit(s.size())) {
        throw std::logic_error("element set size " + std::to_string(s.size()) + " is not a power of two");
    }
    return static_cast<size_t>(std::countr_zero(s.size()));
}

ElementSet sum(const ElementSet &a, const ElementSet &b) {
    std::set<Code> out;
    for (Code x : a) {
        for (Code y : b) {
            out.insert(x ^ y);
        }
    }
    return {out.begin(), out.end()};
}

ElementSet intersection(const ElementSet &a, const ElementSet &b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ElementSet perp(const ElementSet &s, size_t n) {
    if (n > kMaxScanQubits) {
        throw std::invalid_argument("perp oracle refused: scanning F_2^" + std::to_string(2 * n) + " is too large");
    }
    ElementSet out;
    for (Code v = 0; v < (Code{1} << (2 * n)); v++) {
        if (std::none_of(s.begin(), s.end(), [&](Code w) { return omega(v, w, n); })) {
            out.push_back(v);
        }
    }
    return out;
}

ElementSet radical(const ElementSet &s, size_t n) {
    ElementSet out;
    for (Code v : s) {
        if (std::none_of(s.begin(), s.end(), [&](Code w) { return omega(v, w, n); })) {
            out.push_back(v);
        }
    }
    return out;
}

bool is_isotropic(const ElementSet &s, size_t n) {
    return radical(s, n).size() == s.size();
}

size_t max_isotropic_dimension(const ElementSet &s, size_t n) {
    std::set<ElementSet> level{{0}};
    size_t best = 0;
    while (true) {
        std::set<ElementSet> next;
        for (const auto &sub : level) {
            for (Code v : s) {
                if (contains(sub, v)) {
                    continue;
                }
                if (std::any_of(sub.begin(), sub.end(), [&](Code w) { return omega(v, w, n); })) {
                    continue;
                }
                ElementSet grown = sub;
                for (Code w : sub) {
                    grown.push_back(w ^ v);
                }
                std::sort(grown.begin(), grown.end());
                next.insert(std::move(grown));
            }
        }
        if (next.empty()) {
            return best;
        }
        best++;
        level = std::move(next);
    }
}

std::vector<ElementSet> all_subspaces(size_t n) {
    if (2 * n > 6) {
        throw std::invalid_argument("all_subspaces refused: F_2^" + std::to_string(2 * n) + " has too many subspaces");
    }
    Code total = Code{1} << (2 * n);
    std::set<ElementSet> seen{{0}};
    std::set<ElementSet> level{{0}};
    while (!level.empty()) {
        std::set<ElementSet> next;
        for (const auto &sub : level) {
            for (Code v = 1; v < total; v++) {
                if (contains(sub, v)) {
                    continue;
                }
                ElementSet grown = sub;
                for (Code w : sub) {
                    grown.push_back(w ^ v);
                }
                std::sort(grown.begin(), grown.end());
                if (!seen.count(grown)) {
                    next.insert(grown);
                }
            }
        }
        seen.insert(next.begin(), next.end());
        level = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<ElementSet> all_lagrangians(size_t n) {
    std::vector<ElementSet> out;
    for (auto &s : all_subspaces(n)) {
        if (s.size() == (size_t{1} << n) && is_isotropic(s, n)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

ElementSet project(const ElementSet &s, const QubitSet &a) {
    size_t n = a.num_qubits();
    Code mask = 0;
    for (size_t q : a) {
        mask |= (Code{1} << q) | (Code{1} << (n + q));
    }
    std::set<Code> out;
    for (Code v : s) {
        out.insert(v & mask);
    }
    return {out.begin(), out.end()};
}

bool is_type_one(Code v, const QubitSet &a) {
    size_t n = a.num_qubits();
    size_t ys = 0;
    for (size_t q : a) {
        bool x = (v >> q) & 1;
        bool z = (v >> (n + q)) & 1;
        if (x != z) {
            return false;
        }
        ys += x;
    }
    return ys % 2 == 1;
}

bool is_type_two(Code v, const QubitSet &a) {
    size_t n = a.num_qubits();
    size_t xz = 0;
    for (size_t q : a) {
        bool x = (v >> q) & 1;
        bool z = (v >> (n + q)) & 1;
        xz += x != z;
    }
    return xz % 2 == 1;
}

}  // namespace stabcert::oracle
