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

#include "stabcert/local_views.h"

#include <stdexcept>
#include <string>

#include "gf2.h"

namespace stabcert {

namespace {

void check_set(const PauliSubgroup &g, const QubitSet &a) {
    if (a.num_qubits() != g.num_qubits()) {
        throw std::invalid_argument("qubit set over " + std::to_string(a.num_qubits()) +
                                    " qubits used with a group on " + std::to_string(g.num_qubits()));
    }
}

std::vector<SymplecticVector> view_vectors(const PauliSubgroup &g, const QubitSet &a) {
    std::vector<SymplecticVector> out;
    for (const auto &gen : g.generators()) {
        out.push_back(to_pauli_vector(project(gen, a)));
    }
    return out;
}

// Element of g whose local view equals `view`, given the generators' views.
std::optional<PauliWord> lift(const PauliSubgroup &g, const std::vector<SymplecticVector> &views, const PauliWord &view) {
    auto mask = gf2::solve(views, to_pauli_vector(view), 2 * g.num_qubits());
    if (!mask) {
        return std::nullopt;
    }
    return g.element(*mask);
}

// Bit j is 1 iff the letter at a[j] is X or Z.
BitVector xz_indicator(const PauliWord &p, const QubitSet &a) {
    BitVector f(a.size());
    for (size_t j = 0; j < a.size(); j++) {
        f.set(j, p.x_bits().get(a[j]) != p.z_bits().get(a[j]));
    }
    return f;
}

PauliWord y_word(size_t n, const QubitSet &a, const std::vector<size_t> &local_positions) {
    PauliWord w(n);
    for (size_t j : local_positions) {
        w = w * PauliWord::single(n, a[j], PauliLetter::Y);
    }
    return w.phaseless();
}

}  // namespace

PauliWord project(const PauliWord &p, const QubitSet &a) {
    size_t n = p.num_qubits();
    if (a.num_qubits() != n) {
        throw std::invalid_argument("qubit set over " + std::to_string(a.num_qubits()) + " qubits used with word " +
                                    p.str());
    }
    BitVector x(n);
    BitVector z(n);
    for (size_t q : a) {
        x.set(q, p.x_bits().get(q));
        z.set(q, p.z_bits().get(q));
    }
    return PauliWord(std::move(x), std::move(z));
}

PauliSubgroup local_view_group(const PauliSubgroup &g, const QubitSet &a) {
    check_set(g, a);
    std::vector<PauliWord> views;
    for (const auto &gen : g.generators()) {
        views.push_back(project(gen, a));
    }
    return independent_generators(g.num_qubits(), views);
}

size_t local_commuting_dimension(const PauliSubgroup &g, const QubitSet &a) {
    return max_commuting_dimension(local_view_group(g, a));
}

PseudoStabCertificate is_pseudo_stabilizer(const PauliSubgroup &g, const QubitSet &a) {
    check_set(g, a);
    PseudoStabCertificate cert;
    cert.set = a;
    std::vector<SymplecticVector> views = view_vectors(g, a);
    CanonicalBasis basis = canonical_basis(local_view_group(g, a));
    cert.local_dim = basis.r() + basis.l();
    cert.holds = cert.local_dim == a.size();

    std::vector<PauliWord> targets = basis.s_gens;
    targets.insert(targets.end(), basis.x_gens.begin(), basis.x_gens.end());
    std::vector<PauliWord> lifted_views;
    for (const auto &t : targets) {
        auto element = lift(g, views, t);
        if (!element) {
            throw std::logic_error("local view basis word " + t.str() + " has no preimage in the group");
        }
        lifted_views.push_back(project(*element, a));
        cert.witness_generators.push_back(std::move(*element));
    }
    for (size_t i = 0; i < lifted_views.size(); i++) {
        for (size_t j = i + 1; j < lifted_views.size(); j++) {
            if (!commutes(lifted_views[i], lifted_views[j])) {
                throw std::logic_error("pseudo-stabilizer witness local views do not commute");
            }
        }
    }
    if (independent_generators(g.num_qubits(), lifted_views).dim() != lifted_views.size()) {
        throw std::logic_error("pseudo-stabilizer witness local views are dependent");
    }
    return cert;
}

const char *witness_type_name(WitnessType type) {
    return type == WitnessType::TypeI ? "TypeI" : "TypeII";
}

bool satisfies_type(WitnessType type, const PauliWord &local_view, const QubitSet &a) {
    size_t y_count = 0;
    size_t xz_count = 0;
    for (size_t q : a) {
        switch (local_view.at(q)) {
            case PauliLetter::Y:
                y_count++;
                break;
            case PauliLetter::X:
            case PauliLetter::Z:
                xz_count++;
                break;
            case PauliLetter::I:
                break;
        }
    }
    if (type == WitnessType::TypeI) {
        return xz_count == 0 && y_count % 2 == 1;
    }
    return xz_count % 2 == 1;
}

TypeWitness find_type_witness(const PauliSubgroup &k_group, const QubitSet &a) {
    check_set(k_group, a);
    size_t n = k_group.num_qubits();
    size_t k = a.size();
    if (k % 2 == 0) {
        throw std::invalid_argument("find_type_witness needs an odd number of qubits, got " + std::to_string(k));
    }
    if (k_group.dim() != k) {
        throw std::invalid_argument("find_type_witness needs a group of dimension " + std::to_string(k) + ", got " +
                                    std::to_string(k_group.dim()));
    }
    std::vector<PauliWord> views;
    for (const auto &gen : k_group.generators()) {
        views.push_back(project(gen, a));
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            if (!commutes(views[i], views[j])) {
                throw std::invalid_argument("find_type_witness: local views " + views[i].str() + " and " +
                                            views[j].str() + " anticommute");
            }
        }
    }
    std::vector<SymplecticVector> view_vecs = view_vectors(k_group, a);
    if (F2Subspace::span(n, view_vecs).dim() != k) {
        throw std::invalid_argument("find_type_witness: local views do not span a " + std::to_string(k) +
                                    "-dimensional space");
    }

    // Gauss-Jordan on the X/Z indicator rows, mirrored onto group elements.
    struct Row {
        BitVector f;
        PauliWord element;
    };
    std::vector<Row> rows;
    for (const auto &gen : k_group.generators()) {
        rows.push_back({xz_indicator(gen, a), gen});
    }
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < k; col++) {
        size_t found = rank;
        while (found < k && !rows[found].f.get(col)) {
            found++;
        }
        if (found == k) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t r = 0; r < k; r++) {
            if (r != rank && rows[r].f.get(col)) {
                rows[r].f ^= rows[rank].f;
                rows[r].element = rows[r].element * rows[rank].element;
            }
        }
        pivots.push_back(col);
        rank++;
    }

    auto finish = [&](WitnessType type, PauliWord element) {
        if (!k_group.phaseful()) {
            element = element.phaseless();
        }
        TypeWitness w{type, element, project(element, a)};
        if (!satisfies_type(type, w.local_view, a)) {
            throw std::logic_error(std::string("find_type_witness produced ") + w.local_view.str() +
                                   ", which is not " + witness_type_name(type));
        }
        return w;
    };
    auto y_type_witness = [&](const std::vector<size_t> &positions) {
        PauliWord target = y_word(n, a, positions);
        auto element = lift(k_group, view_vecs, target);
        if (!element) {
            throw std::logic_error("Y-type word " + target.str() + " commutes with the group but is not in it");
        }
        return finish(WitnessType::TypeI, *element);
    };

    size_t ell = rank;
    if (ell == 0) {
        std::vector<size_t> all;
        for (size_t j = 0; j < k; j++) {
            all.push_back(j);
        }
        return y_type_witness(all);
    }
    if (ell < k) {
        std::vector<bool> is_pivot(k, false);
        for (size_t p : pivots) {
            is_pivot[p] = true;
        }
        for (size_t c = 0; c < k; c++) {
            if (is_pivot[c]) {
                continue;
            }
            std::vector<size_t> positions{c};
            for (size_t r = 0; r < ell; r++) {
                if (rows[r].f.get(c)) {
                    positions.push_back(pivots[r]);
                }
            }
            if ((positions.size() - 1) % 2 == 0) {
                return y_type_witness(positions);
            }
        }
    }
    PauliWord product(n);
    for (size_t r = 0; r < ell; r++) {
        product = product * rows[r].element;
    }
    return finish(WitnessType::TypeII, product);
}

std::vector<TypeWitness> classify_types(const PauliSubgroup &g, const QubitSet &a) {
    if (a.size() % 2 == 0) {
        throw std::invalid_argument("classify_types needs an odd number of qubits, got " + std::to_string(a.size()));
    }
    PseudoStabCertificate cert = is_pseudo_stabilizer(g, a);
    if (!cert.holds) {
        throw std::invalid_argument("classify_types: group is not pseudo-stabilizer at {" + a.str() + "}");
    }
    PauliSubgroup witness_group = independent_generators(g.num_qubits(), cert.witness_generators, g.kind());
    return {find_type_witness(witness_group, a)};
}

std::vector<size_t> select_disjoint_terms(const LocalHamiltonian &h) {
    std::vector<bool> used(h.num_qubits(), false);
    std::vector<size_t> chosen;
    for (size_t i = 0; i < h.num_terms(); i++) {
        const QubitSet &support = h.terms()[i].support();
        bool free = true;
        for (size_t q : support) {
            free = free && !used[q];
        }
        if (!free) {
            continue;
        }
        for (size_t q : support) {
            used[q] = true;
        }
        chosen.push_back(i);
    }
    return chosen;
}

size_t disjoint_floor_count(size_t m, size_t k) {
    if (k == 0) {
        throw std::invalid_argument("disjoint_floor_count needs k >= 1");
    }
    return k == 1 ? m : m / (k * k - k);
}

DimensionAudit dimension_bound_audit(const PauliSubgroup &g, std::span<const QubitSet> covering) {
    size_t n = g.num_qubits();
    for (const auto &block : covering) {
        check_set(g, block);
    }
    if (!is_partition(n, covering)) {
        throw std::invalid_argument("dimension_bound_audit: blocks do not partition the qubits");
    }
    DimensionAudit audit;
    audit.group_dim = g.dim();
    for (const auto &block : covering) {
        size_t d = local_commuting_dimension(g, block);
        audit.block_dims.push_back(d);
        audit.block_sum += d;
    }
    audit.holds = audit.group_dim <= audit.block_sum;
    return audit;
}

PseudoStabTermCount count_pseudo_stabilizer_terms(const PauliSubgroup &g, const LocalHamiltonian &h, size_t t) {
    size_t n = g.num_qubits();
    if (h.num_qubits() != n) {
        throw std::invalid_argument("group and Hamiltonian act on different qubit counts");
    }
    PseudoStabTermCount result;
    result.selected_terms = select_disjoint_terms(h);
    for (size_t i : result.selected_terms) {
        result.blocks.push_back(h.terms()[i].support());
    }
    result.blocks.push_back(remainder(n, result.blocks));
    for (size_t b = 0; b < result.blocks.size(); b++) {
        bool holds = is_pseudo_stabilizer(g, result.blocks[b]).holds;
        result.block_holds.push_back(holds);
        if (holds && b + 1 < result.blocks.size()) {
            result.count++;
        }
    }
    result.disjoint_count = result.selected_terms.size();
    auto p = static_cast<int64_t>(result.disjoint_count);
    result.bound = p - static_cast<int64_t>(t);
    result.structural_bound = p - (static_cast<int64_t>(n) - static_cast<int64_t>(g.dim()));
    result.audit = dimension_bound_audit(g, result.blocks);
    result.holds = static_cast<int64_t>(result.count) >= result.structural_bound &&
                   result.structural_bound >= result.bound && result.audit.holds;
    return result;
}

size_t nontrivial_qubit_count(const PauliSubgroup &g) {
    BitVector touched(g.num_qubits());
    for (const auto &gen : g.generators()) {
        touched |= gen.x_bits();
        touched |= gen.z_bits();
    }
    return touched.popcount();
}

}  // namespace stabcert
