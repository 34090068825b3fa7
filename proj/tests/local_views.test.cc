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

#include <gtest/gtest.h>

#include <random>

#include "stabcert/hamiltonian.h"
#include "stabcert/harness/oracles.h"
#include "stabcert/local_views.h"
#include "stabcert/statevector.h"
#include "stabcert/symplectic.h"
#include "test_util.h"

using namespace stabcert;
namespace oracle = stabcert::oracle;
using stabcert::dense::all_words;

namespace {

PauliSubgroup group(size_t n, std::vector<std::string> words, GroupKind kind = GroupKind::phaseless) {
    std::vector<PauliWord> ws;
    for (const auto &w : words) {
        ws.push_back(parse_pauli(w));
    }
    return independent_generators(n, ws, kind);
}

oracle::ElementSet element_codes(const PauliSubgroup &g) {
    std::vector<oracle::Code> gens;
    for (const auto &w : g.generators()) {
        gens.push_back(oracle::encode(w));
    }
    return oracle::closure(gens);
}

PauliSubgroup state_group(size_t n, size_t rotations, uint64_t seed) {
    RandomCircuitOptions opts;
    opts.n = n;
    opts.rotations = rotations;
    opts.seed = seed;
    opts.clifford_depth = 3;
    return extract_stabilizer_group(simulate(random_circuit(opts)));
}

QubitSet random_set(size_t n, std::mt19937_64 &rng) {
    std::vector<size_t> members;
    for (size_t q = 0; q < n; q++) {
        if (rng() & 1) {
            members.push_back(q);
        }
    }
    if (members.empty()) {
        members.push_back(rng() % n);
    }
    return QubitSet(n, members);
}

PauliSubgroup from_codes(const oracle::ElementSet &s, size_t n) {
    std::vector<PauliWord> gens;
    for (oracle::Code c : s) {
        gens.push_back(from_pauli_vector(oracle::decode(c, n)));
    }
    return independent_generators(n, gens);
}

}  // namespace

TEST(Project, examples) {
    QubitSet a(4, {0, 1});
    EXPECT_EQ(project(parse_pauli("iIIXI"), a), parse_pauli("IIII"));
    EXPECT_EQ(project(parse_pauli("-XIZX"), a), parse_pauli("XIII"));
    EXPECT_EQ(project(parse_pauli("IXZY"), a), parse_pauli("IXII"));
    EXPECT_EQ(project(parse_pauli("XXYI"), a), parse_pauli("XXII"));
    PauliWord p = parse_pauli("-iXYZ");
    EXPECT_EQ(project(p, QubitSet::all(3)), p.phaseless());
    EXPECT_THROW(project(p, QubitSet::all(4)), std::invalid_argument);
}

TEST(Project, is_a_homomorphism) {
    for (size_t n = 1; n <= 3; n++) {
        auto words = all_words(n);
        for (size_t mask = 1; mask < (size_t{1} << n); mask++) {
            std::vector<size_t> members;
            for (size_t q = 0; q < n; q++) {
                if ((mask >> q) & 1) {
                    members.push_back(q);
                }
            }
            QubitSet a(n, members);
            for (const auto &p : words) {
                for (const auto &q : words) {
                    EXPECT_EQ(project(p * q, a), (project(p, a) * project(q, a)).phaseless());
                }
            }
        }
    }
}

TEST(LocalViewGroup, examples_and_oracle) {
    EXPECT_EQ(local_view_group(group(3, {"XII", "ZII"}), QubitSet(3, {1, 2})).dim(), 0u);
    PauliSubgroup zero = group(4, {"ZIII", "IZII", "IIZI", "IIIZ"}, GroupKind::stabilizer);
    QubitSet a(4, {1, 3});
    PauliSubgroup view = local_view_group(zero, a);
    EXPECT_EQ(element_codes(view), element_codes(group(4, {"IZII", "IIIZ"})));
    EXPECT_EQ(local_commuting_dimension(zero, a), 2u);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + trial % 4;
        PauliSubgroup g = state_group(n, rng() % (n + 1), rng());
        QubitSet s = random_set(n, rng);
        EXPECT_EQ(element_codes(local_view_group(g, s)), oracle::project(element_codes(g), s));
    }
}

TEST(PseudoStabilizer, examples) {
    // Stabilizer state on A = {0, 1} tensored with a magic qubit.
    Circuit c(3);
    c.add(Gate::h(0)).add(Gate::cnot(0, 1)).add(Gate::h(2)).add(Gate::rot(0.39269908169872414, parse_pauli("IIY")));
    PauliSubgroup g = extract_stabilizer_group(simulate(c));
    auto cert = is_pseudo_stabilizer(g, QubitSet(3, {0, 1}));
    EXPECT_TRUE(cert.holds);
    EXPECT_EQ(cert.local_dim, 2u);
    EXPECT_EQ(cert.witness_generators.size(), 2u);
    EXPECT_TRUE(cert.subgroup_witness_assumed);
    EXPECT_FALSE(is_pseudo_stabilizer(g, QubitSet(3, {2})).holds);

    auto trivial = is_pseudo_stabilizer(PauliSubgroup(3, GroupKind::stabilizer), QubitSet(3, {0}));
    EXPECT_FALSE(trivial.holds);
    EXPECT_EQ(trivial.local_dim, 0u);
}

TEST(PseudoStabilizer, matches_exhaustive_search) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 2 + trial % 5;
        PauliSubgroup g = state_group(n, rng() % 3, rng());
        QubitSet a = random_set(n, rng);
        if (a.size() > 3) {
            continue;
        }
        auto cert = is_pseudo_stabilizer(g, a);
        auto view = oracle::project(element_codes(g), a);
        size_t brute = oracle::max_isotropic_dimension(view, n);
        EXPECT_EQ(cert.local_dim, brute);
        EXPECT_EQ(cert.holds, brute == a.size());
        EXPECT_LE(cert.local_dim, a.size());
        // The witness lifts generate a commuting local view of the stated size.
        std::vector<oracle::Code> lifted;
        for (const auto &w : cert.witness_generators) {
            EXPECT_TRUE(member(g, w));
            lifted.push_back(oracle::encode(project(w, a)));
        }
        auto span = oracle::closure(lifted);
        EXPECT_EQ(oracle::dimension(span), cert.local_dim);
        EXPECT_TRUE(oracle::is_isotropic(span, n));
    }
}

TEST(PseudoStabilizer, single_qubit_sets) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 6;
        PauliSubgroup g = state_group(n, rng() % (n + 1), rng());
        for (size_t q = 0; q < n; q++) {
            QubitSet a(n, {q});
            bool touched = false;
            for (const auto &w : g.generators()) {
                touched |= !project(w, a).is_identity_up_to_phase();
            }
            EXPECT_EQ(is_pseudo_stabilizer(g, a).holds, touched);
        }
    }
}

TEST(NontrivialQubits, at_least_n_minus_t) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + trial % 6;
        size_t t = rng() % (n + 1);
        PauliSubgroup g = state_group(n, t, rng());
        EXPECT_GE(nontrivial_qubit_count(g) + t, n);
    }
}

TEST(TypeWitness, examples) {
    QubitSet one = QubitSet::all(1);
    TypeWitness y = find_type_witness(group(1, {"Y"}), one);
    EXPECT_EQ(y.kind, WitnessType::TypeI);
    EXPECT_EQ(y.local_view, parse_pauli("Y"));
    TypeWitness x = find_type_witness(group(1, {"X"}), one);
    EXPECT_EQ(x.kind, WitnessType::TypeII);
    EXPECT_EQ(x.local_view, parse_pauli("X"));
    TypeWitness xxx = find_type_witness(group(3, {"XII", "IXI", "IIX"}), QubitSet::all(3));
    EXPECT_EQ(xxx.kind, WitnessType::TypeII);
    EXPECT_EQ(xxx.local_view, parse_pauli("XXX"));
    // Brute force: XXX is the only element with an odd X+Z count.
    size_t odd = 0;
    for (oracle::Code c : element_codes(group(3, {"XII", "IXI", "IIX"}))) {
        odd += oracle::is_type_two(c, QubitSet::all(3));
    }
    EXPECT_EQ(odd, 4u);
    EXPECT_TRUE(satisfies_type(WitnessType::TypeII, parse_pauli("XXX"), QubitSet::all(3)));
    EXPECT_TRUE(satisfies_type(WitnessType::TypeI, parse_pauli("YYY"), QubitSet::all(3)));
    EXPECT_FALSE(satisfies_type(WitnessType::TypeI, parse_pauli("YYI"), QubitSet::all(3)));
    EXPECT_FALSE(satisfies_type(WitnessType::TypeII, parse_pauli("XZI"), QubitSet::all(3)));
}

TEST(TypeWitness, refuses_bad_input) {
    EXPECT_THROW(find_type_witness(group(2, {"XI", "IX"}), QubitSet::all(2)), std::invalid_argument);
    EXPECT_THROW(find_type_witness(group(1, {}), QubitSet::all(1)), std::invalid_argument);
    EXPECT_THROW(find_type_witness(group(3, {"XII", "ZII", "IIX"}), QubitSet::all(3)), std::invalid_argument);
}

TEST(TypeWitness, every_lagrangian_has_one) {
    for (size_t k : {1, 3}) {
        QubitSet a = QubitSet::all(k);
        size_t seen = 0;
        for (const auto &l : enumerate_lagrangians(k)) {
            std::vector<PauliWord> gens;
            for (const auto &v : l.basis()) {
                gens.push_back(from_pauli_vector(v));
            }
            PauliSubgroup g = independent_generators(k, gens);
            TypeWitness w = find_type_witness(g, a);
            EXPECT_TRUE(member(g, w.element));
            EXPECT_EQ(w.local_view, project(w.element, a));
            oracle::Code code = oracle::encode(w.local_view);
            EXPECT_TRUE(w.kind == WitnessType::TypeI ? oracle::is_type_one(code, a) : oracle::is_type_two(code, a));
            seen++;
        }
        EXPECT_EQ(seen, lagrangian_count(k));
    }
}

TEST(ClassifyTypes, lifted_through_embeddings) {
    // The three find_type_witness examples embedded in larger groups, with
    // generators that also act outside A.
    struct Case {
        size_t n;
        std::vector<size_t> a;
        std::vector<std::string> gens;
    };
    std::vector<Case> cases = {
        {3, {1}, {"XYX", "ZIZ", "XIX"}},
        {3, {1}, {"ZXZ", "XIX", "ZIZ"}},
        {5, {1, 2, 4}, {"ZXIZI", "IIXII", "IIIIX", "XIIXI", "ZIIZI"}},
    };
    for (const auto &c : cases) {
        PauliSubgroup g = group(c.n, c.gens, GroupKind::stabilizer);
        ASSERT_EQ(g.dim(), c.n);
        QubitSet a(c.n, c.a);
        auto ws = classify_types(g, a);
        ASSERT_EQ(ws.size(), 1u);
        EXPECT_EQ(ws[0].local_view, project(ws[0].element, a));
        EXPECT_TRUE(member(g, ws[0].element));
        EXPECT_TRUE(satisfies_type(ws[0].kind, project(ws[0].element, a), a));
    }
    EXPECT_THROW(classify_types(group(2, {"XX", "ZZ"}, GroupKind::stabilizer), QubitSet::all(2)),
                 std::invalid_argument);
    EXPECT_THROW(classify_types(group(2, {"IZ"}, GroupKind::stabilizer), QubitSet(2, {0})),
                 std::invalid_argument);
}

TEST(ClassifyTypes, random_pseudo_stabilizer_states) {
    std::mt19937_64 rng(35);
    size_t checked = 0;
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 2 + trial % 5;
        PauliSubgroup g = state_group(n, rng() % 3, rng());
        QubitSet a = random_set(n, rng);
        if (a.size() % 2 == 0 || !is_pseudo_stabilizer(g, a).holds) {
            continue;
        }
        for (const auto &w : classify_types(g, a)) {
            EXPECT_TRUE(member(g, w.element));
            oracle::Code code = oracle::encode(project(w.element, a));
            EXPECT_TRUE(oracle::is_type_one(code, a) || oracle::is_type_two(code, a));
        }
        checked++;
    }
    EXPECT_GT(checked, 50u);
}

TEST(DisjointTerms, examples) {
    LocalHamiltonian magic = build_magic_hamiltonian(5);
    EXPECT_EQ(select_disjoint_terms(magic).size(), 5u);
    LocalHamiltonian single(3, {HamTerm::hadamard_type(QubitSet(3, {0, 2}))});
    EXPECT_EQ(select_disjoint_terms(single), (std::vector<size_t>{0}));
    for (size_t n = 3; n <= 12; n++) {
        LocalHamiltonian rep = rotate_css(build_stabilizer_hamiltonian(repetition_x_checks(n)));
        auto picked = select_disjoint_terms(rep);
        EXPECT_GE(picked.size(), disjoint_floor_count(rep.num_terms(), 3));
        for (size_t i = 0; i < picked.size(); i++) {
            for (size_t j = i + 1; j < picked.size(); j++) {
                EXPECT_TRUE(rep.terms()[picked[i]].support().disjoint(rep.terms()[picked[j]].support()));
            }
        }
    }
    EXPECT_EQ(disjoint_floor_count(7, 1), 7u);
    EXPECT_EQ(disjoint_floor_count(13, 3), 2u);
}

TEST(DisjointTerms, floor_is_not_guaranteed_in_general) {
    // Two triangles of 2-local terms: m = 6 and k = 2 give a floor of 3, but
    // any set of pairwise disjoint edges holds at most one edge per triangle.
    std::vector<std::pair<size_t, size_t>> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    std::vector<HamTerm> terms;
    for (auto [u, v] : edges) {
        std::string w(6, 'I');
        w[u] = 'Z';
        w[v] = 'Z';
        terms.push_back(HamTerm::pauli_projector(parse_pauli(w)));
    }
    LocalHamiltonian h(6, terms);
    size_t best = 0;
    for (size_t mask = 0; mask < 64; mask++) {
        std::vector<size_t> used;
        bool ok = true;
        for (size_t e = 0; e < 6 && ok; e++) {
            if ((mask >> e) & 1) {
                for (size_t f : used) {
                    ok &= h.terms()[e].support().disjoint(h.terms()[f].support());
                }
                used.push_back(e);
            }
        }
        if (ok) {
            best = std::max(best, used.size());
        }
    }
    EXPECT_EQ(best, 2u);
    EXPECT_EQ(select_disjoint_terms(h).size(), 2u);
    EXPECT_EQ(disjoint_floor_count(6, 2), 3u);
}

TEST(DimensionAudit, examples) {
    size_t n = 5;
    std::vector<PauliWord> zs;
    for (size_t q = 0; q < n; q++) {
        zs.push_back(PauliWord::single(n, q, PauliLetter::Z));
    }
    PauliSubgroup zero = independent_generators(n, zs, GroupKind::stabilizer);
    std::vector<QubitSet> blocks{QubitSet(n, {0, 3}), QubitSet(n, {1}), QubitSet(n, {2, 4})};
    auto audit = dimension_bound_audit(zero, blocks);
    EXPECT_TRUE(audit.holds);
    EXPECT_EQ(audit.group_dim, n);
    EXPECT_EQ(audit.block_sum, n);
    EXPECT_EQ(audit.block_dims, (std::vector<size_t>{2, 1, 2}));

    auto trivial = dimension_bound_audit(PauliSubgroup(n, GroupKind::stabilizer), blocks);
    EXPECT_TRUE(trivial.holds);
    EXPECT_EQ(trivial.group_dim, 0u);
    blocks.pop_back();
    EXPECT_THROW(dimension_bound_audit(zero, blocks), std::invalid_argument);
}

TEST(DimensionAudit, random_groups_and_partitions) {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + trial % 8;
        PauliSubgroup g = state_group(n, rng() % (n + 1), rng());
        std::vector<size_t> label(n);
        size_t blocks_wanted = 1 + rng() % n;
        for (auto &l : label) {
            l = rng() % blocks_wanted;
        }
        std::vector<QubitSet> blocks;
        for (size_t b = 0; b < blocks_wanted; b++) {
            std::vector<size_t> members;
            for (size_t q = 0; q < n; q++) {
                if (label[q] == b) {
                    members.push_back(q);
                }
            }
            blocks.emplace_back(n, members);
        }
        auto audit = dimension_bound_audit(g, blocks);
        EXPECT_TRUE(audit.holds);
        EXPECT_LE(audit.group_dim, audit.block_sum);
        if (n <= 4) {
            size_t sum = 0;
            for (const auto &b : blocks) {
                sum += oracle::max_isotropic_dimension(oracle::project(element_codes(g), b), n);
            }
            EXPECT_EQ(sum, audit.block_sum);
        }
    }
}

TEST(PseudoStabTermCount, magic_hamiltonian) {
    size_t n = 6;
    LocalHamiltonian h = build_magic_hamiltonian(n);
    auto zero = count_pseudo_stabilizer_terms(extract_stabilizer_group(Statevector::zero_state(n)), h, 0);
    EXPECT_EQ(zero.count, n);
    EXPECT_EQ(zero.bound, static_cast<int64_t>(n));
    EXPECT_EQ(zero.disjoint_count, n);
    EXPECT_TRUE(zero.holds);
    EXPECT_EQ(zero.blocks.size(), n + 1);
    EXPECT_TRUE(zero.blocks.back().empty());
    for (size_t t = 0; t <= n; t++) {
        auto r = count_pseudo_stabilizer_terms(extract_stabilizer_group(prepare_psi_t(n, t)), h, t);
        EXPECT_GE(static_cast<int64_t>(r.count), static_cast<int64_t>(n) - static_cast<int64_t>(t));
        EXPECT_TRUE(r.holds);
        EXPECT_TRUE(r.audit.holds);
    }
}

TEST(PseudoStabTermCount, rotated_repetition_code) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 6 + trial % 3;
        size_t t = rng() % 4;
        LocalHamiltonian h = rotate_css(build_stabilizer_hamiltonian(repetition_x_checks(n)));
        auto r = count_pseudo_stabilizer_terms(state_group(n, t, rng()), h, t);
        EXPECT_TRUE(r.holds);
        EXPECT_GE(static_cast<int64_t>(r.count), r.bound);
    }
}
