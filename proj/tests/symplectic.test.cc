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
#include <sstream>

#include "stabcert/harness/oracles.h"
#include "stabcert/symplectic.h"

using namespace stabcert;
namespace oracle = stabcert::oracle;

namespace {

SymplecticVector vec(const char *bits) {
    return SymplecticVector::from_string(bits);
}

F2Subspace span_of(size_t n, std::vector<SymplecticVector> rows) {
    return F2Subspace::span(n, rows);
}

SymplecticVector random_vector(size_t n, std::mt19937_64 &rng) {
    SymplecticVector v(n);
    for (size_t k = 0; k < 2 * n; k++) {
        v.set(k, rng() & 1);
    }
    return v;
}

F2Subspace random_subspace(size_t n, std::mt19937_64 &rng) {
    std::vector<SymplecticVector> rows;
    size_t count = rng() % (2 * n + 1);
    for (size_t k = 0; k < count; k++) {
        rows.push_back(random_vector(n, rng));
    }
    return F2Subspace::span(n, rows);
}

}  // namespace

TEST(SymplecticProduct, examples) {
    EXPECT_TRUE(symplectic_product(vec("10"), vec("01")));
    EXPECT_FALSE(symplectic_product(vec("1100"), vec("0011")));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; k++) {
        auto v = random_vector(4, rng);
        EXPECT_FALSE(symplectic_product(v, v));
    }
    EXPECT_THROW(symplectic_product(vec("10"), vec("1000")), std::invalid_argument);
}

TEST(Rref, examples) {
    F2Subspace w = span_of(1, {vec("11"), vec("01")});
    EXPECT_EQ(w.dim(), 2u);
    EXPECT_EQ(w.basis()[0], vec("10"));
    EXPECT_EQ(w.basis()[1], vec("01"));
    EXPECT_EQ(span_of(2, {vec("1011"), vec("1011")}).dim(), 1u);
    EXPECT_EQ(span_of(2, {}).dim(), 0u);
}

TEST(SumIntersect, examples) {
    F2Subspace w = span_of(2, {vec("1010"), vec("0110")});
    EXPECT_EQ(subspace_sum(w, F2Subspace(2)), w);
    EXPECT_EQ(intersect(w, F2Subspace::full(2)), w);
    EXPECT_EQ(intersect(span_of(1, {vec("10")}), span_of(1, {vec("01")})).dim(), 0u);
}

TEST(SumIntersect, match_element_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + trial % 5;
        F2Subspace a = random_subspace(n, rng);
        F2Subspace b = random_subspace(n, rng);
        auto ea = oracle::elements_of(a);
        auto eb = oracle::elements_of(b);
        EXPECT_EQ(oracle::elements_of(subspace_sum(a, b)), oracle::sum(ea, eb));
        EXPECT_EQ(oracle::elements_of(intersect(a, b)), oracle::intersection(ea, eb));
    }
}

TEST(OrthogonalComplement, examples) {
    EXPECT_EQ(orthogonal_complement(F2Subspace(3)), F2Subspace::full(3));
    F2Subspace x1 = span_of(1, {vec("10")});
    EXPECT_EQ(orthogonal_complement(x1), x1);
}

TEST(OrthogonalComplement, identities) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + trial % 5;
        F2Subspace a = random_subspace(n, rng);
        F2Subspace b = random_subspace(n, rng);
        F2Subspace ap = orthogonal_complement(a);
        EXPECT_EQ(a.dim() + ap.dim(), 2 * n);
        EXPECT_EQ(orthogonal_complement(ap), a);
        EXPECT_EQ(orthogonal_complement(subspace_sum(a, b)), intersect(ap, orthogonal_complement(b)));
        EXPECT_EQ(oracle::elements_of(ap), oracle::perp(oracle::elements_of(a), n));
    }
}

TEST(Radical, examples_and_oracle) {
    F2Subspace iso = span_of(2, {vec("1000"), vec("0100")});
    EXPECT_EQ(radical(iso), iso);
    EXPECT_EQ(radical(F2Subspace::full(3)).dim(), 0u);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + trial % 4;
        F2Subspace w = random_subspace(n, rng);
        EXPECT_EQ(oracle::elements_of(radical(w)), oracle::radical(oracle::elements_of(w), n));
    }
}

TEST(Isotropic, examples) {
    F2Subspace all_x = span_of(3, {vec("100000"), vec("010000"), vec("001000")});
    EXPECT_TRUE(is_isotropic(all_x));
    EXPECT_TRUE(is_lagrangian(all_x));
    EXPECT_TRUE(is_isotropic(F2Subspace(2)));
    EXPECT_FALSE(is_lagrangian(F2Subspace(2)));
    EXPECT_FALSE(is_isotropic(span_of(1, {vec("10"), vec("01")})));
    EXPECT_TRUE(is_nondegenerate(F2Subspace::full(2)));
}

TEST(RadicalDecomposition, examples) {
    F2Subspace iso = span_of(2, {vec("1000"), vec("0001")});
    auto d = radical_decomposition(iso);
    EXPECT_EQ(d.rad, iso);
    EXPECT_EQ(d.complement.dim(), 0u);
    auto f = radical_decomposition(F2Subspace::full(2));
    EXPECT_EQ(f.rad.dim(), 0u);
    EXPECT_EQ(f.complement, F2Subspace::full(2));
}

TEST(RadicalDecomposition, random_properties) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + trial % 4;
        F2Subspace w = random_subspace(n, rng);
        auto d = radical_decomposition(w);
        EXPECT_EQ(d.rad, radical(w));
        EXPECT_EQ(d.rad.dim() + d.complement.dim(), w.dim());
        EXPECT_EQ(subspace_sum(d.rad, d.complement), w);
        EXPECT_EQ(d.symplectic_pairs.size() * 2, d.complement.dim());
        // Non-degeneracy of the complement, element by element.
        auto elements = oracle::elements_of(d.complement);
        EXPECT_EQ(oracle::radical(elements, n).size(), 1u);
        for (size_t i = 0; i < d.symplectic_pairs.size(); i++) {
            for (size_t j = 0; j < d.symplectic_pairs.size(); j++) {
                const auto &[xi, zi] = d.symplectic_pairs[i];
                const auto &[xj, zj] = d.symplectic_pairs[j];
                EXPECT_EQ(symplectic_product(xi, zj), i == j);
                EXPECT_FALSE(symplectic_product(xi, xj));
                EXPECT_FALSE(symplectic_product(zi, zj));
            }
        }
    }
}

TEST(ExtendToLagrangian, examples) {
    F2Subspace all_x = span_of(2, {vec("1000"), vec("0100")});
    EXPECT_EQ(extend_to_lagrangian(all_x), all_x);
    F2Subspace line = extend_to_lagrangian(F2Subspace(1));
    EXPECT_TRUE(is_lagrangian(line));
    EXPECT_EQ(orthogonal_complement(line), line);
    F2Subspace z1 = span_of(2, {vec("0010")});
    F2Subspace l = extend_to_lagrangian(z1);
    EXPECT_EQ(l.dim(), 2u);
    EXPECT_TRUE(l.contains(z1));
    EXPECT_EQ(orthogonal_complement(l), l);
    EXPECT_THROW(extend_to_lagrangian(F2Subspace::full(1)), std::invalid_argument);
}

TEST(MaximalIsotropic, bounded_by_rank_and_radical) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + trial % 4;
        F2Subspace w = random_subspace(n, rng);
        F2Subspace u = maximal_isotropic_subspace(w);
        EXPECT_TRUE(is_isotropic(u));
        EXPECT_TRUE(w.contains(u));
        size_t brute = oracle::max_isotropic_dimension(oracle::elements_of(w), n);
        EXPECT_EQ(u.dim(), brute);
        EXPECT_LE(2 * u.dim(), w.dim() + radical(w).dim());
    }
}

TEST(Isotropic, exhaustive_dimension_bound) {
    for (size_t n = 1; n <= 2; n++) {
        for (const auto &s : oracle::all_subspaces(n)) {
            if (oracle::is_isotropic(s, n)) {
                EXPECT_LE(oracle::dimension(s), n);
            }
        }
    }
}

TEST(EnumerateLagrangians, counts_match_oracle_and_formula) {
    EXPECT_EQ(lagrangian_count(1), 3u);
    EXPECT_EQ(lagrangian_count(2), 15u);
    EXPECT_EQ(lagrangian_count(3), 135u);
    for (size_t n = 1; n <= 3; n++) {
        auto found = enumerate_lagrangians(n);
        EXPECT_EQ(found.size(), lagrangian_count(n));
        std::set<oracle::ElementSet> ours;
        for (const auto &l : found) {
            EXPECT_TRUE(is_lagrangian(l));
            ours.insert(oracle::elements_of(l));
        }
        EXPECT_EQ(ours.size(), found.size());
        auto brute = oracle::all_lagrangians(n);
        EXPECT_EQ(std::set<oracle::ElementSet>(brute.begin(), brute.end()), ours);
    }
    auto lines = enumerate_lagrangians(1);
    std::set<SymplecticVector> generators;
    for (const auto &l : lines) {
        generators.insert(l.basis()[0]);
    }
    EXPECT_EQ(generators, (std::set<SymplecticVector>{vec("10"), vec("01"), vec("11")}));
    EXPECT_THROW(enumerate_lagrangians(5), std::invalid_argument);
}

TEST(MatrixFormat, round_trip_and_errors) {
    std::vector<SymplecticVector> rows{vec("1001"), vec("0110")};
    std::stringstream ss;
    write_matrix(ss, rows);
    EXPECT_EQ(read_matrix(ss), rows);
    std::stringstream bad("1001\n011\n");
    try {
        read_matrix(bad);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}
