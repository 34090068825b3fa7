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

#include "stabcert/pauli.h"
#include "stabcert/symplectic.h"
#include "test_util.h"

using namespace stabcert;
using stabcert::dense::all_words;
using stabcert::dense::pauli_matrix;

namespace {

const std::vector<std::string> kExampleSet = {"iIIXI", "IXZY", "-XIZX", "XXYI"};

}  // namespace

TEST(PauliParse, phase_prefixes) {
    PauliWord p = parse_pauli("iIIXI");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.phase_exp(), 1);
    EXPECT_EQ(p.at(2), PauliLetter::X);
    EXPECT_EQ(p.weight(), 1u);

    PauliWord id = parse_pauli("IIII");
    EXPECT_EQ(id.phase_exp(), 0);
    EXPECT_TRUE(id.is_identity_up_to_phase());

    PauliWord q = parse_pauli("-XIZX");
    EXPECT_EQ(q.phase_exp(), 2);
    EXPECT_EQ(q.at(0), PauliLetter::X);
    EXPECT_EQ(q.at(1), PauliLetter::I);
    EXPECT_EQ(q.at(2), PauliLetter::Z);
    EXPECT_EQ(q.at(3), PauliLetter::X);

    EXPECT_EQ(parse_pauli("-iY").phase_exp(), 3);
    EXPECT_EQ(parse_pauli("+Z").phase_exp(), 0);
}

TEST(PauliParse, errors_name_position) {
    try {
        parse_pauli("XXQ");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 2u);
    }
    try {
        parse_pauli("-iXaZ");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_pauli("+iX"), ParseError);
    EXPECT_THROW(parse_pauli("i-X"), ParseError);
}

TEST(PauliParse, round_trip) {
    for (size_t n = 0; n <= 2; n++) {
        for (const auto &w : all_words(n)) {
            for (int phase = 0; phase < 4; phase++) {
                PauliWord p = w.with_phase(phase);
                EXPECT_EQ(parse_pauli(p.str()), p) << p.str();
            }
        }
    }
    EXPECT_EQ(parse_pauli("-iXYZ").str(), "-iXYZ");
}

TEST(PauliMultiply, x_times_z) {
    PauliWord p = parse_pauli("X") * parse_pauli("Z");
    EXPECT_EQ(p.phase_exp(), 3);
    EXPECT_EQ(p.at(0), PauliLetter::Y);
}

TEST(PauliMultiply, matches_matrix_oracle) {
    for (size_t n = 1; n <= 2; n++) {
        auto words = all_words(n);
        for (const auto &p0 : words) {
            for (const auto &q0 : words) {
                PauliWord p = p0.with_phase(1);
                PauliWord q = q0.with_phase(2);
                dense::Matrix expected = pauli_matrix(p) * pauli_matrix(q);
                EXPECT_LT((pauli_matrix(p * q) - expected).norm(), 1e-12) << p.str() << " * " << q.str();
            }
        }
    }
}

TEST(PauliMultiply, squares_and_identity) {
    for (const auto &w : all_words(2)) {
        for (int phase = 0; phase < 4; phase++) {
            PauliWord p = w.with_phase(phase);
            PauliWord sq = p * p;
            EXPECT_TRUE(sq.is_identity_up_to_phase());
            EXPECT_EQ(sq.phase_exp(), (2 * phase) % 4);
            EXPECT_EQ(PauliWord(2) * p, p);
        }
    }
    EXPECT_THROW(parse_pauli("X") * parse_pauli("XX"), std::invalid_argument);
}

TEST(PauliCommutator, examples) {
    EXPECT_EQ(commutator(parse_pauli("X"), parse_pauli("Z")), -1);
    EXPECT_EQ(commutator(parse_pauli("XX"), parse_pauli("ZZ")), +1);
    for (size_t i = 0; i < kExampleSet.size(); i++) {
        for (size_t j = i + 1; j < kExampleSet.size(); j++) {
            EXPECT_EQ(commutator(parse_pauli(kExampleSet[i]), parse_pauli(kExampleSet[j])), -1)
                << kExampleSet[i] << " " << kExampleSet[j];
        }
    }
}

TEST(PauliCommutator, matches_matrix_oracle) {
    for (size_t n = 1; n <= 3; n++) {
        auto words = all_words(n);
        for (const auto &p : words) {
            auto mp = pauli_matrix(p);
            for (const auto &q : words) {
                auto mq = pauli_matrix(q);
                bool oracle = (mp * mq - mq * mp).norm() < 1e-12;
                ASSERT_EQ(commutes(p, q), oracle) << p.str() << " " << q.str();
                ASSERT_EQ(commutator(p, q), commutator(q, p));
            }
            ASSERT_EQ(commutator(p, p), 1);
        }
    }
}

TEST(PauliVector, encoding) {
    SymplecticVector y = to_pauli_vector(parse_pauli("Y"));
    EXPECT_TRUE(y.a()[0]);
    EXPECT_TRUE(y.b()[0]);
    EXPECT_TRUE(to_pauli_vector(PauliWord(5)).none());
    SymplecticVector v = to_pauli_vector(parse_pauli("IXZY"));
    EXPECT_EQ(v.a().str(), "0101");
    EXPECT_EQ(v.b().str(), "0011");
    EXPECT_EQ(from_pauli_vector(v), parse_pauli("IXZY"));
    EXPECT_EQ(to_pauli_vector(parse_pauli("-iXY")), to_pauli_vector(parse_pauli("XY")));
}

TEST(PauliVector, symplectic_form_is_commutation) {
    for (size_t n = 1; n <= 2; n++) {
        auto words = all_words(n);
        for (const auto &p : words) {
            for (const auto &q : words) {
                int expected = (1 - commutator(p, q)) / 2;
                EXPECT_EQ(int{symplectic_product(to_pauli_vector(p), to_pauli_vector(q))}, expected);
            }
            EXPECT_EQ(from_pauli_vector(to_pauli_vector(p)), p);
        }
    }
}

TEST(PauliWord, wide_words_cross_word_boundary) {
    std::string a(100, 'I');
    std::string b(100, 'I');
    a[70] = 'X';
    b[70] = 'Z';
    a[3] = 'Y';
    b[3] = 'Y';
    PauliWord p = parse_pauli(a);
    PauliWord q = parse_pauli(b);
    EXPECT_FALSE(commutes(p, q));
    PauliWord r = p * q;
    EXPECT_EQ(r.at(70), PauliLetter::Y);
    EXPECT_EQ(r.at(3), PauliLetter::I);
    EXPECT_EQ(r.phase_exp(), 3);
}
