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

#include <atomic>
#include <set>
#include <sstream>

#include "stabcert/harness/oracles.h"
#include "stabcert/harness/pool.h"
#include "stabcert/harness/report.h"
#include "stabcert/harness/suites.h"

using namespace stabcert;
namespace oracle = stabcert::oracle;

namespace {

SuiteOptions small(size_t trials, uint64_t seed = 5) {
    SuiteOptions o;
    o.trials = trials;
    o.seed = seed;
    return o;
}

/// Reports compared without their timing fields.
void expect_same_results(VerificationReport a, VerificationReport b) {
    a.wall_time = 0;
    b.wall_time = 0;
    EXPECT_EQ(a, b);
}

}  // namespace

TEST(Report, jsonl_round_trip) {
    VerificationReport r;
    r.suite = "demo";
    r.trials = 12;
    r.seed = 99;
    r.tolerances = Tolerances{}.as_map();
    r.versions = module_versions();
    r.wall_time = 0.25;
    r.info["note"] = "x";
    record_failure(r, {"energy_bound", {{"n", 3}}, 0.1, 0.05});
    record_failure(r, {"other", nullptr, "a", {1, 2}});
    std::stringstream ss;
    write_jsonl(ss, r);
    VerificationReport back = read_jsonl(ss);
    EXPECT_EQ(back, r);
    EXPECT_FALSE(back.passed());
    EXPECT_EQ(back.exit_code(), 1);
    EXPECT_EQ(back.info["failure_count"], 2);
}

TEST(Report, embeds_tolerances_and_versions) {
    auto tol = Tolerances{}.as_map();
    EXPECT_EQ(tol.at("stab"), 1e-9);
    EXPECT_EQ(tol.at("energy"), 1e-9);
    EXPECT_EQ(tol.at("matrix"), 1e-12);
    auto versions = module_versions();
    for (const char *m : {"pauli-core", "f2-symplectic", "stab-group", "local-views", "hamiltonian", "statevec-sim",
                          "harness-cli"}) {
        EXPECT_TRUE(versions.count(m)) << m;
    }
    VerificationReport r = check_commuting(small(5));
    EXPECT_EQ(r.seed, 5u);
    EXPECT_EQ(r.tolerances, tol);
    EXPECT_EQ(r.versions, versions);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Report, failure_cap_keeps_count) {
    VerificationReport r;
    for (int k = 0; k < 10; k++) {
        record_failure(r, {"c", k, 0, 1}, 3);
    }
    EXPECT_EQ(r.failures.size(), 3u);
    EXPECT_EQ(r.info["failure_count"], 10);
}

TEST(Report, rejects_malformed_input) {
    std::stringstream no_summary("{\"type\":\"failure\",\"check\":\"c\",\"inputs\":1,\"expected\":1,\"observed\":2}\n");
    EXPECT_THROW(read_jsonl(no_summary), std::invalid_argument);
    std::stringstream garbage("{not json\n");
    EXPECT_THROW(read_jsonl(garbage), std::invalid_argument);
    std::stringstream unknown("{\"type\":\"mystery\"}\n");
    EXPECT_THROW(read_jsonl(unknown), std::invalid_argument);
}

TEST(Report, summary_line) {
    VerificationReport r;
    r.suite = "demo";
    r.trials = 3;
    std::stringstream ss;
    write_summary(ss, r);
    EXPECT_EQ(ss.str().rfind("demo: PASS, 3 trials, 0 failures", 0), 0u) << ss.str();
}

TEST(Pool, derived_seeds_are_distinct_and_stable) {
    std::set<uint64_t> seen;
    for (uint64_t stream = 0; stream < 10; stream++) {
        for (uint64_t trial = 0; trial < 100; trial++) {
            seen.insert(derive_seed(1, stream, trial));
        }
    }
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(derive_seed(3, 4, 5), derive_seed(3, 4, 5));
    EXPECT_NE(derive_seed(3, 4, 5), derive_seed(4, 4, 5));
}

TEST(Pool, results_in_index_order) {
    for (size_t threads : {1, 2, 4}) {
        auto out = run_trials(100, [](size_t i) { return i * i; }, threads);
        ASSERT_EQ(out.size(), 100u);
        for (size_t i = 0; i < 100; i++) {
            EXPECT_EQ(out[i], i * i);
        }
    }
    EXPECT_TRUE(run_trials(0, [](size_t i) { return i; }).empty());
}

TEST(Pool, rethrows_worker_exceptions) {
    std::atomic<int> calls{0};
    auto fn = [&](size_t i) {
        calls++;
        if (i == 7) {
            throw std::runtime_error("trial 7");
        }
        return i;
    };
    EXPECT_THROW(run_trials(50, fn, 3), std::runtime_error);
}

TEST(Suites, deterministic_under_fixed_seed) {
    SuiteOptions one = small(4);
    one.threads = 1;
    SuiteOptions many = small(4);
    many.threads = 3;
    expect_same_results(check_theorem1(2, 4, one), check_theorem1(2, 4, many));
    expect_same_results(check_localbound({1, 3}, small(10)), check_localbound({1, 3}, small(10)));
    expect_same_results(check_dimension_bound(6, small(30)), check_dimension_bound(6, small(30)));
    expect_same_results(check_fidelity(20, small(0)), check_fidelity(20, small(0)));
    expect_same_results(check_symplectic(3, small(20)), check_symplectic(3, small(20)));
    expect_same_results(check_condition(build_magic_hamiltonian(6), 2, small(5)),
                        check_condition(build_magic_hamiltonian(6), 2, small(5)));
}

TEST(Suites, small_runs_pass) {
    EXPECT_TRUE(check_magic_energies(6, small(0)).passed());
    EXPECT_TRUE(check_theorem1(2, 5, small(10)).passed());
    EXPECT_TRUE(check_localbound({1, 3}, small(30)).passed());
    EXPECT_TRUE(check_dimension_bound(8, small(50)).passed());
    EXPECT_TRUE(check_fidelity(50, small(0)).passed());
    EXPECT_TRUE(check_symplectic(4, small(50)).passed());
    EXPECT_TRUE(check_commuting(small(20)).passed());
    EXPECT_TRUE(check_condition(rotated_repetition_hamiltonian(6), 3, small(10)).passed());
    EXPECT_TRUE(check_condition(rotate_css(build_stabilizer_hamiltonian(steane_generators(), 6)), 2, small(5)).passed());
}

TEST(Suites, stabilizerodd_counts) {
    VerificationReport r = check_stabilizerodd({1, 3}, small(0));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.trials, 3u + 135u);
    EXPECT_EQ(r.info["per_k"]["1"]["enumerated"], 3);
    EXPECT_EQ(r.info["per_k"]["1"]["oracle"], 3);
    EXPECT_EQ(r.info["per_k"]["3"]["enumerated"], 135);
    EXPECT_EQ(r.info["per_k"]["3"]["oracle"], 135);
    EXPECT_EQ(r.info["per_k"]["3"]["formula"], 135);
    EXPECT_THROW(check_stabilizerodd({2}, small(0)), std::invalid_argument);
}

TEST(Suites, magic_hamiltonian_detection) {
    EXPECT_TRUE(is_magic_hamiltonian(build_magic_hamiltonian(4)));
    EXPECT_FALSE(is_magic_hamiltonian(rotated_repetition_hamiltonian(4)));
    Circuit c = psi_t_circuit(4, 1);
    EnergyBreakdown e = evaluate_energy(c, build_magic_hamiltonian(4));
    ASSERT_TRUE(e.bound.has_value());
    EXPECT_NEAR(e.energy, *e.bound, 1e-9);
    EXPECT_EQ(e.term_energies.size(), 4u);
    EXPECT_FALSE(evaluate_energy(c, rotated_repetition_hamiltonian(4)).bound.has_value());
}

TEST(Oracles, subspace_counts) {
    EXPECT_EQ(oracle::all_subspaces(1).size(), 5u);
    EXPECT_EQ(oracle::all_subspaces(2).size(), 67u);
    EXPECT_EQ(oracle::all_subspaces(3).size(), 2825u);
    EXPECT_EQ(oracle::all_lagrangians(2).size(), 15u);
    EXPECT_THROW(oracle::all_subspaces(4), std::invalid_argument);
    EXPECT_THROW(oracle::perp({0}, 6), std::invalid_argument);
}

TEST(Oracles, encoding_round_trip) {
    for (oracle::Code c = 0; c < 256; c++) {
        EXPECT_EQ(oracle::encode(oracle::decode(c, 4)), c);
    }
    EXPECT_THROW(oracle::encode(PauliWord(9)), std::invalid_argument);
}
