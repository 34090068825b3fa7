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

// Command-line front end: `stabcert <subcommand> [flags]`.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabcert/hamiltonian.h"
#include "stabcert/harness/report.h"
#include "stabcert/harness/suites.h"
#include "stabcert/statevector.h"

namespace {

using namespace stabcert;

struct CommonFlags {
    uint64_t seed = 1;
    size_t trials = 0;
    double tol_energy = Tolerances{}.energy;
    double tol_stab = Tolerances{}.stab;
    size_t threads = 0;
    std::string out;
};

void add_common(CLI::App *cmd, CommonFlags &flags, bool with_trials) {
    cmd->add_option("--seed", flags.seed, "Suite seed");
    if (with_trials) {
        cmd->add_option("--trials", flags.trials, "Trials per configuration");
    }
    cmd->add_option("--tol-energy", flags.tol_energy, "Slack for energy comparisons");
    cmd->add_option("--tol-stab", flags.tol_stab, "Tolerance for stabilizer detection");
    cmd->add_option("--threads", flags.threads, "Worker threads (0 = hardware concurrency)");
    cmd->add_option("--out", flags.out, "Report path (JSON lines); defaults to $STABCERT_REPORT_DIR/<suite>.jsonl");
}

SuiteOptions suite_options(const CommonFlags &flags, size_t default_trials) {
    SuiteOptions options;
    options.seed = flags.seed;
    options.trials = flags.trials ? flags.trials : default_trials;
    options.tol.energy = flags.tol_energy;
    options.tol.stab = flags.tol_stab;
    options.threads = flags.threads;
    return options;
}

int finish(const VerificationReport &report, const CommonFlags &flags) {
    write_summary(std::cout, report);
    std::string path = flags.out;
    if (path.empty()) {
        if (const char *dir = std::getenv(kReportDirEnv)) {
            std::filesystem::create_directories(dir);
            path = (std::filesystem::path(dir) / (report.suite + ".jsonl")).string();
        }
    }
    if (!path.empty()) {
        std::ofstream out(path);
        if (!out) {
            throw std::runtime_error("cannot open report file " + path);
        }
        write_jsonl(out, report);
        std::cout << "report written to " << path << '\n';
    }
    return report.exit_code();
}

template <typename T, typename Reader>
T read_file(const std::string &path, Reader reader) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    try {
        return reader(in);
    } catch (const std::exception &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

int run_energy(const std::string &circuit_path, const std::string &ham_path, const CommonFlags &flags) {
    Circuit c = read_file<Circuit>(circuit_path, [](std::istream &in) { return read_circuit(in); });
    LocalHamiltonian h = read_file<LocalHamiltonian>(ham_path, [](std::istream &in) { return read_hamiltonian(in); });
    EnergyBreakdown e = evaluate_energy(c, h);
    std::printf("energy %.15g\n", e.energy);
    for (size_t i = 0; i < e.term_energies.size(); i++) {
        const HamTerm &t = h.terms()[i];
        std::printf("term %zu %s {%s} %.15g\n", i, term_kind_name(t.kind()), t.support().str().c_str(),
                    e.term_energies[i]);
    }
    if (!e.bound) {
        return 0;
    }
    bool ok = e.energy >= *e.bound - flags.tol_energy;
    std::printf("bound t=%zu n=%zu min %.15g %s\n", e.rotations, h.num_qubits(), *e.bound, ok ? "holds" : "VIOLATED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer-algebra toolkit and verification harness"};
    app.require_subcommand(1);
    CommonFlags flags;
    int exit_code = 0;

    auto *energy_cmd = app.add_subcommand("energy", "Simulate a circuit and evaluate a Hamiltonian");
    std::string circuit_path;
    std::string ham_path;
    energy_cmd->add_option("circuit", circuit_path, "Circuit file")->required();
    energy_cmd->add_option("hamiltonian", ham_path, "Hamiltonian file")->required();
    energy_cmd->add_option("--tol-energy", flags.tol_energy, "Slack for the bound comparison");

    size_t n = 8;
    size_t n_min = 2;
    size_t t = 3;
    std::vector<size_t> ks;
    bool skip_dimension = false;

    auto *theorem1 = app.add_subcommand("check-theorem1", "Energy lower bound and stabilizer dimension sweep");
    add_common(theorem1, flags, true);
    theorem1->add_option("--n", n, "Largest qubit count")->capture_default_str();
    theorem1->add_option("--n-min", n_min, "Smallest qubit count")->capture_default_str();
    theorem1->add_flag("--skip-dimension", skip_dimension, "Skip the stabilizer dimension check");

    auto *odd = app.add_subcommand("check-stabilizerodd", "Type witnesses on every Lagrangian subgroup");
    add_common(odd, flags, false);
    odd->add_option("--k", ks, "Odd qubit counts (default 1 3)");

    auto *local = app.add_subcommand("check-localbound", "Hadamard-type term energy on pseudo-stabilizer sets");
    add_common(local, flags, true);
    local->add_option("--k", ks, "Odd set sizes (default 1 3 5)");

    auto *dimension = app.add_subcommand("check-dimension-bound", "Stabilizer dimension versus local views");
    add_common(dimension, flags, true);
    dimension->add_option("--n", n, "Largest qubit count")->capture_default_str();

    auto *condition = app.add_subcommand("check-condition", "Pseudo-stabilizer disjoint term count");
    add_common(condition, flags, true);
    std::string condition_ham;
    std::string builtin;
    condition->add_option("--ham", condition_ham, "Hamiltonian file");
    condition->add_option("--builtin", builtin, "magic | repetition | steane (instead of --ham)");
    condition->add_option("--n", n, "Qubit count for --builtin")->capture_default_str();
    condition->add_option("--t", t, "Largest rotation count")->capture_default_str();

    auto *symplectic = app.add_subcommand("check-symplectic", "Symplectic subspace identities");
    add_common(symplectic, flags, true);
    size_t symplectic_n = 5;
    symplectic->add_option("--n", symplectic_n, "Largest n (ambient dimension 2n)")->capture_default_str();

    auto *fidelity = app.add_subcommand("check-fidelity", "Overlap bound for states with anticommuting stabilizers");
    add_common(fidelity, flags, true);

    auto *commuting = app.add_subcommand("check-commuting", "Largest commuting subgroup versus exhaustive search");
    add_common(commuting, flags, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (energy_cmd->parsed()) {
            exit_code = run_energy(circuit_path, ham_path, flags);
        } else if (theorem1->parsed()) {
            exit_code = finish(check_theorem1(n_min, n, suite_options(flags, 200), !skip_dimension), flags);
        } else if (odd->parsed()) {
            exit_code = finish(check_stabilizerodd(ks.empty() ? std::vector<size_t>{1, 3} : ks, suite_options(flags, 0)),
                               flags);
        } else if (local->parsed()) {
            exit_code =
                finish(check_localbound(ks.empty() ? std::vector<size_t>{1, 3, 5} : ks, suite_options(flags, 500)), flags);
        } else if (dimension->parsed()) {
            exit_code = finish(check_dimension_bound(n, suite_options(flags, 1000)), flags);
        } else if (condition->parsed()) {
            LocalHamiltonian h;
            if (!condition_ham.empty()) {
                h = read_file<LocalHamiltonian>(condition_ham, [](std::istream &in) { return read_hamiltonian(in); });
            } else if (builtin == "magic") {
                h = build_magic_hamiltonian(n);
            } else if (builtin == "repetition") {
                h = rotated_repetition_hamiltonian(n);
            } else if (builtin == "steane") {
                h = rotate_css(build_stabilizer_hamiltonian(steane_generators(), 6));
            } else {
                throw std::invalid_argument("check-condition needs --ham <file> or --builtin magic|repetition|steane");
            }
            exit_code = finish(check_condition(h, t, suite_options(flags, 50)), flags);
        } else if (symplectic->parsed()) {
            exit_code = finish(check_symplectic(symplectic_n, suite_options(flags, 1000)), flags);
        } else if (fidelity->parsed()) {
            SuiteOptions options = suite_options(flags, 1000);
            exit_code = finish(check_fidelity(options.trials, options), flags);
        } else if (commuting->parsed()) {
            exit_code = finish(check_commuting(suite_options(flags, 200)), flags);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
