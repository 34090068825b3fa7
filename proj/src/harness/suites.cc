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

#include "stabcert/harness/suites.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stabcert/harness/oracles.h"
#include "stabcert/harness/pool.h"
#include "stabcert/local_views.h"

using nlohmann::json;

namespace stabcert {

namespace {

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct TrialResult {
    std::vector<Failure> failures;
    json info = json::object();
};

VerificationReport new_report(const std::string &suite, const SuiteOptions &options) {
    VerificationReport report;
    report.suite = suite;
    report.seed = options.seed;
    report.tolerances = options.tol.as_map();
    report.versions = module_versions();
    report.info["failure_count"] = 0;
    return report;
}

void absorb(VerificationReport &report, std::vector<Failure> failures) {
    for (auto &f : failures) {
        record_failure(report, std::move(f));
    }
}

size_t uniform(std::mt19937_64 &rng, size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

std::string circuit_text(const Circuit &c) {
    std::ostringstream out;
    write_circuit(out, c);
    return out.str();
}

json words_json(const std::vector<PauliWord> &words) {
    json out = json::array();
    for (const auto &w : words) {
        out.push_back(w.str());
    }
    return out;
}

json subspace_json(const F2Subspace &w) {
    json out = json::array();
    for (const auto &v : w.basis()) {
        out.push_back(v.str());
    }
    return out;
}

QubitSet random_subset(size_t n, size_t k, std::mt19937_64 &rng) {
    std::vector<size_t> all(n);
    for (size_t q = 0; q < n; q++) {
        all[q] = q;
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    return QubitSet(n, std::move(all));
}

std::vector<QubitSet> random_partition(size_t n, std::mt19937_64 &rng) {
    size_t blocks = uniform(rng, 1, std::max<size_t>(n, 1));
    std::vector<std::vector<size_t>> members(blocks);
    for (size_t q = 0; q < n; q++) {
        members[uniform(rng, 0, blocks - 1)].push_back(q);
    }
    std::vector<QubitSet> out;
    for (auto &m : members) {
        if (!m.empty()) {
            out.emplace_back(n, std::move(m));
        }
    }
    return out;
}

Statevector apply_hadamards(Statevector psi, const QubitSet &a) {
    for (size_t q : a) {
        psi.apply_h(q);
    }
    return psi;
}

bool near_one(Amplitude e, double tol) {
    return std::abs(e - Amplitude(1, 0)) <= tol;
}

}  // namespace

LocalHamiltonian rotated_repetition_hamiltonian(size_t n) {
    return rotate_css(build_stabilizer_hamiltonian(repetition_x_checks(n, 3)));
}

bool is_magic_hamiltonian(const LocalHamiltonian &h) {
    if (h.num_terms() != h.num_qubits()) {
        return false;
    }
    for (size_t i = 0; i < h.num_terms(); i++) {
        const HamTerm &t = h.terms()[i];
        if (t.kind() != TermKind::HadamardType || t.support().size() != 1 || t.support()[0] != i) {
            return false;
        }
    }
    return true;
}

EnergyBreakdown evaluate_energy(const Circuit &c, const LocalHamiltonian &h) {
    if (c.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(c.num_qubits()) + " qubits but the Hamiltonian has " +
                                    std::to_string(h.num_qubits()));
    }
    Statevector psi = simulate(c);
    EnergyBreakdown out;
    out.rotations = c.rotation_count();
    for (const auto &term : h.terms()) {
        out.term_energies.push_back(term_energy(term, psi));
    }
    out.energy = energy(h, psi);
    if (is_magic_hamiltonian(h)) {
        out.bound = theorem1_bound(h.num_qubits(), c.rotation_count());
    }
    return out;
}

VerificationReport check_magic_energies(size_t n_max, const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("magic-energies", options);
    double worst_ground = 0;
    double worst_saturation = 0;
    for (size_t n = 1; n <= n_max; n++) {
        LocalHamiltonian h = build_magic_hamiltonian(n);
        double ground = energy(h, prepare_psi_t(n, n));
        worst_ground = std::max(worst_ground, std::abs(ground));
        report.trials++;
        if (std::abs(ground) > options.tol.energy) {
            record_failure(report, {"ground_state_energy", {{"n", n}}, 0.0, ground});
        }
        for (size_t t = 0; t <= n; t++) {
            double e = energy(h, prepare_psi_t(n, t));
            double expected = theorem1_bound(n, t);
            worst_saturation = std::max(worst_saturation, std::abs(e - expected));
            report.trials++;
            if (std::abs(e - expected) > options.tol.energy) {
                record_failure(report, {"psi_t_saturation", {{"n", n}, {"t", t}}, expected, e});
            }
        }
    }
    report.info["max_ground_energy"] = worst_ground;
    report.info["max_saturation_error"] = worst_saturation;
    report.wall_time = clock.seconds();
    return report;
}

VerificationReport check_theorem1(size_t n_min, size_t n_max, const SuiteOptions &options, bool check_dimension) {
    Stopwatch clock;
    VerificationReport report = new_report("theorem1", options);
    if (n_min < 1 || n_min > n_max) {
        throw std::invalid_argument("check_theorem1: need 1 <= n_min <= n_max");
    }
    if (check_dimension && n_max > kStabilizerScanCap) {
        throw std::invalid_argument("check_theorem1: stabilizer dimension checks need n <= " +
                                    std::to_string(kStabilizerScanCap));
    }
    struct Job {
        size_t n, t, trial;
    };
    std::vector<Job> jobs;
    for (size_t n = n_min; n <= n_max; n++) {
        for (size_t t = 0; t <= n; t++) {
            for (size_t i = 0; i < options.trials; i++) {
                jobs.push_back({n, t, i});
            }
        }
    }
    auto results = run_trials(
        jobs.size(),
        [&](size_t j) {
            const Job &job = jobs[j];
            RandomCircuitOptions rc;
            rc.n = job.n;
            rc.clifford_depth = options.clifford_depth;
            rc.rotations = job.t;
            rc.seed = derive_seed(options.seed, job.n * 64 + job.t, job.trial);
            Circuit c = random_circuit(rc);
            Statevector psi = simulate(c);
            TrialResult r;
            double e = energy(build_magic_hamiltonian(job.n), psi);
            double bound = theorem1_bound(job.n, job.t);
            r.info["margin"] = e - bound;
            json inputs = {{"n", job.n}, {"t", job.t}, {"circuit_seed", rc.seed}, {"circuit", circuit_text(c)}};
            if (e < bound - options.tol.energy) {
                r.failures.push_back({"energy_bound", inputs, {{"min", bound}}, e});
            }
            if (check_dimension) {
                size_t d = stabilizer_dimension(psi, options.tol.stab);
                r.info["dimension_slack"] = static_cast<int64_t>(d + job.t) - static_cast<int64_t>(job.n);
                if (d + job.t < job.n) {
                    r.failures.push_back({"stabilizer_dimension", inputs, {{"min", job.n - job.t}}, d});
                }
            }
            return r;
        },
        options.threads);
    double min_margin = std::numeric_limits<double>::infinity();
    int64_t min_slack = std::numeric_limits<int64_t>::max();
    for (auto &r : results) {
        report.trials++;
        min_margin = std::min(min_margin, r.info["margin"].get<double>());
        if (check_dimension) {
            min_slack = std::min(min_slack, r.info["dimension_slack"].get<int64_t>());
        }
        absorb(report, std::move(r.failures));
    }
    report.info["circuits"] = jobs.size();
    report.info["min_energy_margin"] = min_margin;
    if (check_dimension) {
        report.info["min_dimension_slack"] = min_slack;
        report.info["stabilizer_dimension_failures"] = std::count_if(
            report.failures.begin(), report.failures.end(), [](const Failure &f) { return f.check == "stabilizer_dimension"; });
    }
    report.info["energy_bound_failures"] = std::count_if(report.failures.begin(), report.failures.end(),
                                                         [](const Failure &f) { return f.check == "energy_bound"; });

    VerificationReport saturation = check_magic_energies(n_max, options);
    report.trials += saturation.trials;
    report.info["saturation_failures"] = saturation.failures.size();
    absorb(report, std::move(saturation.failures));
    report.wall_time = clock.seconds();
    return report;
}

VerificationReport check_fidelity(size_t pairs, const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("fidelity", options);

    struct Attempt {
        bool applicable = false;
        double overlap = 0;
        std::vector<Failure> failures;
    };
    auto attempt = [&](uint64_t index) {
        std::mt19937_64 rng(derive_seed(options.seed, 5, index));
        size_t n = uniform(rng, 1, 4);
        auto make = [&](size_t t) {
            RandomCircuitOptions rc;
            rc.n = n;
            rc.clifford_depth = options.clifford_depth;
            rc.rotations = t;
            rc.seed = rng();
            return random_circuit(rc);
        };
        Circuit c1 = make(uniform(rng, 0, 2));
        Statevector psi = simulate(c1);
        Statevector phi;
        json inputs = {{"n", n}, {"attempt", index}, {"psi_circuit", circuit_text(c1)}};
        if (uniform(rng, 0, 3) == 0) {
            QubitSet a = random_subset(n, 2 * uniform(rng, 0, (n - 1) / 2) + 1, rng);
            phi = apply_hadamards(psi, a);
            inputs["phi"] = "hadamards on {" + a.str() + "} applied to psi";
        } else {
            Circuit c2 = make(uniform(rng, 0, 2));
            phi = simulate(c2);
            inputs["phi_circuit"] = circuit_text(c2);
        }
        FidelityCheck check = fidelity_bound_check(psi, phi, options.tol.stab, options.tol.energy);
        Attempt out;
        out.applicable = check.applicable;
        out.overlap = check.overlap_abs;
        if (!check.applicable) {
            return out;
        }
        const auto &[g1, g2] = *check.witness;
        if (!near_one(expectation(psi, g1), 1e-7) || !near_one(expectation(phi, g2), 1e-7) || commutes(g1, g2)) {
            out.failures.push_back(
                {"witness_pair", inputs, "anticommuting stabilizers", json::array({g1.str(), g2.str()})});
        }
        if (!check.holds) {
            out.failures.push_back({"overlap_bound", inputs, {{"max", check.bound}}, check.overlap_abs});
        }
        return out;
    };

    size_t found = 0;
    size_t not_applicable = 0;
    double max_overlap = 0;
    uint64_t next = 0;
    const uint64_t max_attempts = 50 * static_cast<uint64_t>(pairs) + 100;
    while (found < pairs && next < max_attempts) {
        size_t chunk = 2 * (pairs - found) + 16;
        auto results = run_trials(chunk, [&](size_t i) { return attempt(next + i); }, options.threads);
        next += chunk;
        for (auto &r : results) {
            if (found >= pairs) {
                break;
            }
            if (!r.applicable) {
                not_applicable++;
                continue;
            }
            found++;
            report.trials++;
            max_overlap = std::max(max_overlap, r.overlap);
            absorb(report, std::move(r.failures));
        }
    }
    if (found < pairs) {
        record_failure(report, {"pair_supply", {{"attempts", next}}, pairs, found});
    }

    Statevector zero = Statevector::zero_state(1);
    Statevector plus = apply_hadamards(zero, QubitSet(1, {0}));
    FidelityCheck sat = fidelity_bound_check(zero, plus, options.tol.stab, options.tol.energy);
    report.trials++;
    double expected = std::numbers::sqrt2 / 2;
    if (!sat.applicable || std::abs(sat.overlap_abs - expected) > options.tol.matrix) {
        record_failure(report, {"saturation_pair", {{"psi", "|0>"}, {"phi", "|+>"}}, expected, sat.overlap_abs});
    }
    report.info["applicable_pairs"] = found;
    report.info["not_applicable_pairs"] = not_applicable;
    report.info["max_overlap"] = max_overlap;
    report.info["saturation_overlap"] = sat.overlap_abs;
    report.wall_time = clock.seconds();
    return report;
}

VerificationReport check_stabilizerodd(const std::vector<size_t> &ks, const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("stabilizerodd", options);
    for (size_t k : ks) {
        if (k % 2 == 0) {
            throw std::invalid_argument("check-stabilizerodd: k = " + std::to_string(k) +
                                        " is even; type witnesses are defined for odd k only");
        }
    }
    json per_k = json::object();
    for (size_t k : ks) {
        std::vector<F2Subspace> lags = enumerate_lagrangians(k);
        unsigned long long formula = lagrangian_count(k);
        json entry = {{"enumerated", lags.size()}, {"formula", formula}};
        if (lags.size() != formula) {
            record_failure(report, {"lagrangian_count", {{"k", k}}, formula, lags.size()});
        }
        if (2 * k <= 6) {
            std::vector<oracle::ElementSet> reference = oracle::all_lagrangians(k);
            std::set<oracle::ElementSet> ours;
            for (const auto &l : lags) {
                ours.insert(oracle::elements_of(l));
            }
            entry["oracle"] = reference.size();
            if (ours.size() != lags.size() || ours != std::set<oracle::ElementSet>(reference.begin(), reference.end())) {
                record_failure(report, {"lagrangian_set", {{"k", k}}, reference.size(), ours.size()});
            }
        }
        QubitSet all = QubitSet::all(k);
        size_t type_one = 0;
        size_t type_two = 0;
        for (const auto &l : lags) {
            report.trials++;
            std::vector<PauliWord> words;
            for (const auto &v : l.basis()) {
                words.push_back(from_pauli_vector(v));
            }
            PauliSubgroup group = independent_generators(k, words);
            json inputs = {{"k", k}, {"subgroup", words_json(words)}};
            TypeWitness w = find_type_witness(group, all);
            oracle::Code code = oracle::encode(w.local_view);
            bool ok = w.kind == WitnessType::TypeI ? oracle::is_type_one(code, all) : oracle::is_type_two(code, all);
            oracle::ElementSet members = oracle::elements_of(l);
            bool in_group = std::binary_search(members.begin(), members.end(), oracle::encode(w.element));
            if (!ok || !in_group) {
                record_failure(report, {"type_witness", inputs, "element of the subgroup satisfying its type",
                                        {{"kind", witness_type_name(w.kind)}, {"element", w.element.str()}}});
            }
            (w.kind == WitnessType::TypeI ? type_one : type_two)++;
        }
        entry["type_one"] = type_one;
        entry["type_two"] = type_two;
        per_k[std::to_string(k)] = entry;
    }
    report.info["per_k"] = per_k;
    report.wall_time = clock.seconds();
    return report;
}

VerificationReport check_localbound(const std::vector<size_t> &ks, const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("localbound", options);
    const double floor_energy = sin2_pi_over_8();
    json per_k = json::object();
    for (size_t k : ks) {
        if (k % 2 == 0 || k == 0 || k > kStabilizerScanCap) {
            throw std::invalid_argument("check-localbound: k = " + std::to_string(k) + " must be odd and at most " +
                                        std::to_string(kStabilizerScanCap));
        }
        struct Instance {
            bool certified = false;
            double energy = 0;
            bool type_one = false;
            std::vector<Failure> failures;
        };
        auto instance = [&](uint64_t index) {
            std::mt19937_64 rng(derive_seed(options.seed, 700 + k, index));
            size_t n = k + uniform(rng, 0, std::min<size_t>(3, kStabilizerScanCap - k));
            QubitSet a = random_subset(n, k, rng);
            std::vector<size_t> outside_members;
            for (size_t q = 0; q < n; q++) {
                if (!a.contains(q)) {
                    outside_members.push_back(q);
                }
            }
            QubitSet outside(n, outside_members);
            bool entangled = uniform(rng, 0, 1) == 1;
            Circuit c(n);
            if (entangled) {
                append_random_clifford(c, QubitSet::all(n), options.clifford_depth, rng);
            } else {
                append_random_clifford(c, a, options.clifford_depth, rng);
                append_random_clifford(c, outside, options.clifford_depth, rng);
            }
            if (!outside.empty()) {
                size_t t = uniform(rng, 0, 2);
                for (size_t r = 0; r < t; r++) {
                    double angle = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
                    c.add(Gate::rot(angle, random_axis(n, outside, rng)));
                    append_random_clifford(c, outside, 1, rng);
                }
            }
            if (entangled) {
                append_random_clifford(c, a, options.clifford_depth, rng);
            }
            Statevector psi = simulate(c);
            PauliSubgroup g = extract_stabilizer_group(psi, options.tol.stab);
            PseudoStabCertificate cert = is_pseudo_stabilizer(g, a);
            Instance out;
            out.certified = cert.holds;
            out.energy = term_energy(HamTerm::hadamard_type(a), psi);
            json inputs = {{"k", k}, {"n", n}, {"set", a.str()}, {"circuit", circuit_text(c)}};
            if (k == 1) {
                bool touched = false;
                for (const auto &gen : g.generators()) {
                    touched = touched || gen.at(a[0]) != PauliLetter::I;
                }
                if (touched != cert.holds) {
                    out.failures.push_back({"single_qubit_condition", inputs, touched, cert.holds});
                }
            }
            if (!cert.holds) {
                return out;
            }
            if (out.energy < floor_energy - options.tol.energy) {
                out.failures.push_back({"term_energy", inputs, {{"min", floor_energy}}, out.energy});
            }
            TypeWitness w = classify_types(g, a).front();
            out.type_one = w.kind == WitnessType::TypeI;
            oracle::Code code = oracle::encode(w.local_view);
            bool ok = out.type_one ? oracle::is_type_one(code, a) : oracle::is_type_two(code, a);
            if (!ok || !near_one(expectation(psi, w.element), 1e-7)) {
                out.failures.push_back({"type_witness", inputs, "stabilizer with a typed local view",
                                        {{"kind", witness_type_name(w.kind)}, {"element", w.element.str()}}});
            }
            return out;
        };

        size_t certified = 0;
        size_t controls = 0;
        size_t controls_below = 0;
        size_t type_one = 0;
        double min_energy = std::numeric_limits<double>::infinity();
        uint64_t next = 0;
        const uint64_t max_attempts = 20 * static_cast<uint64_t>(options.trials) + 100;
        while (certified < options.trials && next < max_attempts) {
            size_t chunk = (options.trials - certified) + (options.trials - certified) / 2 + 8;
            auto results = run_trials(chunk, [&](size_t i) { return instance(next + i); }, options.threads);
            next += chunk;
            for (auto &r : results) {
                if (certified >= options.trials) {
                    break;
                }
                if (!r.certified) {
                    controls++;
                    controls_below += r.energy < floor_energy - options.tol.energy;
                    absorb(report, std::move(r.failures));
                    continue;
                }
                certified++;
                report.trials++;
                type_one += r.type_one;
                min_energy = std::min(min_energy, r.energy);
                absorb(report, std::move(r.failures));
            }
        }
        if (certified < options.trials) {
            record_failure(report, {"instance_supply", {{"k", k}, {"attempts", next}}, options.trials, certified});
        }
        per_k[std::to_string(k)] = {{"certified", certified},
                                    {"min_energy", min_energy},
                                    {"type_one", type_one},
                                    {"type_two", certified - type_one},
                                    {"controls", controls},
                                    {"controls_below_bound", controls_below}};
    }
    report.info["per_k"] = per_k;
    report.info["energy_floor"] = floor_energy;
    report.wall_time = clock.seconds();
    return report;
}

VerificationReport check_dimension_bound(size_t n_max, const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("dimension-bound", options);
    if (n_max < 1) {
        throw std::invalid_argument("check-dimension-bound: n_max must be at least 1");
    }
    auto results = run_trials(
        options.trials,
        [&](size_t i) {
            std::mt19937_64 rng(derive_seed(options.seed, 8, i));
            size_t n = uniform(rng, 1, n_max);
            Circuit c(n);
            append_random_clifford(c, QubitSet::all(n), options.clifford_depth, rng);
            PauliSubgroup full = clifford_stabilizer_group(c);
            static const double keep_rates[3] = {1.0, 0.75, 0.5};
            double keep = keep_rates[uniform(rng, 0, 2)];
            std::vector<PauliWord> kept;
            for (const auto &gen : full.generators()) {
                if (std::uniform_real_distribution<double>(0, 1)(rng) < keep) {
                    kept.push_back(gen);
                }
            }
            PauliSubgroup g = independent_generators(n, kept, GroupKind::stabilizer).quotient();
            std::vector<QubitSet> blocks = random_partition(n, rng);
            DimensionAudit audit = dimension_bound_audit(g, blocks);
            TrialResult r;
            json block_json = json::array();
            for (const auto &b : blocks) {
                block_json.push_back(b.str());
            }
            json inputs = {{"n", n}, {"generators", words_json(g.generators())}, {"blocks", block_json}};
            if (!audit.holds) {
                r.failures.push_back({"dimension_bound", inputs, {{"max", audit.block_sum}}, audit.group_dim});
            }
            if (n <= 4) {
                std::vector<oracle::Code> codes;
                for (const auto &gen : g.generators()) {
                    codes.push_back(oracle::encode(gen));
                }
                oracle::ElementSet elements = oracle::closure(codes);
                if (oracle::dimension(elements) != audit.group_dim) {
                    r.failures.push_back({"oracle_group_dim", inputs, oracle::dimension(elements), audit.group_dim});
                }
                for (size_t b = 0; b < blocks.size(); b++) {
                    size_t reference = oracle::max_isotropic_dimension(oracle::project(elements, blocks[b]), n);
                    if (reference != audit.block_dims[b]) {
                        r.failures.push_back(
                            {"oracle_block_dim", inputs, {{"block", b}, {"dim", reference}}, audit.block_dims[b]});
                    }
                }
                r.info["oracle_checked"] = true;
            }
            r.info["slack"] = audit.block_sum - audit.group_dim;
            return r;
        },
        options.threads);
    size_t oracle_checked = 0;
    for (auto &r : results) {
        report.trials++;
        oracle_checked += r.info.contains("oracle_checked");
        absorb(report, std::move(r.failures));
    }

    std::mt19937_64 rng(derive_seed(options.seed, 9, 0));
    for (size_t n = 1; n <= n_max; n++) {
        PauliSubgroup zero = clifford_stabilizer_group(Circuit(n)).quotient();
        std::vector<QubitSet> blocks = random_partition(n, rng);
        DimensionAudit audit = dimension_bound_audit(zero, blocks);
        report.trials++;
        if (audit.group_dim != n || audit.block_sum != n) {
            record_failure(report, {"zero_state_equality", {{"n", n}}, n, {{"dim", audit.group_dim}, {"sum", audit.block_sum}}});
        }
    }
    report.info["oracle_checked"] = oracle_checked;
    report.wall_time = clock.seconds();
    return report;
}

VerificationReport check_condition(const LocalHamiltonian &h, size_t t_max, const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("condition", options);
    size_t n = h.num_qubits();
    if (n > kStabilizerScanCap) {
        throw std::invalid_argument("check-condition: n = " + std::to_string(n) + " exceeds the stabilizer scan cap " +
                                    std::to_string(kStabilizerScanCap));
    }
    std::ostringstream ham_text;
    bool writable = std::none_of(h.terms().begin(), h.terms().end(),
                                 [](const HamTerm &t) { return t.kind() == TermKind::Dense; });
    if (writable) {
        write_hamiltonian(ham_text, h);
    }
    size_t floor_count = disjoint_floor_count(h.num_terms(), h.locality());
    size_t greedy = select_disjoint_terms(h).size();
    report.trials++;
    if (greedy < floor_count) {
        record_failure(report, {"disjoint_floor", {{"hamiltonian", ham_text.str()}}, {{"min", floor_count}}, greedy});
    }
    size_t jobs = (t_max + 1) * options.trials;
    auto results = run_trials(
        jobs,
        [&](size_t j) {
            size_t t = j % (t_max + 1);
            RandomCircuitOptions rc;
            rc.n = n;
            rc.clifford_depth = options.clifford_depth;
            rc.rotations = t;
            rc.seed = derive_seed(options.seed, 900 + t, j);
            Circuit c = random_circuit(rc);
            PauliSubgroup g = extract_stabilizer_group(simulate(c), options.tol.stab).quotient();
            PseudoStabTermCount count = count_pseudo_stabilizer_terms(g, h, t);
            TrialResult r;
            r.info = {{"slack", static_cast<int64_t>(count.count) - count.bound}};
            if (static_cast<int64_t>(count.count) < count.bound || !count.holds) {
                r.failures.push_back({"pseudo_stabilizer_terms",
                                      {{"t", t}, {"circuit", circuit_text(c)}, {"hamiltonian", ham_text.str()}},
                                      {{"min", count.bound}, {"structural_min", count.structural_bound}},
                                      count.count});
            }
            return r;
        },
        options.threads);
    int64_t min_slack = std::numeric_limits<int64_t>::max();
    for (auto &r : results) {
        report.trials++;
        min_slack = std::min(min_slack, r.info["slack"].get<int64_t>());
        absorb(report, std::move(r.failures));
    }
    report.info["n"] = n;
    report.info["terms"] = h.num_terms();
    report.info["locality"] = h.locality();
    report.info["disjoint_terms"] = greedy;
    report.info["disjoint_floor"] = floor_count;
    report.info["min_slack"] = min_slack;
    report.wall_time = clock.seconds();
    return report;
}

namespace {

SymplecticVector random_vector(size_t n, std::mt19937_64 &rng) {
    SymplecticVector v(n);
    for (size_t k = 0; k < 2 * n; k++) {
        v.set(k, rng() & 1);
    }
    return v;
}

F2Subspace random_subspace(size_t n, std::mt19937_64 &rng) {
    size_t count = uniform(rng, 0, 2 * n);
    std::vector<SymplecticVector> rows;
    for (size_t i = 0; i < count; i++) {
        rows.push_back(random_vector(n, rng));
    }
    return F2Subspace::span(n, rows);
}

F2Subspace random_isotropic(size_t n, std::mt19937_64 &rng) {
    size_t target = uniform(rng, 0, n);
    std::vector<SymplecticVector> rows;
    for (size_t attempt = 0; attempt < 64 && rows.size() < target; attempt++) {
        SymplecticVector v = random_vector(n, rng);
        bool ok = std::none_of(rows.begin(), rows.end(), [&](const auto &r) { return symplectic_product(r, v); });
        if (ok && !F2Subspace::span(n, rows).contains(v)) {
            rows.push_back(v);
        }
    }
    return F2Subspace::span(n, rows);
}

F2Subspace project_subspace(const F2Subspace &w, const QubitSet &a) {
    std::vector<SymplecticVector> rows;
    for (const auto &v : w.basis()) {
        rows.push_back(to_pauli_vector(project(from_pauli_vector(v), a)));
    }
    return F2Subspace::span(w.num_qubits(), rows);
}

// Kernel of restriction to `a`: everything supported off `a`.
F2Subspace projection_kernel(size_t n, const QubitSet &a) {
    std::vector<SymplecticVector> rows;
    for (size_t q = 0; q < n; q++) {
        if (a.contains(q)) {
            continue;
        }
        SymplecticVector x(n);
        x.set(q, true);
        SymplecticVector z(n);
        z.set(n + q, true);
        rows.push_back(x);
        rows.push_back(z);
    }
    return F2Subspace::span(n, rows);
}

F2Subspace from_elements(const oracle::ElementSet &s, size_t n) {
    std::vector<SymplecticVector> rows;
    for (oracle::Code c : s) {
        rows.push_back(oracle::decode(c, n));
    }
    return F2Subspace::span(n, rows);
}

class SymplecticChecker {
   public:
    std::vector<Failure> failures;
    std::map<std::string, uint64_t> passes;

    void expect(bool ok, const char *check, const json &inputs, const json &expected, const json &observed) {
        if (ok) {
            passes[check]++;
        } else {
            failures.push_back({check, inputs, expected, observed});
        }
    }

    // Single-subspace identities; `use_oracle` enables element-set cross-checks.
    void subspace(const F2Subspace &w, bool use_oracle) {
        size_t n = w.num_qubits();
        json inputs = {{"n", n}, {"basis", subspace_json(w)}};
        F2Subspace p = orthogonal_complement(w);
        expect(w.dim() + p.dim() == 2 * n, "dim_sum", inputs, 2 * n, w.dim() + p.dim());
        expect(orthogonal_complement(p) == w, "double_perp", inputs, subspace_json(w),
               subspace_json(orthogonal_complement(p)));
        F2Subspace rad = radical(w);
        RadicalDecomposition dec = radical_decomposition(w);
        expect(dec.rad == rad && dec.rad.dim() + dec.complement.dim() == w.dim() &&
                   is_nondegenerate(dec.complement) && subspace_sum(dec.rad, dec.complement) == w,
               "radical_decomposition", inputs, "rad (+) nondegenerate complement", subspace_json(dec.complement));
        if (is_isotropic(w)) {
            expect(w.dim() <= n, "isotropic_dim", inputs, n, w.dim());
            F2Subspace l = extend_to_lagrangian(w);
            expect(is_lagrangian(l) && l.dim() == n && l.contains(w), "lagrangian_extension", inputs, n, l.dim());
        }
        if (is_lagrangian(w)) {
            expect(w.dim() == n, "lagrangian_dim", inputs, n, w.dim());
        }
        F2Subspace m = maximal_isotropic_subspace(w);
        size_t bound2 = w.dim() + rad.dim();
        expect(is_isotropic(m) && w.contains(m) && 2 * m.dim() == bound2, "maximal_isotropic", inputs, bound2 / 2,
               m.dim());
        if (!use_oracle) {
            return;
        }
        oracle::ElementSet elements = oracle::elements_of(w);
        expect(oracle::elements_of(p) == oracle::perp(elements, n), "oracle_perp", inputs, "element-wise perp",
               subspace_json(p));
        expect(oracle::elements_of(rad) == oracle::radical(elements, n), "oracle_radical", inputs,
               "element-wise radical", subspace_json(rad));
        if (w.dim() <= 6) {
            size_t best = oracle::max_isotropic_dimension(elements, n);
            expect(best == m.dim() && 2 * best <= bound2, "oracle_isotropic_bound", inputs, best, m.dim());
        }
    }

    void pair(const F2Subspace &a, const F2Subspace &b, bool use_oracle) {
        size_t n = a.num_qubits();
        json inputs = {{"n", n}, {"a", subspace_json(a)}, {"b", subspace_json(b)}};
        F2Subspace s = subspace_sum(a, b);
        F2Subspace i = intersect(a, b);
        expect(s.dim() + i.dim() == a.dim() + b.dim(), "sum_intersection_dims", inputs, a.dim() + b.dim(),
               s.dim() + i.dim());
        expect(orthogonal_complement(s) == intersect(orthogonal_complement(a), orthogonal_complement(b)),
               "perp_of_sum", inputs, "perp(A+B) = perp(A) & perp(B)", subspace_json(orthogonal_complement(s)));
        if (!use_oracle) {
            return;
        }
        oracle::ElementSet ea = oracle::elements_of(a);
        oracle::ElementSet eb = oracle::elements_of(b);
        expect(oracle::elements_of(s) == oracle::sum(ea, eb), "oracle_sum", inputs, "element-wise sum",
               subspace_json(s));
        expect(oracle::elements_of(i) == oracle::intersection(ea, eb), "oracle_intersection", inputs,
               "element-wise intersection", subspace_json(i));
    }

    void dimension_bound(const F2Subspace &w, const std::vector<QubitSet> &blocks) {
        size_t n = w.num_qubits();
        json block_json = json::array();
        for (const auto &b : blocks) {
            block_json.push_back(b.str());
        }
        json inputs = {{"n", n}, {"basis", subspace_json(w)}, {"blocks", block_json}};
        size_t total = 0;
        bool consistent = true;
        for (const auto &a : blocks) {
            F2Subspace local = project_subspace(w, a);
            F2Subspace m = maximal_isotropic_subspace(local);
            F2Subspace wi = intersect(w, subspace_sum(m, projection_kernel(n, a)));
            consistent = consistent && project_subspace(wi, a) == m && is_isotropic(m);
            total += m.dim();
        }
        expect(consistent, "local_isotropic_lift", inputs, "restriction of W_i equals M_i", false);
        expect(w.dim() <= total, "symplectic_dimension_bound", inputs, {{"max", total}}, w.dim());
    }
};

}  // namespace

VerificationReport check_symplectic(size_t n_max, const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("symplectic", options);
    if (n_max < 1 || n_max > oracle::kMaxScanQubits) {
        throw std::invalid_argument("check-symplectic: n_max must be in [1, " +
                                    std::to_string(oracle::kMaxScanQubits) + "]");
    }
    auto results = run_trials(
        options.trials,
        [&](size_t i) {
            std::mt19937_64 rng(derive_seed(options.seed, 10, i));
            size_t n = uniform(rng, 1, n_max);
            bool use_oracle = n <= 4;
            SymplecticChecker checker;
            F2Subspace a = random_subspace(n, rng);
            F2Subspace b = random_subspace(n, rng);
            F2Subspace iso = random_isotropic(n, rng);
            checker.subspace(a, use_oracle);
            checker.subspace(iso, use_oracle);
            checker.pair(a, b, use_oracle);
            checker.dimension_bound(iso, random_partition(n, rng));
            TrialResult r;
            r.failures = std::move(checker.failures);
            r.info = checker.passes;
            return r;
        },
        options.threads);
    std::map<std::string, uint64_t> passes;
    for (auto &r : results) {
        report.trials++;
        for (auto &[k, v] : r.info.items()) {
            passes[k] += v.get<uint64_t>();
        }
        absorb(report, std::move(r.failures));
    }

    // Exhaustive over every subspace (and pair of subspaces) of F_2^2 and F_2^4.
    for (size_t n = 1; n <= 2; n++) {
        SymplecticChecker checker;
        std::vector<F2Subspace> subspaces;
        for (const auto &s : oracle::all_subspaces(n)) {
            subspaces.push_back(from_elements(s, n));
        }
        for (const auto &w : subspaces) {
            checker.subspace(w, true);
            report.trials++;
        }
        for (const auto &a : subspaces) {
            for (const auto &b : subspaces) {
                checker.pair(a, b, true);
                report.trials++;
            }
            if (is_isotropic(a)) {
                std::mt19937_64 rng(derive_seed(options.seed, 11, report.trials));
                checker.dimension_bound(a, random_partition(n, rng));
            }
        }
        report.info["exhaustive_subspaces_n" + std::to_string(n)] = subspaces.size();
        for (auto &[k, v] : checker.passes) {
            passes[k] += v;
        }
        absorb(report, std::move(checker.failures));
    }
    report.info["passes"] = passes;
    report.wall_time = clock.seconds();
    return report;
}

VerificationReport check_commuting(const SuiteOptions &options) {
    Stopwatch clock;
    VerificationReport report = new_report("commuting", options);
    auto check_group = [&](const std::vector<PauliWord> &words, size_t n) {
        PauliSubgroup m = independent_generators(n, words);
        std::vector<oracle::Code> codes;
        for (const auto &w : words) {
            codes.push_back(oracle::encode(w));
        }
        oracle::ElementSet elements = oracle::closure(codes);
        size_t reference = oracle::max_isotropic_dimension(elements, n);
        size_t ours = max_commuting_dimension(m);
        json inputs = {{"n", n}, {"generators", words_json(words)}};
        report.trials++;
        if (reference != ours) {
            record_failure(report, {"max_commuting_dimension", inputs, reference, ours});
        }
        oracle::ElementSet center_elements = oracle::elements_of(center(m).pauli_vectors());
        if (center_elements != oracle::radical(elements, n)) {
            record_failure(report, {"center", inputs, "element-wise center", words_json(center(m).generators())});
        }
        if (oracle::dimension(elements) != m.dim()) {
            record_failure(report, {"dimension", inputs, oracle::dimension(elements), m.dim()});
        }
        CanonicalBasis basis = canonical_basis(m);
        if (basis.r() + 2 * basis.l() != m.dim()) {
            record_failure(report, {"canonical_basis_size", inputs, m.dim(), basis.r() + 2 * basis.l()});
        }
    };
    size_t exhaustive = 0;
    for (size_t n = 1; n <= 2; n++) {
        for (const auto &s : oracle::all_subspaces(n)) {
            std::vector<PauliWord> words;
            F2Subspace w = from_elements(s, n);
            for (const auto &v : w.basis()) {
                words.push_back(from_pauli_vector(v));
            }
            check_group(words, n);
            exhaustive++;
        }
    }
    std::mt19937_64 rng(derive_seed(options.seed, 12, 0));
    for (size_t i = 0; i < options.trials; i++) {
        size_t count = uniform(rng, 0, 6);
        std::vector<PauliWord> words;
        for (size_t j = 0; j < count; j++) {
            words.push_back(from_pauli_vector(random_vector(3, rng)));
        }
        check_group(words, 3);
    }
    report.info["exhaustive_groups"] = exhaustive;
    report.info["random_groups"] = options.trials;
    report.wall_time = clock.seconds();
    return report;
}

}  // namespace stabcert
