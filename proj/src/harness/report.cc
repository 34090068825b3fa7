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

#include "stabcert/harness/report.h"

#include <stdexcept>

using nlohmann::json;

namespace stabcert {

std::map<std::string, double> Tolerances::as_map() const {
    return {{"stab", stab}, {"energy", energy}, {"matrix", matrix}};
}

std::map<std::string, std::string> module_versions() {
    return {
        {"pauli-core", "1.0.0"},   {"f2-symplectic", "1.0.0"}, {"stab-group", "1.0.0"},  {"local-views", "1.0.0"},
        {"hamiltonian", "1.0.0"},  {"statevec-sim", "1.0.0"},  {"harness-cli", "1.0.0"},
    };
}

void write_jsonl(std::ostream &out, const VerificationReport &report) {
    for (const auto &f : report.failures) {
        json record = {
            {"type", "failure"}, {"check", f.check},       {"inputs", f.inputs},
            {"expected", f.expected}, {"observed", f.observed},
        };
        out << record.dump() << '\n';
    }
    json summary = {
        {"type", "summary"},
        {"suite", report.suite},
        {"trials", report.trials},
        {"failure_count", report.failures.size()},
        {"seed", report.seed},
        {"tolerances", report.tolerances},
        {"versions", report.versions},
        {"wall_time", report.wall_time},
        {"info", report.info},
        {"passed", report.passed()},
    };
    out << summary.dump() << '\n';
}

VerificationReport read_jsonl(std::istream &in) {
    VerificationReport report;
    bool saw_summary = false;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        if (line.empty()) {
            continue;
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error &e) {
            throw std::invalid_argument("report line " + std::to_string(line_number) + ": " + e.what());
        }
        std::string type = record.value("type", "");
        if (type == "failure") {
            report.failures.push_back(Failure{record.at("check").get<std::string>(), record.at("inputs"),
                                              record.at("expected"), record.at("observed")});
        } else if (type == "summary") {
            report.suite = record.at("suite").get<std::string>();
            report.trials = record.at("trials").get<uint64_t>();
            report.seed = record.at("seed").get<uint64_t>();
            report.tolerances = record.at("tolerances").get<std::map<std::string, double>>();
            report.versions = record.at("versions").get<std::map<std::string, std::string>>();
            report.wall_time = record.at("wall_time").get<double>();
            report.info = record.at("info");
            saw_summary = true;
        } else {
            throw std::invalid_argument("report line " + std::to_string(line_number) + ": unknown record type '" +
                                        type + "'");
        }
    }
    if (!saw_summary) {
        throw std::invalid_argument("report has no summary record");
    }
    return report;
}

void write_summary(std::ostream &out, const VerificationReport &report) {
    out << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << ", " << report.trials << " trials, "
        << report.failures.size() << " failures, seed " << report.seed << ", " << report.wall_time << " s\n";
    for (size_t i = 0; i < report.failures.size() && i < 5; i++) {
        const auto &f = report.failures[i];
        out << "  failure [" << f.check << "] inputs=" << f.inputs.dump() << " expected=" << f.expected.dump()
            << " observed=" << f.observed.dump() << '\n';
    }
}

void record_failure(VerificationReport &report, Failure failure, size_t max_recorded) {
    uint64_t count = report.info.value("failure_count", uint64_t{0}) + 1;
    report.info["failure_count"] = count;
    if (report.failures.size() < max_recorded) {
        report.failures.push_back(std::move(failure));
    }
}

}  // namespace stabcert
