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

#ifndef STABCERT_HARNESS_REPORT_H
#define STABCERT_HARNESS_REPORT_H

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace stabcert {

inline constexpr const char *kReportDirEnv = "STABCERT_REPORT_DIR";

/// Tolerances shared by every suite. Defaults: stabilizer detection 1e-9,
/// energy comparisons 1e-9, matrix identities 1e-12.
struct Tolerances {
    double stab = 1e-9;
    double energy = 1e-9;
    double matrix = 1e-12;

    std::map<std::string, double> as_map() const;
};

/// Version tag per library module, embedded in every report.
std::map<std::string, std::string> module_versions();

struct Failure {
    /// Which assertion failed, e.g. "energy_bound".
    std::string check;
    nlohmann::json inputs;
    nlohmann::json expected;
    nlohmann::json observed;

    friend bool operator==(const Failure &, const Failure &) = default;
};

struct VerificationReport {
    std::string suite;
    uint64_t trials = 0;
    std::vector<Failure> failures;
    uint64_t seed = 0;
    std::map<std::string, double> tolerances;
    std::map<std::string, std::string> versions;
    double wall_time = 0;
    /// Suite-specific counters and informational results.
    nlohmann::json info = nlohmann::json::object();

    bool passed() const {
        return failures.empty();
    }
    int exit_code() const {
        return passed() ? 0 : 1;
    }

    friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

/// Line-delimited JSON: one `failure` record per failure, then one `summary`
/// record carrying everything else.
void write_jsonl(std::ostream &out, const VerificationReport &report);
VerificationReport read_jsonl(std::istream &in);

/// Short human-readable summary.
void write_summary(std::ostream &out, const VerificationReport &report);

/// Adds a failure to `report` (capped at `max_recorded` stored records; the
/// count in info["failure_count"] stays exact).
void record_failure(VerificationReport &report, Failure failure, size_t max_recorded = 1000);

}  // namespace stabcert

#endif
