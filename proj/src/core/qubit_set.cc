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

#include "stabcert/qubit_set.h"

#include <algorithm>
#include <stdexcept>

namespace stabcert {

QubitSet::QubitSet(size_t n, std::vector<size_t> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (size_t k = 0; k < members_.size(); k++) {
        if (members_[k] >= n_) {
            throw std::out_of_range("qubit index " + std::to_string(members_[k]) + " outside [0, " +
                                    std::to_string(n_) + ")");
        }
        if (k > 0 && members_[k] == members_[k - 1]) {
            throw std::invalid_argument("qubit index " + std::to_string(members_[k]) + " repeated");
        }
    }
}

QubitSet QubitSet::all(size_t n) {
    return range(n, 0, n);
}

QubitSet QubitSet::range(size_t n, size_t begin, size_t end) {
    std::vector<size_t> members;
    for (size_t q = begin; q < end; q++) {
        members.push_back(q);
    }
    return QubitSet(n, std::move(members));
}

bool QubitSet::contains(size_t qubit) const {
    return std::binary_search(members_.begin(), members_.end(), qubit);
}

bool QubitSet::disjoint(const QubitSet &other) const {
    size_t i = 0;
    size_t j = 0;
    while (i < members_.size() && j < other.members_.size()) {
        if (members_[i] == other.members_[j]) {
            return false;
        }
        if (members_[i] < other.members_[j]) {
            i++;
        } else {
            j++;
        }
    }
    return true;
}

std::string QubitSet::str() const {
    std::string out;
    for (size_t k = 0; k < members_.size(); k++) {
        if (k) {
            out += ',';
        }
        out += std::to_string(members_[k]);
    }
    return out;
}

QubitSet remainder(size_t n, std::span<const QubitSet> blocks) {
    std::vector<bool> used(n, false);
    for (const auto &block : blocks) {
        for (size_t q : block) {
            if (q >= n) {
                throw std::out_of_range("block qubit " + std::to_string(q) + " outside [0, " + std::to_string(n) +
                                        ")");
            }
            used[q] = true;
        }
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < n; q++) {
        if (!used[q]) {
            rest.push_back(q);
        }
    }
    return QubitSet(n, std::move(rest));
}

bool is_partition(size_t n, std::span<const QubitSet> blocks) {
    std::vector<int> hits(n, 0);
    for (const auto &block : blocks) {
        for (size_t q : block) {
            if (q >= n) {
                return false;
            }
            hits[q]++;
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace stabcert
