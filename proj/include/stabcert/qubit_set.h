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

#ifndef STABCERT_QUBIT_SET_H
#define STABCERT_QUBIT_SET_H

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stabcert {

/// A sorted set of distinct qubit indices in [0, n).
class QubitSet {
   public:
    QubitSet() = default;
    /// Sorts and validates; throws on duplicates or indices >= n.
    QubitSet(size_t n, std::vector<size_t> members);
    QubitSet(size_t n, std::initializer_list<size_t> members) : QubitSet(n, std::vector<size_t>(members)) {
    }

    static QubitSet all(size_t n);
    static QubitSet range(size_t n, size_t begin, size_t end);

    size_t num_qubits() const {
        return n_;
    }
    size_t size() const {
        return members_.size();
    }
    bool empty() const {
        return members_.empty();
    }
    const std::vector<size_t> &members() const {
        return members_;
    }
    auto begin() const {
        return members_.begin();
    }
    auto end() const {
        return members_.end();
    }
    size_t operator[](size_t k) const {
        return members_[k];
    }

    bool contains(size_t qubit) const;
    bool disjoint(const QubitSet &other) const;

    /// Comma-separated indices, e.g. "0,2,5".
    std::string str() const;

    friend bool operator==(const QubitSet &, const QubitSet &) = default;

   private:
    size_t n_ = 0;
    std::vector<size_t> members_;
};

/// The complement of the union of `blocks` in [0, n).
QubitSet remainder(size_t n, std::span<const QubitSet> blocks);

/// True iff `blocks` are pairwise disjoint and cover [0, n).
bool is_partition(size_t n, std::span<const QubitSet> blocks);

}  // namespace stabcert

#endif
