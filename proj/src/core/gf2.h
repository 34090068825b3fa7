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

// Gauss-Jordan helpers shared by the core modules. Row types need get(k),
// first_set(), none() and operator^=.

#ifndef STABCERT_SRC_CORE_GF2_H
#define STABCERT_SRC_CORE_GF2_H

#include <optional>
#include <utility>
#include <vector>

#include "stabcert/bits.h"

namespace stabcert::gf2 {

/// Reduces `rows` in place to reduced row echelon form over columns [0, len)
/// and drops zero rows. Returns the pivot column of each surviving row.
template <typename Row>
std::vector<size_t> row_reduce(std::vector<Row> &rows, size_t len) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < len && rank < rows.size(); col++) {
        size_t found = rank;
        while (found < rows.size() && !rows[found].get(col)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push_back(col);
        rank++;
    }
    rows.resize(rank);
    return pivots;
}

/// Basis of {x : <x, row> = 0 for every row}, x in F_2^len.
inline std::vector<BitVector> nullspace(std::vector<BitVector> rows, size_t len) {
    std::vector<size_t> pivots = row_reduce(rows, len);
    std::vector<bool> is_pivot(len, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (size_t free = 0; free < len; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(len);
        v.set(free, true);
        for (size_t r = 0; r < rows.size(); r++) {
            if (rows[r].get(free)) {
                v.set(pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Finds a subset of `rows` whose XOR equals `target`, as a bit mask over row
/// indices. Rows need not be independent. Returns nullopt when target is not
/// in the span.
template <typename Row>
std::optional<BitVector> solve(const std::vector<Row> &rows, Row target, size_t len) {
    struct Tracked {
        Row row;
        BitVector combo;
        bool get(size_t k) const {
            return row.get(k);
        }
        Tracked &operator^=(const Tracked &other) {
            row ^= other.row;
            combo ^= other.combo;
            return *this;
        }
    };
    std::vector<Tracked> work;
    work.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        BitVector combo(rows.size());
        combo.set(i, true);
        work.push_back({rows[i], std::move(combo)});
    }
    // row_reduce drops rows that become zero; reduce by hand to keep combos.
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < len && rank < work.size(); col++) {
        size_t found = rank;
        while (found < work.size() && !work[found].get(col)) {
            found++;
        }
        if (found == work.size()) {
            continue;
        }
        std::swap(work[rank], work[found]);
        for (size_t r = 0; r < work.size(); r++) {
            if (r != rank && work[r].get(col)) {
                work[r] ^= work[rank];
            }
        }
        pivots.push_back(col);
        rank++;
    }
    BitVector combo(rows.size());
    for (size_t r = 0; r < rank; r++) {
        if (target.get(pivots[r])) {
            target ^= work[r].row;
            combo ^= work[r].combo;
        }
    }
    if (!target.none()) {
        return std::nullopt;
    }
    return combo;
}

}  // namespace stabcert::gf2

#endif
