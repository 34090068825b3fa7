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

#ifndef STABCERT_BITS_H
#define STABCERT_BITS_H

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabcert {

/// Fixed-length bit vector packed 64 bits per word.
///
/// Bits beyond size() are always zero, so word-level equality, ordering,
/// popcount and hashing agree with bit-level semantics.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    /// Parses a string of '0'/'1' characters (index 0 first).
    static BitVector from_string(std::string_view text);
    /// Low num_bits bits of `value`; num_bits <= 64.
    static BitVector from_uint64(uint64_t value, size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    bool operator[](size_t k) const {
        return get(k);
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    std::span<const uint64_t> words() const {
        return words_;
    }
    /// The value of the first 64 bits; only meaningful when size() <= 64.
    uint64_t low_word() const {
        return words_.empty() ? 0 : words_[0];
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }

    size_t popcount() const;
    bool none() const;
    bool any() const {
        return !none();
    }
    /// Index of the lowest set bit, or size() if there is none.
    size_t first_set() const;
    /// Parity of the bitwise AND with `other`.
    bool dot(const BitVector &other) const;

    /// Copy of bits [begin, begin + length).
    BitVector slice(size_t begin, size_t length) const;
    /// This vector followed by `tail`.
    BitVector concat(const BitVector &tail) const;

    std::string str() const;

    friend bool operator==(const BitVector &, const BitVector &) = default;
    /// Lexicographic on (size, words) so that containers of vectors sort deterministically.
    friend std::strong_ordering operator<=>(const BitVector &a, const BitVector &b);

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace stabcert

#endif
