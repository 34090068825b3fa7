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

#include "stabcert/bits.h"

#include <stdexcept>

namespace stabcert {

namespace {

void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "bit vector size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

}  // namespace

BitVector BitVector::from_string(std::string_view text) {
    BitVector result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.set(k, true);
        } else if (text[k] != '0') {
            throw std::invalid_argument("bit string has character '" + std::string(1, text[k]) + "' at position " +
                                        std::to_string(k));
        }
    }
    return result;
}

BitVector BitVector::from_uint64(uint64_t value, size_t num_bits) {
    if (num_bits > 64) {
        throw std::invalid_argument("from_uint64 supports at most 64 bits");
    }
    BitVector result(num_bits);
    if (num_bits > 0) {
        result.words_[0] = num_bits == 64 ? value : value & ((uint64_t{1} << num_bits) - 1);
    }
    return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::none() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::first_set() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + std::countr_zero(words_[w]);
        }
    }
    return num_bits_;
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

BitVector BitVector::slice(size_t begin, size_t length) const {
    if (begin + length > num_bits_) {
        throw std::out_of_range("bit vector slice out of range");
    }
    BitVector result(length);
    for (size_t k = 0; k < length; k++) {
        if (get(begin + k)) {
            result.set(k, true);
        }
    }
    return result;
}

BitVector BitVector::concat(const BitVector &tail) const {
    BitVector result(num_bits_ + tail.num_bits_);
    for (size_t w = 0; w < words_.size(); w++) {
        result.words_[w] = words_[w];
    }
    for (size_t k = 0; k < tail.num_bits_; k++) {
        if (tail.get(k)) {
            result.set(num_bits_ + k, true);
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

std::strong_ordering operator<=>(const BitVector &a, const BitVector &b) {
    if (auto c = a.num_bits_ <=> b.num_bits_; c != 0) {
        return c;
    }
    for (size_t w = 0; w < a.words_.size(); w++) {
        if (auto c = a.words_[w] <=> b.words_[w]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace stabcert
