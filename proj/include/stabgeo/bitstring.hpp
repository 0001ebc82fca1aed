// Copyright 2026 The stabgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stabgeo {

// Fixed-length bit vector indexed by qubit. Qubit 0 is the leftmost letter of a
// Pauli string and the most significant bit of a basis index.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitString from_index(size_t n, uint64_t index);

    size_t size() const { return n_; }
    bool get(size_t q) const { return (words_[q >> 6] >> (q & 63)) & 1; }
    void set(size_t q, bool v) {
        uint64_t m = uint64_t{1} << (q & 63);
        if (v) {
            words_[q >> 6] |= m;
        } else {
            words_[q >> 6] &= ~m;
        }
    }
    void flip(size_t q) { words_[q >> 6] ^= uint64_t{1} << (q & 63); }

    BitString &operator^=(const BitString &o) {
        for (size_t k = 0; k < words_.size(); k++) words_[k] ^= o.words_[k];
        return *this;
    }
    friend BitString operator^(BitString a, const BitString &b) { return a ^= b; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    size_t popcount() const {
        size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    // Parity of the bitwise AND with another string.
    bool dot(const BitString &o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < words_.size(); k++) acc ^= words_[k] & o.words_[k];
        return std::popcount(acc) & 1;
    }

    // Basis index with qubit 0 as the most significant bit. Requires size() <= 63.
    uint64_t to_index() const;
    // Lexicographic order with qubit 0 most significant, i.e. basis index order.
    bool less_than(const BitString &o) const;

    std::string str() const;

    const std::vector<uint64_t> &words() const { return words_; }
    std::vector<uint64_t> &words() { return words_; }

    bool operator==(const BitString &o) const = default;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace stabgeo
