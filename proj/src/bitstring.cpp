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

#include "stabgeo/bitstring.hpp"

#include "stabgeo/errors.hpp"

namespace stabgeo {

BitString BitString::from_index(size_t n, uint64_t index) {
    if (n > 63) throw SizeError("basis index needs n <= 63");
    if (n < 64 && (index >> n) != 0) throw IndexError("basis index out of range");
    BitString b(n);
    for (size_t q = 0; q < n; q++) b.set(q, (index >> (n - 1 - q)) & 1);
    return b;
}

uint64_t BitString::to_index() const {
    if (n_ > 63) throw SizeError("basis index needs n <= 63");
    uint64_t r = 0;
    for (size_t q = 0; q < n_; q++) r = (r << 1) | static_cast<uint64_t>(get(q));
    return r;
}

bool BitString::less_than(const BitString &o) const {
    for (size_t q = 0; q < n_; q++) {
        bool a = get(q), b = o.get(q);
        if (a != b) return b;
    }
    return false;
}

std::string BitString::str() const {
    std::string s(n_, '0');
    for (size_t q = 0; q < n_; q++)
        if (get(q)) s[q] = '1';
    return s;
}

}  // namespace stabgeo
