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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "stabgeo/bitstring.hpp"

namespace stabgeo {

enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);

// An n-qubit Pauli string i^phase_exp * P_1 (x) ... (x) P_n.
//
// Letters are held as two bit planes (x, z): I=(0,0), X=(1,0), Z=(0,1), Y=(1,1),
// so a product is a wordwise xor plus a phase correction scan.
class PauliOp {
   public:
    PauliOp() = default;
    explicit PauliOp(size_t n) : xs_(n), zs_(n) {}

    static PauliOp from_string(std::string_view text);
    // Single-letter operator on qubit q, e.g. Z_q.
    static PauliOp single(size_t n, size_t q, Letter l, uint8_t phase_exp = 0);

    size_t num_qubits() const { return xs_.size(); }
    uint8_t phase_exp() const { return phase_; }
    void set_phase_exp(int m) { phase_ = static_cast<uint8_t>(((m % 4) + 4) % 4); }
    void add_phase(int m) { set_phase_exp(phase_ + m); }
    bool is_negative() const { return phase_ == 2; }

    bool x(size_t q) const { return xs_.get(q); }
    bool z(size_t q) const { return zs_.get(q); }
    Letter letter(size_t q) const { return static_cast<Letter>(xs_.get(q) | (zs_.get(q) << 1)); }
    void set_letter(size_t q, Letter l);

    const BitString &xs() const { return xs_; }
    const BitString &zs() const { return zs_; }
    BitString &xs() { return xs_; }
    BitString &zs() { return zs_; }

    bool has_x_part() const { return xs_.any(); }
    bool is_identity_letters() const { return !xs_.any() && !zs_.any(); }
    size_t weight() const;

    // this <- a * this.
    void left_mul(const PauliOp &a);

    bool same_letters(const PauliOp &o) const { return xs_ == o.xs_ && zs_ == o.zs_; }
    bool operator==(const PauliOp &o) const = default;

    std::string str() const;

   private:
    BitString xs_;
    BitString zs_;
    uint8_t phase_ = 0;
};

PauliOp pauli_mul(const PauliOp &a, const PauliOp &b);
bool commutes(const PauliOp &a, const PauliOp &b);

// Action on a computational basis state: P|b> = i^phase |b'>.
std::pair<BitString, uint8_t> apply_to_basis(const PauliOp &p, const BitString &b);
std::pair<uint64_t, uint8_t> apply_to_basis(const PauliOp &p, uint64_t b);

}  // namespace stabgeo
