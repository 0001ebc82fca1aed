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

#include "stabgeo/pauli.hpp"

#include <bit>

#include "stabgeo/errors.hpp"

namespace stabgeo {

char letter_char(Letter l) {
    switch (l) {
        case Letter::I:
            return 'I';
        case Letter::X:
            return 'X';
        case Letter::Z:
            return 'Z';
        case Letter::Y:
            return 'Y';
    }
    return '?';
}

PauliOp PauliOp::from_string(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && text[0] == '+') text.remove_prefix(1);
    if (!text.empty() && text[0] == '-') {
        phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase += 1;
        text.remove_prefix(1);
    }
    if (text.empty()) throw ParseError("empty Pauli string", 0);
    PauliOp p(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                p.xs_.set(q, true);
                break;
            case 'Z':
                p.zs_.set(q, true);
                break;
            case 'Y':
                p.xs_.set(q, true);
                p.zs_.set(q, true);
                break;
            default:
                throw ParseError(std::string("bad Pauli letter '") + text[q] + "'", 0);
        }
    }
    p.phase_ = phase;
    return p;
}

PauliOp PauliOp::single(size_t n, size_t q, Letter l, uint8_t phase_exp) {
    PauliOp p(n);
    p.set_letter(q, l);
    p.set_phase_exp(phase_exp);
    return p;
}

void PauliOp::set_letter(size_t q, Letter l) {
    auto v = static_cast<uint8_t>(l);
    xs_.set(q, v & 1);
    zs_.set(q, v & 2);
}

size_t PauliOp::weight() const {
    size_t w = 0;
    const auto &xw = xs_.words();
    const auto &zw = zs_.words();
    for (size_t k = 0; k < xw.size(); k++) w += std::popcount(xw[k] | zw[k]);
    return w;
}

void PauliOp::left_mul(const PauliOp &a) {
    if (a.num_qubits() != num_qubits()) throw DimensionError("Pauli length mismatch");
    auto &x2 = xs_.words();
    auto &z2 = zs_.words();
    const auto &x1 = a.xs_.words();
    const auto &z1 = a.zs_.words();
    int acc = a.phase_ + phase_;
    for (size_t k = 0; k < x2.size(); k++) {
        uint64_t ax = x1[k], az = z1[k], bx = x2[k], bz = z2[k];
        // XY, YZ, ZX give +i; YX, XZ, ZY give -i.
        uint64_t plus = (ax & ~az & bx & bz) | (ax & az & ~bx & bz) | (~ax & az & bx & ~bz);
        uint64_t minus = (ax & az & bx & ~bz) | (ax & ~az & ~bx & bz) | (~ax & az & bx & bz);
        acc += std::popcount(plus) - std::popcount(minus);
        x2[k] = ax ^ bx;
        z2[k] = az ^ bz;
    }
    set_phase_exp(acc);
}

std::string PauliOp::str() const {
    static const char *prefix[4] = {"", "i", "-", "-i"};
    std::string s = prefix[phase_];
    for (size_t q = 0; q < num_qubits(); q++) s += letter_char(letter(q));
    return s;
}

PauliOp pauli_mul(const PauliOp &a, const PauliOp &b) {
    PauliOp r = b;
    r.left_mul(a);
    return r;
}

bool commutes(const PauliOp &a, const PauliOp &b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionError("Pauli length mismatch");
    // Symplectic form x_a.z_b + z_a.x_b.
    return a.xs().dot(b.zs()) == a.zs().dot(b.xs());
}

std::pair<BitString, uint8_t> apply_to_basis(const PauliOp &p, const BitString &b) {
    if (b.size() != p.num_qubits()) throw DimensionError("basis state length mismatch");
    // Z and Y contribute (-1)^bit on the input, Y also carries a factor i.
    size_t ys = 0;
    const auto &xw = p.xs().words();
    const auto &zw = p.zs().words();
    for (size_t k = 0; k < xw.size(); k++) ys += std::popcount(xw[k] & zw[k]);
    int phase = p.phase_exp() + static_cast<int>(ys) + 2 * (p.zs().dot(b) ? 1 : 0);
    return {b ^ p.xs(), static_cast<uint8_t>(phase & 3)};
}

std::pair<uint64_t, uint8_t> apply_to_basis(const PauliOp &p, uint64_t b) {
    size_t n = p.num_qubits();
    if (n > 63 || (b >> n) != 0) throw IndexError("basis index out of range");
    auto [out, ph] = apply_to_basis(p, BitString::from_index(n, b));
    return {out.to_index(), ph};
}

}  // namespace stabgeo
