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

#include "stabgeo/synth.hpp"

#include "stabgeo/errors.hpp"

namespace stabgeo {

namespace {

bool has_literal_after(const PauliOp &row, size_t j) {
    for (size_t c = j + 1; c < row.num_qubits(); c++)
        if (row.letter(c) != Letter::I) return true;
    return false;
}

void emit(StabilizerMatrix &m, CliffordCircuit &c, const Gate &g) {
    conjugate_gate_inplace(m, g);
    c.append(g);
}

}  // namespace

BasisNormalization basis_norm_circuit(const StabilizerMatrix &input) {
    size_t n = input.num_qubits();
    if (input.num_rows() != n) throw DimensionError("basis normalization needs a pure state");
    StabilizerMatrix m = canonicalize(input);
    CliffordCircuit c(n);

    for (size_t j = 0; j < n; j++) {
        size_t k = j;
        while (k < n && !m.row(k).x(j)) k++;
        if (k < n) {
            m.swap_rows(j, k);
        } else {
            size_t k2 = n;
            for (size_t r = j; r < n; r++)
                if (m.row(r).letter(j) == Letter::Z) k2 = r;
            if (k2 == n) continue;
            m.swap_rows(j, k2);
            if (!has_literal_after(m.row(j), j)) continue;
            emit(m, c, Gate::h(j));
        }
        // The H can move Z literals of other rows into X literals in column j;
        // clear them so only row j keeps X content there.
        for (size_t r = 0; r < n; r++)
            if (r != j && m.row(r).x(j)) m.row_mult(r, j);
    }
    for (size_t j = 0; j < n; j++)
        for (size_t k = j + 1; k < n; k++)
            if (m.row(j).x(k)) emit(m, c, Gate::cnot(j, k));
    for (size_t j = 0; j < n; j++)
        for (size_t k = j + 1; k < n; k++)
            if (m.row(j).letter(k) == Letter::Z) emit(m, c, Gate::cz(j, k));
    for (size_t j = 0; j < n; j++)
        if (m.row(j).letter(j) == Letter::Y) emit(m, c, Gate::p(j));
    for (size_t j = 0; j < n; j++)
        if (m.row(j).letter(j) == Letter::X) emit(m, c, Gate::h(j));

    canonicalize_inplace(m);
    auto b = is_basis_form(m);
    if (!b) throw StabgeoError("basis normalization did not reach basis form:\n" + m.str());
    return {std::move(c), *b, std::move(m)};
}

bool verify_template(const CliffordCircuit &c) {
    // Block ranks: 0 first H, 1 CNOT, 2 CZ, 3 P, 4 second H.
    int block = 0;
    for (const auto &g : c.gates) {
        int want;
        switch (g.kind) {
            case GateKind::H:
                want = block == 0 ? 0 : 4;
                break;
            case GateKind::CNOT:
                want = 1;
                break;
            case GateKind::CZ:
                want = 2;
                break;
            case GateKind::P:
                want = 3;
                break;
            default:
                return false;
        }
        if (want < block) return false;
        block = want;
    }
    return true;
}

}  // namespace stabgeo
