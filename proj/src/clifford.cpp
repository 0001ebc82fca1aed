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

#include "stabgeo/clifford.hpp"

#include "stabgeo/errors.hpp"

namespace stabgeo {

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::P:
            return "P";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CY:
            return "CY";
    }
    return "?";
}

bool is_two_qubit(GateKind k) { return k == GateKind::CNOT || k == GateKind::CZ || k == GateKind::CY; }

std::string Gate::str() const {
    std::string s = gate_name(kind);
    if (is_two_qubit(kind)) s += " " + std::to_string(control + 1);
    return s + " " + std::to_string(target + 1);
}

void validate_gate(const Gate &g, size_t n) {
    if (g.target >= n) throw IndexError(std::string("gate ") + gate_name(g.kind) + " target out of range");
    if (is_two_qubit(g.kind)) {
        if (g.control >= n) throw IndexError(std::string("gate ") + gate_name(g.kind) + " control out of range");
        if (g.control == g.target) throw IndexError("control equals target");
    }
}

namespace {

void conj_h(PauliOp &p, size_t q) {
    bool x = p.x(q), z = p.z(q);
    if (x && z) p.add_phase(2);
    p.xs().set(q, z);
    p.zs().set(q, x);
}

void conj_p(PauliOp &p, size_t q) {
    bool x = p.x(q), z = p.z(q);
    if (x && z) p.add_phase(2);
    p.zs().set(q, z ^ x);
}

void conj_pdag(PauliOp &p, size_t q) {
    bool x = p.x(q), z = p.z(q);
    if (x && !z) p.add_phase(2);
    p.zs().set(q, z ^ x);
}

void conj_cnot(PauliOp &p, size_t c, size_t t) {
    bool xc = p.x(c), zc = p.z(c), xt = p.x(t), zt = p.z(t);
    if (xc && zt && !(xt ^ zc)) p.add_phase(2);
    p.xs().set(t, xt ^ xc);
    p.zs().set(c, zc ^ zt);
}

void conj_cz(PauliOp &p, size_t a, size_t b) {
    bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
    if (xa && xb && (za ^ zb)) p.add_phase(2);
    p.zs().set(a, za ^ xb);
    p.zs().set(b, zb ^ xa);
}

}  // namespace

void conjugate_pauli(PauliOp &p, const Gate &g) {
    size_t t = g.target;
    switch (g.kind) {
        case GateKind::H:
            conj_h(p, t);
            break;
        case GateKind::P:
            conj_p(p, t);
            break;
        case GateKind::X:
            if (p.z(t)) p.add_phase(2);
            break;
        case GateKind::Y:
            if (p.x(t) != p.z(t)) p.add_phase(2);
            break;
        case GateKind::Z:
            if (p.x(t)) p.add_phase(2);
            break;
        case GateKind::CNOT:
            conj_cnot(p, g.control, t);
            break;
        case GateKind::CZ:
            conj_cz(p, g.control, t);
            break;
        case GateKind::CY:
            // CY = P_t CNOT P_t^dag
            conj_pdag(p, t);
            conj_cnot(p, g.control, t);
            conj_p(p, t);
            break;
    }
}

void conjugate_gate_inplace(StabilizerMatrix &m, const Gate &g) {
    validate_gate(g, m.num_qubits());
    for (auto &row : m.rows()) conjugate_pauli(row, g);
}

StabilizerMatrix conjugate_gate(StabilizerMatrix m, const Gate &g) {
    conjugate_gate_inplace(m, g);
    return m;
}

StabilizerMatrix conjugate_circuit(StabilizerMatrix m, const CliffordCircuit &c) {
    for (const auto &g : c.gates) conjugate_gate_inplace(m, g);
    return m;
}

CliffordCircuit inverse_circuit(const CliffordCircuit &c) {
    CliffordCircuit inv(c.n);
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        if (it->kind == GateKind::P) {
            for (int k = 0; k < 3; k++) inv.append(*it);
        } else {
            inv.append(*it);
        }
    }
    return inv;
}

MeasureResult measure(const StabilizerMatrix &m, size_t qubit, std::mt19937_64 &rng) {
    size_t n = m.num_qubits();
    if (qubit >= n) throw IndexError("qubit out of range");
    StabilizerMatrix r = m;
    size_t k = 0;
    while (k < r.num_rows() && !r.row(k).x(qubit)) k++;
    if (k < r.num_rows()) {
        int outcome = static_cast<int>(rng() & 1);
        for (size_t q = 0; q < r.num_rows(); q++)
            if (q != k && r.row(q).x(qubit)) r.row_mult(q, k);
        r.row(k) = PauliOp::single(n, qubit, Letter::Z, outcome ? 2 : 0);
        return {outcome, r, true};
    }
    int s = group_sign(r, PauliOp::single(n, qubit, Letter::Z));
    if (s == 0) throw DimensionError("measurement of a free qubit in a mixed state");
    return {s == 1 ? 0 : 1, r, false};
}

std::vector<std::pair<BitString, Cyclo>> gate_matrix_row(const Gate &g, const BitString &c) {
    size_t t = g.target;
    bool ct = c.get(t);
    auto flipped = [&](size_t q) {
        BitString y = c;
        y.flip(q);
        return y;
    };
    auto sign = [](bool neg) { return Cyclo(neg ? -1L : 1L); };
    switch (g.kind) {
        case GateKind::H: {
            Cyclo h = Cyclo(ExactScalar(0, 1));
            BitString y0 = c, y1 = c;
            y0.set(t, false);
            y1.set(t, true);
            return {{y0, h}, {y1, ct ? -h : h}};
        }
        case GateKind::P:
            return {{c, ct ? Cyclo(ExactScalar::i_pow(1)) : Cyclo(1)}};
        case GateKind::X:
            return {{flipped(t), Cyclo(1)}};
        case GateKind::Y: {
            // Y|v> = i (-1)^v |v xor 1>
            BitString y = flipped(t);
            return {{y, Cyclo(ExactScalar::i_pow(y.get(t) ? 3 : 1))}};
        }
        case GateKind::Z:
            return {{c, sign(ct)}};
        case GateKind::CNOT:
            return {{c.get(g.control) ? flipped(t) : c, Cyclo(1)}};
        case GateKind::CZ:
            return {{c, sign(ct && c.get(g.control))}};
        case GateKind::CY: {
            if (!c.get(g.control)) return {{c, Cyclo(1)}};
            BitString y = flipped(t);
            return {{y, Cyclo(ExactScalar::i_pow(y.get(t) ? 3 : 1))}};
        }
    }
    return {};
}

namespace {

GlobalPhase phase_between(const AmplitudeReader &in, const Gate &g, const AmplitudeReader &out) {
    // Read (U psi)[c] at the reference index c of the output state from at
    // most two input amplitudes, then rescale by the change in support size.
    const BitString &c = out.first_index();
    Cyclo value;
    for (const auto &[y, coef] : gate_matrix_row(g, c)) {
        ExactScalar a = in.amplitude_at(y);
        if (!a.is_zero()) value += coef * Cyclo(a);
    }
    int dk = static_cast<int>(in.support_log2()) - static_cast<int>(out.support_log2());
    value = value * Cyclo(ExactScalar(0, dk));
    auto s = value.to_exact();
    if (!s || s->is_zero() || s->half_exp() != 0)
        throw StabgeoError("global phase is not a unit root of unity: " + value.str());
    return {s->omega_exp()};
}

}  // namespace

GlobalPhase global_phase_of_gate(const StabilizerMatrix &m, const Gate &g) {
    AmplitudeReader in(m);
    AmplitudeReader out(conjugate_gate(m, g));
    return phase_between(in, g, out);
}

PhasedState apply_circuit_with_phase(const StabilizerMatrix &m, const CliffordCircuit &c) {
    StabilizerMatrix cur = m;
    GlobalPhase phase;
    if (c.gates.empty()) return {cur, phase};
    AmplitudeReader reader(cur);
    for (const auto &g : c.gates) {
        conjugate_gate_inplace(cur, g);
        AmplitudeReader next(cur);
        phase = phase * phase_between(reader, g, next);
        reader = std::move(next);
    }
    return {cur, phase};
}

}  // namespace stabgeo
