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

#include "stabgeo/geometry.hpp"

#include "stabgeo/errors.hpp"
#include "stabgeo/synth.hpp"

namespace stabgeo {

namespace {

void require_pure_pair(const StabilizerMatrix &a, const StabilizerMatrix &b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionError("qubit counts differ");
    if (!a.is_pure() || !b.is_pure()) throw DimensionError("inner products need pure states");
}

}  // namespace

BasisFrame::BasisFrame(const StabilizerMatrix &psi) {
    if (!psi.is_pure()) throw DimensionError("inner products need pure states");
    BasisNormalization bn = basis_norm_circuit(psi);
    circuit_ = std::move(bn.circuit);
    basis_ = std::move(bn.basis);
}

ExactScalar BasisFrame::abs_inner(const StabilizerMatrix &phi) const {
    if (phi.num_qubits() != basis_.size()) throw DimensionError("qubit counts differ");
    if (!phi.is_pure()) throw DimensionError("inner products need pure states");
    StabilizerMatrix q = canonicalize(conjugate_circuit(phi, circuit_));
    int k = 0;
    for (const auto &row : q.rows()) {
        if (row.has_x_part()) {
            k++;
            continue;
        }
        // The product of the basis rows at the Z positions of this row has the
        // same letters and sign (-1)^(number of those rows that are negative).
        bool r_negative = row.zs().dot(basis_);
        if (r_negative != row.is_negative()) return ExactScalar::zero();
    }
    return {0, k};
}

ExactScalar inner_product_abs(const StabilizerMatrix &psi, const StabilizerMatrix &phi) {
    require_pure_pair(psi, phi);
    return BasisFrame(psi).abs_inner(phi);
}

ExactScalar inner_product_complex(const StabilizerMatrix &psi, const StabilizerMatrix &phi) {
    require_pure_pair(psi, phi);
    BasisNormalization bn = basis_norm_circuit(psi);
    PhasedState a = apply_circuit_with_phase(psi, bn.circuit);
    PhasedState b = apply_circuit_with_phase(phi, bn.circuit);
    AmplitudeReader reader(b.matrix);
    ExactScalar amp = reader.amplitude_at(bn.basis);
    if (amp.is_zero()) return amp;
    ExactScalar mag(0, static_cast<int>(reader.support_log2()));
    return a.phase.scalar().conj() * b.phase.scalar() * amp * mag;
}

std::string NeighborClass::str() const {
    switch (kind) {
        case Parallel:
            return "parallel";
        case Orthogonal:
            return "orthogonal";
        case Neighbor:
            return std::to_string(k) + "-neighbor";
    }
    return "?";
}

NeighborClass classify_magnitude(const ExactScalar &abs_ip) {
    if (abs_ip.is_zero()) return {NeighborClass::Orthogonal, -1};
    if (abs_ip.half_exp() == 0) return {NeighborClass::Parallel, 0};
    return {NeighborClass::Neighbor, abs_ip.half_exp()};
}

NeighborClass k_neighbor_class(const StabilizerMatrix &psi, const StabilizerMatrix &phi) {
    return classify_magnitude(inner_product_abs(psi, phi));
}

StabilizerMatrix sum_basis_states(const BitString &b1, const BitString &b2, int t) {
    size_t n = b1.size();
    if (b2.size() != n) throw DimensionError("basis states differ in length");
    BitString f = b1 ^ b2;
    if (!f.any()) throw IndexError("sum of a basis state with itself");
    t = ((t % 4) + 4) % 4;
    std::vector<size_t> d;
    StabilizerMatrix m(n);
    for (size_t q = 0; q < n; q++) {
        if (f.get(q)) {
            d.push_back(q);
        } else {
            m.add_row(PauliOp::single(n, q, Letter::Z));
        }
    }
    for (size_t i = 0; i + 1 < d.size(); i++) {
        PauliOp zz(n);
        zz.set_letter(d[i], Letter::Z);
        zz.set_letter(d[i + 1], Letter::Z);
        m.add_row(std::move(zz));
    }
    // |0..0> + i^t |f>: X on the support of f, with a Y on its first qubit when
    // t is odd, and sign (-1)^((t - t mod 2)/2).
    PauliOp g(n);
    for (size_t q : d) g.set_letter(q, Letter::X);
    if (t & 1) g.set_letter(d[0], Letter::Y);
    g.set_phase_exp(((t >> 1) & 1) * 2);
    m.add_row(std::move(g));
    for (size_t q = 0; q < n; q++)
        if (b1.get(q)) conjugate_gate_inplace(m, Gate::x(q));
    return canonicalize(m);
}

std::vector<StabilizerMatrix> nearest_neighbors(const StabilizerMatrix &m) {
    size_t n = m.num_qubits();
    if (n > 20) throw SizeError("nearest_neighbors is exponential in n");
    BasisNormalization bn = basis_norm_circuit(m);
    CliffordCircuit inv = inverse_circuit(bn.circuit);
    std::vector<StabilizerMatrix> out;
    out.reserve(4 * ((size_t{1} << n) - 1));
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        BitString other = BitString::from_index(n, x);
        if (other == bn.basis) continue;
        for (int l = 0; l < 4; l++)
            out.push_back(canonicalize(conjugate_circuit(sum_basis_states(bn.basis, other, l), inv)));
    }
    return out;
}

StabilizerMatrix tensor(const StabilizerMatrix &a, const StabilizerMatrix &b) {
    size_t na = a.num_qubits(), nb = b.num_qubits();
    StabilizerMatrix out(na + nb);
    for (const auto &row : a.rows()) {
        PauliOp p(na + nb);
        for (size_t q = 0; q < na; q++) p.set_letter(q, row.letter(q));
        p.set_phase_exp(row.phase_exp());
        out.add_row(std::move(p));
    }
    for (const auto &row : b.rows()) {
        PauliOp p(na + nb);
        for (size_t q = 0; q < nb; q++) p.set_letter(na + q, row.letter(q));
        p.set_phase_exp(row.phase_exp());
        out.add_row(std::move(p));
    }
    return out;
}

StabilizerMatrix bivector(const StabilizerMatrix &psi_in, const StabilizerMatrix &phi_in) {
    require_pure_pair(psi_in, phi_in);
    StabilizerMatrix psi = canonicalize(psi_in);
    StabilizerMatrix phi = canonicalize(phi_in);
    NeighborClass cls = k_neighbor_class(psi, phi);
    if (cls.kind == NeighborClass::Parallel) throw ParallelStatesError("wedge of parallel states is zero");
    if (cls.kind == NeighborClass::Orthogonal && !is_similar(psi, phi))
        throw NotStabilizerBivector("orthogonal states with dissimilar matrices");
    if (cls.kind == NeighborClass::Neighbor && cls.k > 1)
        throw NotStabilizerBivector("states are " + cls.str() + "s");

    if (cls.kind == NeighborClass::Neighbor) {
        // phi = (psi + c P psi)/sqrt2, so psi ^ phi is proportional to psi ^ P psi.
        // In the frame where psi is |b>, phi has support {b, b'} and P psi is |b'>.
        BasisNormalization bn = basis_norm_circuit(psi);
        AmplitudeReader r(conjugate_circuit(phi, bn.circuit));
        BitString other = r.first_index() == bn.basis ? r.second_index() : r.first_index();
        phi = canonicalize(conjugate_circuit(StabilizerMatrix::basis_state(other), inverse_circuit(bn.circuit)));
    }

    StabilizerMatrix t1 = tensor(psi, phi);
    StabilizerMatrix t2 = tensor(phi, psi);
    BasisNormalization bn = basis_norm_circuit(t1);
    PhasedState s1 = apply_circuit_with_phase(t1, bn.circuit);
    PhasedState s2 = apply_circuit_with_phase(t2, bn.circuit);
    auto b2 = is_basis_form(canonicalize(s2.matrix));
    if (!b2) throw StabgeoError("swapped tensor did not normalize to a basis state");
    // alpha|b1> - beta|b2> is proportional to |b1> + i^t |b2> with i^t = -beta/alpha.
    int m = (4 + s2.phase.omega_exp - s1.phase.omega_exp) & 7;
    if (m & 1) throw StabgeoError("relative phase of the wedge terms is not a power of i");
    StabilizerMatrix sum = sum_basis_states(bn.basis, *b2, m / 2);
    return canonicalize(conjugate_circuit(sum, inverse_circuit(bn.circuit)));
}

mpq_class WedgeNorm::squared() const {
    switch (cls.kind) {
        case NeighborClass::Parallel:
            return 0;
        case NeighborClass::Orthogonal:
            return 1;
        case NeighborClass::Neighbor: {
            mpz_class den = 1;
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), cls.k);
            return mpq_class(den - 1, den);
        }
    }
    return 0;
}

std::string WedgeNorm::str() const {
    switch (cls.kind) {
        case NeighborClass::Parallel:
            return "0";
        case NeighborClass::Orthogonal:
            return "1";
        case NeighborClass::Neighbor:
            return "sqrt(1 - 2^-" + std::to_string(cls.k) + ")";
    }
    return "?";
}

WedgeNorm wedge_norm(const StabilizerMatrix &psi, const StabilizerMatrix &phi) { return {k_neighbor_class(psi, phi)}; }

void StabilizerSum::insert(const Cyclo &coef, const StabilizerMatrix &m) {
    if (terms_.empty() && n_ == 0) n_ = m.num_qubits();
    if (m.num_qubits() != n_) throw DimensionError("sum terms differ in qubit count");
    StabilizerMatrix c = canonicalize(m);
    for (size_t i = 0; i < terms_.size(); i++) {
        if (terms_[i].matrix == c) {
            terms_[i].coef += coef;
            if (terms_[i].coef.is_zero()) terms_.erase(terms_.begin() + static_cast<long>(i));
            return;
        }
    }
    if (!coef.is_zero()) terms_.push_back({coef, std::move(c)});
}

namespace {

// The letters of column j over all rows; equal signatures mean the matrices
// agree on column j up to signs.
std::vector<Letter> column_signature(const StabilizerMatrix &m, size_t j) {
    std::vector<Letter> s;
    s.reserve(m.num_rows());
    for (const auto &row : m.rows()) s.push_back(row.letter(j));
    return s;
}

bool column_has_x(const StabilizerMatrix &m, size_t j) {
    for (const auto &row : m.rows())
        if (row.x(j)) return true;
    return false;
}

bool all_similar(const StabilizerSum &s) {
    for (size_t i = 1; i < s.size(); i++)
        if (!is_similar(s.terms()[0].matrix, s.terms()[i].matrix)) return false;
    return true;
}

StabilizerSum decompose_column(const StabilizerSum &s, size_t j) {
    StabilizerSum out(s.num_qubits());
    Cyclo inv_sqrt2(ExactScalar(0, 1));
    for (const auto &term : s.terms()) {
        if (!column_has_x(term.matrix, j)) {
            out.insert(term.coef, term.matrix);
            continue;
        }
        AmplitudeReader reader(term.matrix);
        for (int a = 0; a < 2; a++) {
            StabilizerMatrix part = cofactor(term.matrix, j, a);
            AmplitudeReader pr(part);
            ExactScalar alpha = reader.amplitude_at(pr.first_index());
            out.insert(term.coef * Cyclo(alpha) * inv_sqrt2, part);
        }
    }
    return out;
}

}  // namespace

StabilizerSum orthogonalize(const StabilizerSum &input) {
    size_t n = input.num_qubits();
    StabilizerSum s(n);
    for (const auto &t : input.terms()) s.insert(t.coef, t.matrix);
    // A column only needs splitting when the terms disagree on it. Repeated
    // sweeps settle columns whose letters changed after a later split.
    while (!all_similar(s)) {
        for (size_t j = 0; j < n && s.size() > 1; j++) {
            auto sig = column_signature(s.terms()[0].matrix, j);
            bool differ = false;
            for (size_t i = 1; i < s.size() && !differ; i++)
                differ = s.terms()[i].matrix.num_rows() != s.terms()[0].matrix.num_rows() ||
                         column_signature(s.terms()[i].matrix, j) != sig;
            if (differ) s = decompose_column(s, j);
        }
    }
    return s;
}

bool gramian_dependent(const std::vector<StabilizerMatrix> &states) {
    size_t m = states.size();
    std::vector<std::vector<Cyclo>> g(m, std::vector<Cyclo>(m));
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) g[i][j] = Cyclo(inner_product_complex(states[i], states[j]));
    // Exact elimination over Q(omega); the determinant vanishes iff a pivot is missing.
    for (size_t c = 0; c < m; c++) {
        size_t p = c;
        while (p < m && g[p][c].is_zero()) p++;
        if (p == m) return true;
        std::swap(g[p], g[c]);
        Cyclo inv = g[c][c].inverse();
        for (size_t r = c + 1; r < m; r++) {
            if (g[r][c].is_zero()) continue;
            Cyclo f = g[r][c] * inv;
            for (size_t k = c; k < m; k++) g[r][k] -= f * g[c][k];
        }
    }
    return false;
}

}  // namespace stabgeo
