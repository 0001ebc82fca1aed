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

#include "stabgeo/tableau.hpp"

#include <bit>

#include "stabgeo/errors.hpp"

namespace stabgeo {

namespace {

// First set bit (lowest qubit index), or size() when empty.
size_t first_set(const BitString &b) {
    const auto &w = b.words();
    for (size_t k = 0; k < w.size(); k++)
        if (w[k]) return k * 64 + std::countr_zero(w[k]);
    return b.size();
}

bool y_parity(const PauliOp &p) {
    const auto &xw = p.xs().words();
    const auto &zw = p.zs().words();
    size_t c = 0;
    for (size_t k = 0; k < xw.size(); k++) c += std::popcount(xw[k] & zw[k]);
    return c & 1;
}

}  // namespace

StabilizerMatrix::StabilizerMatrix(size_t n, std::vector<PauliOp> rows) : n_(n), rows_(std::move(rows)) {
    for (const auto &r : rows_)
        if (r.num_qubits() != n_) throw DimensionError("row width does not match qubit count");
    if (rows_.size() > n_) throw DimensionError("more rows than qubits");
}

StabilizerMatrix::StabilizerMatrix(std::initializer_list<const char *> rows) {
    for (const char *r : rows) {
        PauliOp p = PauliOp::from_string(r);
        if (rows_.empty()) n_ = p.num_qubits();
        add_row(std::move(p));
    }
}

StabilizerMatrix StabilizerMatrix::zero_state(size_t n) {
    StabilizerMatrix m(n);
    for (size_t q = 0; q < n; q++) m.rows_.push_back(PauliOp::single(n, q, Letter::Z));
    return m;
}

StabilizerMatrix StabilizerMatrix::basis_state(const BitString &b) {
    size_t n = b.size();
    StabilizerMatrix m(n);
    for (size_t q = 0; q < n; q++) m.rows_.push_back(PauliOp::single(n, q, Letter::Z, b.get(q) ? 2 : 0));
    return m;
}

void StabilizerMatrix::add_row(PauliOp p) {
    if (p.num_qubits() != n_) throw DimensionError("row width does not match qubit count");
    if (rows_.size() >= n_) throw DimensionError("more rows than qubits");
    rows_.push_back(std::move(p));
}

void StabilizerMatrix::row_mult(size_t i, size_t j) {
    if (i == j || i >= rows_.size() || j >= rows_.size()) throw IndexError("bad row index");
    rows_[i].left_mul(rows_[j]);
    if (rows_[i].phase_exp() & 1) throw MalformedPhaseError("row product has imaginary phase: " + rows_[i].str());
}

void StabilizerMatrix::check_well_formed() const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].phase_exp() & 1) throw MalformedPhaseError("row " + std::to_string(i + 1) + " has imaginary phase");
        for (size_t j = i + 1; j < rows_.size(); j++)
            if (!commutes(rows_[i], rows_[j]))
                throw MalformedPhaseError("rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " anticommute");
    }
    if (canonicalize(*this).num_rows() != rows_.size()) throw MalformedPhaseError("rows are not independent");
}

std::string StabilizerMatrix::str() const {
    std::string s;
    for (size_t i = 0; i < rows_.size(); i++) {
        if (i) s += '\n';
        s += rows_[i].str();
    }
    return s;
}

StabilizerMatrix row_mult(StabilizerMatrix m, size_t i, size_t j) {
    m.row_mult(i, j);
    return m;
}

void canonicalize_inplace(StabilizerMatrix &m) {
    size_t n = m.num_qubits();
    size_t r = m.num_rows();
    size_t i = 0;
    for (size_t j = 0; j < n && i < r; j++) {
        size_t k = i;
        while (k < r && !m.row(k).x(j)) k++;
        if (k == r) continue;
        m.swap_rows(i, k);
        for (size_t q = 0; q < r; q++)
            if (q != i && m.row(q).x(j)) m.row_mult(q, i);
        i++;
    }
    // Z block. Rows above i may carry Z or Y in a pivot column and get cleaned
    // here too; that never disturbs their X parts.
    for (size_t j = 0; j < n && i < r; j++) {
        size_t k = i;
        while (k < r && !(m.row(k).z(j) && !m.row(k).x(j))) k++;
        if (k == r) continue;
        m.swap_rows(i, k);
        for (size_t q = 0; q < r; q++)
            if (q != i && m.row(q).z(j)) m.row_mult(q, i);
        i++;
    }
    for (size_t q = i; q < r; q++) {
        if (!m.row(q).is_identity_letters()) throw MalformedPhaseError("canonical reduction did not terminate cleanly");
        if (m.row(q).phase_exp() != 0) throw MalformedPhaseError("-I is in the generated group");
    }
    m.rows().resize(i);
}

StabilizerMatrix canonicalize(StabilizerMatrix m) {
    canonicalize_inplace(m);
    return m;
}

bool is_canonical(const StabilizerMatrix &m) { return canonicalize(m) == m; }

size_t x_block_size(const StabilizerMatrix &canonical) {
    size_t k = 0;
    while (k < canonical.num_rows() && canonical.row(k).has_x_part()) k++;
    return k;
}

std::optional<BitString> is_basis_form(const StabilizerMatrix &m) {
    size_t n = m.num_qubits();
    if (m.num_rows() != n) return std::nullopt;
    BitString b(n);
    for (size_t q = 0; q < n; q++) {
        const PauliOp &row = m.row(q);
        if (row.has_x_part() || row.zs().popcount() != 1 || !row.z(q)) return std::nullopt;
        if (row.phase_exp() == 2) {
            b.set(q, true);
        } else if (row.phase_exp() != 0) {
            return std::nullopt;
        }
    }
    return b;
}

int group_sign(const StabilizerMatrix &m, const PauliOp &p) {
    StabilizerMatrix c = canonicalize(m);
    size_t k = x_block_size(c);
    PauliOp r = p;
    for (size_t i = 0; i < k; i++) {
        size_t piv = first_set(c.row(i).xs());
        if (r.x(piv)) r.left_mul(c.row(i));
    }
    if (r.has_x_part()) return 0;
    for (size_t i = k; i < c.num_rows(); i++) {
        size_t piv = first_set(c.row(i).zs());
        if (r.z(piv)) r.left_mul(c.row(i));
    }
    if (!r.is_identity_letters()) return 0;
    if (r.phase_exp() & 1) throw MalformedPhaseError("non-Hermitian Pauli queried against a stabilizer group");
    return r.phase_exp() == 0 ? 1 : -1;
}

AmplitudeReader::AmplitudeReader(const StabilizerMatrix &m) : canon_(canonicalize(m)) {
    size_t n = canon_.num_qubits();
    if (canon_.num_rows() != n) throw DimensionError("amplitudes need a pure state");
    size_t k = x_block_size(canon_);
    BitString t(n);
    for (size_t i = k; i < n; i++)
        if (canon_.row(i).is_negative()) t.set(first_set(canon_.row(i).zs()), true);
    for (size_t i = 0; i < k; i++) {
        xrows_.push_back(i);
        xpivots_.push_back(first_set(canon_.row(i).xs()));
    }
    x0_ = reduce_from(t, 0);
}

BitString AmplitudeReader::reduce_from(BitString y, size_t start) const {
    for (size_t i = start; i < xrows_.size(); i++)
        if (y.get(xpivots_[i])) y ^= canon_.row(xrows_[i]).xs();
    return y;
}

ExactScalar AmplitudeReader::amplitude_at(const BitString &x) const {
    if (x.size() != canon_.num_qubits()) throw DimensionError("basis state length mismatch");
    BitString d = x ^ x0_;
    PauliOp g(canon_.num_qubits());
    for (size_t i = 0; i < xrows_.size(); i++) {
        if (!d.get(xpivots_[i])) continue;
        const PauliOp &row = canon_.row(xrows_[i]);
        g.left_mul(row);
        d ^= row.xs();
    }
    if (d.any()) return ExactScalar::zero();
    // psi = g psi and g maps x0 to x, so psi[x] = <x|g|x0> psi[x0].
    auto [y, ph] = apply_to_basis(g, x0_);
    return ExactScalar::i_pow(ph);
}

BitString AmplitudeReader::second_index() const {
    if (xrows_.empty()) throw DimensionError("basis state has a single amplitude");
    return x0_ ^ canon_.row(xrows_.back()).xs();
}

std::optional<BitString> AmplitudeReader::first_imaginary_index() const {
    // The parity of Y letters is additive over commuting rows, so the
    // imaginary amplitudes are those whose group element has an odd-Y row
    // count. Minimizing picks the last such row and reduces by later rows.
    for (size_t i = xrows_.size(); i-- > 0;) {
        const PauliOp &row = canon_.row(xrows_[i]);
        if (y_parity(row)) return reduce_from(x0_ ^ row.xs(), i + 1);
    }
    return std::nullopt;
}

AmplitudeSamples sample_amplitudes(const StabilizerMatrix &m, int count) {
    AmplitudeReader reader(m);
    AmplitudeSamples out;
    out.samples.push_back({reader.first_index(), ExactScalar::one()});
    if (count < 2) return out;
    if (reader.support_log2() == 0) {
        out.single_only = true;
        return out;
    }
    auto im = reader.first_imaginary_index();
    BitString second = im ? *im : reader.second_index();
    out.samples.push_back({second, reader.amplitude_at(second)});
    return out;
}

std::vector<ExactScalar> to_dense(const StabilizerMatrix &m, size_t max_qubits) {
    size_t n = m.num_qubits();
    if (n > max_qubits || n > 30) throw SizeError("dense vector requested for " + std::to_string(n) + " qubits");
    AmplitudeReader reader(m);
    std::vector<ExactScalar> v(size_t{1} << n);
    for (uint64_t x = 0; x < v.size(); x++) v[x] = reader.amplitude_at(BitString::from_index(n, x));
    return v;
}

StabilizerMatrix cofactor(const StabilizerMatrix &m, size_t qubit, int outcome) {
    size_t n = m.num_qubits();
    if (qubit >= n) throw IndexError("qubit out of range");
    StabilizerMatrix r = m;
    size_t k = 0;
    while (k < r.num_rows() && !r.row(k).x(qubit)) k++;
    if (k < r.num_rows()) {
        for (size_t q = 0; q < r.num_rows(); q++)
            if (q != k && r.row(q).x(qubit)) r.row_mult(q, k);
        r.row(k) = PauliOp::single(n, qubit, Letter::Z, outcome ? 2 : 0);
        return canonicalize(r);
    }
    int s = group_sign(r, PauliOp::single(n, qubit, Letter::Z));
    if (s == 0) throw DimensionError("cofactor of a mixed state on a free qubit");
    if ((s == 1) != (outcome == 0)) throw ZeroCofactorError("cofactor has zero support");
    return canonicalize(r);
}

StabilizerMatrix partial_trace(const StabilizerMatrix &m, size_t qubit) {
    size_t n = m.num_qubits();
    if (qubit >= n) throw IndexError("qubit out of range");
    StabilizerMatrix r = m;
    size_t rows = r.num_rows();
    size_t r1 = 0;
    while (r1 < rows && !r.row(r1).x(qubit)) r1++;
    if (r1 < rows)
        for (size_t q = 0; q < rows; q++)
            if (q != r1 && r.row(q).x(qubit)) r.row_mult(q, r1);
    size_t r2 = 0;
    while (r2 < rows && (r2 == r1 || !r.row(r2).z(qubit))) r2++;
    if (r2 < rows)
        for (size_t q = 0; q < rows; q++)
            if (q != r1 && q != r2 && r.row(q).z(qubit)) r.row_mult(q, r2);
    StabilizerMatrix out(n - 1);
    for (size_t q = 0; q < rows; q++) {
        if (q == r1 || q == r2) continue;
        PauliOp p(n - 1);
        for (size_t c = 0, d = 0; c < n; c++) {
            if (c == qubit) continue;
            p.set_letter(d++, r.row(q).letter(c));
        }
        p.set_phase_exp(r.row(q).phase_exp());
        out.add_row(std::move(p));
    }
    return canonicalize(out);
}

bool is_similar(const StabilizerMatrix &a, const StabilizerMatrix &b) {
    if (!is_canonical(a) || !is_canonical(b)) throw NonCanonicalError("similarity needs canonical matrices");
    if (a.num_qubits() != b.num_qubits() || a.num_rows() != b.num_rows()) return false;
    for (size_t i = 0; i < a.num_rows(); i++)
        if (!a.row(i).same_letters(b.row(i))) return false;
    return true;
}

}  // namespace stabgeo
