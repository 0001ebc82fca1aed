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

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "stabgeo/bitstring.hpp"
#include "stabgeo/exact.hpp"
#include "stabgeo/pauli.hpp"

namespace stabgeo {

// Generator rows of a stabilizer group. r == n rows for a pure state; fewer for
// a mixed state produced by partial_trace.
class StabilizerMatrix {
   public:
    StabilizerMatrix() = default;
    explicit StabilizerMatrix(size_t n) : n_(n) {}
    StabilizerMatrix(size_t n, std::vector<PauliOp> rows);
    StabilizerMatrix(std::initializer_list<const char *> rows);

    // |0...0>, stabilized by Z_1, ..., Z_n.
    static StabilizerMatrix zero_state(size_t n);
    static StabilizerMatrix basis_state(const BitString &b);

    size_t num_qubits() const { return n_; }
    size_t num_rows() const { return rows_.size(); }
    bool is_pure() const { return rows_.size() == n_; }

    const PauliOp &row(size_t i) const { return rows_[i]; }
    PauliOp &row(size_t i) { return rows_[i]; }
    const std::vector<PauliOp> &rows() const { return rows_; }
    std::vector<PauliOp> &rows() { return rows_; }

    void add_row(PauliOp p);
    void swap_rows(size_t i, size_t j) { std::swap(rows_[i], rows_[j]); }
    // Row i <- row j * row i. Throws MalformedPhaseError on an odd result phase.
    void row_mult(size_t i, size_t j);

    // Throws if rows anticommute, carry odd phases or are dependent.
    void check_well_formed() const;

    bool operator==(const StabilizerMatrix &o) const = default;
    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<PauliOp> rows_;
};

StabilizerMatrix row_mult(StabilizerMatrix m, size_t i, size_t j);

// Row-reduced echelon form: rows with X/Y content first with strictly
// right-moving leading X/Y columns, then Z-only rows in reduced echelon form.
// Identity rows are dropped.
StabilizerMatrix canonicalize(StabilizerMatrix m);
void canonicalize_inplace(StabilizerMatrix &m);
bool is_canonical(const StabilizerMatrix &m);
// Number of leading rows carrying an X or Y literal (the X block).
size_t x_block_size(const StabilizerMatrix &canonical);

// Diagonal +-Z_j form. Bit j of the result is 1 iff row j is -Z_j.
std::optional<BitString> is_basis_form(const StabilizerMatrix &m);

// Decides whether +p or -p is a group element. Returns +1, -1 or 0 (neither).
int group_sign(const StabilizerMatrix &m, const PauliOp &p);

// Exact amplitude reader for a pure state. Amplitudes are relative to the
// lowest-index nonzero amplitude, which is 1; the support has 2^k elements.
class AmplitudeReader {
   public:
    explicit AmplitudeReader(const StabilizerMatrix &m);

    size_t support_log2() const { return xrows_.size(); }
    const BitString &first_index() const { return x0_; }
    // Returns 0 or one of +-1, +-i.
    ExactScalar amplitude_at(const BitString &x) const;
    // Lowest-index support element other than the first; requires k >= 1.
    BitString second_index() const;
    // Lowest-index support element with imaginary amplitude, if any.
    std::optional<BitString> first_imaginary_index() const;
    const StabilizerMatrix &canonical() const { return canon_; }

   private:
    BitString reduce_from(BitString y, size_t start) const;

    StabilizerMatrix canon_;
    std::vector<size_t> xrows_;
    std::vector<size_t> xpivots_;
    BitString x0_;
};

struct AmplitudeSample {
    BitString index;
    ExactScalar amplitude;
};

struct AmplitudeSamples {
    std::vector<AmplitudeSample> samples;
    // Set when two samples were requested but the state is a basis state.
    bool single_only = false;
};

AmplitudeSamples sample_amplitudes(const StabilizerMatrix &m, int count);

// Exact amplitudes normalized so the lowest-index nonzero entry is 1. The true
// normalized vector is this divided by sqrt(2^support_log2).
std::vector<ExactScalar> to_dense(const StabilizerMatrix &m, size_t max_qubits = 10);

// Projection onto Z_j = (-1)^a, returned in canonical form.
StabilizerMatrix cofactor(const StabilizerMatrix &m, size_t qubit, int outcome);

StabilizerMatrix partial_trace(const StabilizerMatrix &m, size_t qubit);

bool is_similar(const StabilizerMatrix &a, const StabilizerMatrix &b);

}  // namespace stabgeo
