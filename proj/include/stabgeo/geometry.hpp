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

#include <string>
#include <vector>

#include "stabgeo/clifford.hpp"
#include "stabgeo/exact.hpp"
#include "stabgeo/tableau.hpp"

namespace stabgeo {

// Basis-normalization frame of a fixed state, reusable across many partners.
class BasisFrame {
   public:
    explicit BasisFrame(const StabilizerMatrix &psi);
    // |<psi|phi>|, either 0 or 2^(-k/2).
    ExactScalar abs_inner(const StabilizerMatrix &phi) const;
    const CliffordCircuit &circuit() const { return circuit_; }
    const BitString &basis() const { return basis_; }

   private:
    CliffordCircuit circuit_;
    BitString basis_;
};

// |<psi|phi>|, either 0 or 2^(-k/2).
ExactScalar inner_product_abs(const StabilizerMatrix &psi, const StabilizerMatrix &phi);
// <psi|phi> for the normalized states whose first nonzero amplitude is positive.
ExactScalar inner_product_complex(const StabilizerMatrix &psi, const StabilizerMatrix &phi);

struct NeighborClass {
    enum Kind { Parallel, Neighbor, Orthogonal };
    Kind kind;
    int k;  // 0 for parallel, -1 for orthogonal

    bool operator==(const NeighborClass &o) const = default;
    std::string str() const;
};

NeighborClass classify_magnitude(const ExactScalar &abs_ip);
NeighborClass k_neighbor_class(const StabilizerMatrix &psi, const StabilizerMatrix &phi);

// (|b1> + i^t |b2>)/sqrt2.
StabilizerMatrix sum_basis_states(const BitString &b1, const BitString &b2, int t);

// The 4(2^n - 1) states (|psi> + i^l P|psi>)/sqrt2.
std::vector<StabilizerMatrix> nearest_neighbors(const StabilizerMatrix &m);

StabilizerMatrix tensor(const StabilizerMatrix &a, const StabilizerMatrix &b);

// Matrix of psi (x) phi - phi (x) psi on 2n qubits.
StabilizerMatrix bivector(const StabilizerMatrix &psi, const StabilizerMatrix &phi);

struct WedgeNorm {
    // ||psi ^ phi||^2 = 1 - |<psi|phi>|^2 = 1 - 2^-k.
    NeighborClass cls;
    mpq_class squared() const;
    std::string str() const;
};

WedgeNorm wedge_norm(const StabilizerMatrix &psi, const StabilizerMatrix &phi);

struct SumTerm {
    Cyclo coef;
    StabilizerMatrix matrix;  // canonical
};

// sum_j c_j |psi_j>, each |psi_j> normalized with positive first amplitude.
class StabilizerSum {
   public:
    StabilizerSum() = default;
    explicit StabilizerSum(size_t n) : n_(n) {}

    size_t num_qubits() const { return n_; }
    const std::vector<SumTerm> &terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    // Adds c|m>, merging with an identical canonical matrix. Zero terms vanish.
    void insert(const Cyclo &coef, const StabilizerMatrix &m);

   private:
    size_t n_ = 0;
    std::vector<SumTerm> terms_;
};

StabilizerSum orthogonalize(const StabilizerSum &s);

bool gramian_dependent(const std::vector<StabilizerMatrix> &states);

}  // namespace stabgeo
