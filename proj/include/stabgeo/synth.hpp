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

#include "stabgeo/clifford.hpp"
#include "stabgeo/tableau.hpp"

namespace stabgeo {

struct BasisNormalization {
    CliffordCircuit circuit;
    // C|psi> is proportional to |basis>.
    BitString basis;
    // The conjugated matrix, in basis form.
    StabilizerMatrix reduced;
};

// H-CNOT-CZ-P-H circuit mapping a pure state to a computational basis state.
// At most 2n H gates, n P gates and n^2 CNOT/CZ gates, so size <= n^2 + 3n.
BasisNormalization basis_norm_circuit(const StabilizerMatrix &m);

// True iff gate kinds follow the block order H < CNOT < CZ < P < H.
bool verify_template(const CliffordCircuit &c);

}  // namespace stabgeo
