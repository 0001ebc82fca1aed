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

#include "stabgeo/clifford.hpp"
#include "stabgeo/exact.hpp"
#include "stabgeo/geometry.hpp"
#include "stabgeo/tableau.hpp"

namespace stabgeo {

// Matrix text: one Pauli row per line, '#' comments and blank lines ignored.
StabilizerMatrix parse_matrix(const std::string &text);
std::string emit_matrix(const StabilizerMatrix &m);

// Circuit text: one gate per line with 1-indexed qubits, e.g. "CNOT 1 2".
// When n is 0 the qubit count is the largest index used.
CliffordCircuit parse_circuit(const std::string &text, size_t n = 0);
std::string emit_circuit(const CliffordCircuit &c);

// Cyclotomic scalar in the form printed by Cyclo::str, e.g. "1/2 - w^3",
// or an ExactScalar "w^m * 2^-k/2".
Cyclo parse_cyclo(const std::string &text);

// Sum text: blocks introduced by "term <coefficient>" followed by matrix rows.
StabilizerSum parse_sum(const std::string &text);
std::string emit_sum(const StabilizerSum &s);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

}  // namespace stabgeo
