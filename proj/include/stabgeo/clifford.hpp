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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stabgeo/exact.hpp"
#include "stabgeo/tableau.hpp"

namespace stabgeo {

enum class GateKind : uint8_t { H, P, X, Y, Z, CNOT, CZ, CY };

const char *gate_name(GateKind k);
bool is_two_qubit(GateKind k);

struct Gate {
    GateKind kind = GateKind::H;
    size_t target = 0;
    // Only meaningful for CNOT, CZ and CY. For CZ the two roles are symmetric.
    size_t control = 0;

    static Gate h(size_t q) { return {GateKind::H, q, 0}; }
    static Gate p(size_t q) { return {GateKind::P, q, 0}; }
    static Gate x(size_t q) { return {GateKind::X, q, 0}; }
    static Gate y(size_t q) { return {GateKind::Y, q, 0}; }
    static Gate z(size_t q) { return {GateKind::Z, q, 0}; }
    static Gate cnot(size_t c, size_t t) { return {GateKind::CNOT, t, c}; }
    static Gate cz(size_t a, size_t b) { return {GateKind::CZ, b, a}; }
    static Gate cy(size_t c, size_t t) { return {GateKind::CY, t, c}; }

    bool operator==(const Gate &o) const = default;
    std::string str() const;  // 1-indexed, file syntax
};

struct CliffordCircuit {
    size_t n = 0;
    std::vector<Gate> gates;

    CliffordCircuit() = default;
    explicit CliffordCircuit(size_t n_) : n(n_) {}
    CliffordCircuit(size_t n_, std::vector<Gate> g) : n(n_), gates(std::move(g)) {}

    void append(const Gate &g) { gates.push_back(g); }
    size_t size() const { return gates.size(); }
    bool operator==(const CliffordCircuit &o) const = default;
};

struct GlobalPhase {
    int omega_exp = 0;
    ExactScalar scalar() const { return {omega_exp, 0}; }
    GlobalPhase operator*(GlobalPhase o) const { return {(omega_exp + o.omega_exp) & 7}; }
    bool operator==(const GlobalPhase &o) const = default;
};

void validate_gate(const Gate &g, size_t n);

// U p U^dagger.
void conjugate_pauli(PauliOp &p, const Gate &g);
void conjugate_gate_inplace(StabilizerMatrix &m, const Gate &g);
StabilizerMatrix conjugate_gate(StabilizerMatrix m, const Gate &g);
StabilizerMatrix conjugate_circuit(StabilizerMatrix m, const CliffordCircuit &c);

CliffordCircuit inverse_circuit(const CliffordCircuit &c);

struct MeasureResult {
    int outcome;
    StabilizerMatrix posterior;
    bool random;
};

MeasureResult measure(const StabilizerMatrix &m, size_t qubit, std::mt19937_64 &rng);

// Nonzero entries <c|U|y> of row c of a gate's unitary.
std::vector<std::pair<BitString, Cyclo>> gate_matrix_row(const Gate &g, const BitString &c);

// U |psi(m)> = omega^k |psi(U m U^dag)>, both sides normalized with their
// first nonzero amplitude real positive.
GlobalPhase global_phase_of_gate(const StabilizerMatrix &m, const Gate &g);

struct PhasedState {
    StabilizerMatrix matrix;
    GlobalPhase phase;
};

PhasedState apply_circuit_with_phase(const StabilizerMatrix &m, const CliffordCircuit &c);

}  // namespace stabgeo
