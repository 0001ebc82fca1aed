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
#include <string>
#include <vector>

#include "stabgeo/clifford.hpp"
#include "stabgeo/tableau.hpp"

namespace stabgeo {

// SplitMix64 step: advances state and returns the next output.
uint64_t splitmix64(uint64_t &state);

// ceil(beta * n * log2 n), the gate budget of a random benchmark circuit.
size_t random_circuit_size(size_t n, double beta);

// Gates drawn uniformly from {CNOT, P, H} on uniform qubits, control != target.
CliffordCircuit random_circuit(size_t n, double beta, uint64_t seed);

StabilizerMatrix ghz_state(size_t n);

enum class BenchReference { Random, Zero, Ghz };

struct BenchRow {
    size_t n = 0;
    double beta = 0;
    double mean_seconds = 0;
    double median_seconds = 0;
    double mean_gates = 0;
    double median_gates = 0;
};

// Times inner_product_abs between a reference state and random states C|0...0>
// and records the size of the basis-normalization circuit of the random state.
std::vector<BenchRow> bench_inner(const std::vector<size_t> &ns, const std::vector<double> &betas, size_t reps,
                                  uint64_t seed, BenchReference ref = BenchReference::Random);

std::string bench_csv(const std::vector<BenchRow> &rows);

// Least-squares slope of log y against log x.
double fit_exponent(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace stabgeo
