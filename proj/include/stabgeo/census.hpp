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

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "stabgeo/exact.hpp"
#include "stabgeo/geometry.hpp"
#include "stabgeo/tableau.hpp"

namespace stabgeo {

// N(n) = 2^n prod_{k=0}^{n-1} (2^(n-k) + 1).
mpz_class count_states(int n);
// N(n) = 2 (2^n + 1) N(n-1), N(0) = 1.
mpz_class count_states_recurrence(int n);
// L_n(k), the number of k-neighbors of any n-qubit stabilizer state.
mpz_class count_k_neighbors(int n, int k);
mpz_class count_orthogonal(int n);

struct LimitBounds {
    double lower;
    double upper;
};
// Interval holding lim_n L_n(n-k)/N(n); M5 evaluated with both products.
LimitBounds limit_bounds(int k);

// Every n-qubit pure stabilizer state exactly once, in canonical form.
std::vector<StabilizerMatrix> enumerate_states(int n);
// The N(n)/2^n canonical shapes, one sign pattern each.
std::vector<StabilizerMatrix> enumerate_shapes(int n);

struct CountReport {
    int n = 0;
    mpz_class total = 0;
    std::map<int, mpz_class> per_k;
    mpz_class orthogonal = 0;
    mpz_class parallel = 0;  // the reference itself

    bool operator==(const CountReport &o) const {
        return n == o.n && total == o.total && per_k == o.per_k && orthogonal == o.orthogonal && parallel == o.parallel;
    }
    std::string csv() const;
};

// Classification of every state against `reference`. The serial version is the
// reference implementation for the OpenMP one.
CountReport angle_histogram_serial(const std::vector<StabilizerMatrix> &states, const StabilizerMatrix &reference);
CountReport angle_histogram_parallel(const std::vector<StabilizerMatrix> &states, const StabilizerMatrix &reference);
CountReport angle_histogram(int n, const StabilizerMatrix &reference);

// Counts over all ordered pairs (i, j), i != j, keyed by k (0 parallel, -1 orthogonal).
std::map<int, long long> pairwise_classes_serial(const std::vector<StabilizerMatrix> &states);
std::map<int, long long> pairwise_classes_parallel(const std::vector<StabilizerMatrix> &states);

// Exact state vector, not necessarily normalized.
struct DenseState {
    size_t n = 0;
    std::vector<Cyclo> amps;

    static DenseState from_ints(size_t n, const std::vector<long> &values);
    static DenseState from_matrix(const StabilizerMatrix &m);  // unnormalized, first entry 1
    QuadReal norm2() const;
    size_t support() const;
};

DenseState kron(const DenseState &a, const DenseState &b);

// |<s|target>|^2 / <target|target> for the normalized stabilizer state s.
QuadReal overlap2(const DenseState &target, const StabilizerMatrix &s);

struct LocalSearchResult {
    std::vector<StabilizerMatrix> path;
    std::vector<QuadReal> overlaps;
    const StabilizerMatrix &final_state() const { return path.back(); }
};

LocalSearchResult local_search(const DenseState &target, const StabilizerMatrix &start);

// (|00> + |01> + |10>)^(x m), unnormalized, on 2m qubits.
DenseState evading_state(int m);
// (1+eps)|0..0> + sum of all other basis states.
DenseState local_search_target(int n, long eps);

struct OverlapResult {
    QuadReal overlap2;
    StabilizerMatrix best;
};

OverlapResult max_overlap_serial(const DenseState &target, const std::vector<StabilizerMatrix> &states);
OverlapResult max_overlap_parallel(const DenseState &target, const std::vector<StabilizerMatrix> &states);
OverlapResult max_overlap(const DenseState &target);

// Amplitude facts that every stabilizer state must satisfy.
struct AmplitudeReport {
    bool support_power_of_two = false;
    bool unbiased = false;             // all nonzero entries in {+-1, +-i}
    bool imaginary_zero_or_half = false;
    bool negative_zero_or_power = false;
    bool cofactors_balanced = false;   // single-qubit cofactor supports
    bool no_three_double_cofactors = false;
    bool all() const {
        return support_power_of_two && unbiased && imaginary_zero_or_half && negative_zero_or_power &&
               cofactors_balanced && no_three_double_cofactors;
    }
};

AmplitudeReport check_amplitudes(size_t n, const std::vector<Cyclo> &amps);
bool support_is_power_of_two(const DenseState &s);

}  // namespace stabgeo
