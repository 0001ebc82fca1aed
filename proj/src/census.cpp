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

#include "stabgeo/census.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "stabgeo/errors.hpp"

namespace stabgeo {

namespace {

mpz_class pow2z(unsigned e) {
    mpz_class v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e);
    return v;
}

bool is_pow2(size_t v) { return v && !(v & (v - 1)); }

}  // namespace

mpz_class count_states(int n) {
    if (n < 0) throw DimensionError("negative qubit count");
    mpz_class r = pow2z(n);
    for (int k = 0; k < n; k++) r *= pow2z(n - k) + 1;
    return r;
}

mpz_class count_states_recurrence(int n) {
    mpz_class r = 1;
    for (int m = 1; m <= n; m++) r *= 2 * (pow2z(m) + 1);
    return r;
}

mpz_class count_k_neighbors(int n, int k) {
    if (k == 0) return 1;
    if (k < 0 || k > n) return 0;
    mpq_class r = 1;
    int e = k * (k + 1 - n);
    r *= e >= 0 ? mpq_class(pow2z(e)) : mpq_class(mpz_class(1), pow2z(-e));
    mpz_class four_n = pow2z(2 * n), two_n = pow2z(n);
    for (int j = 0; j < k; j++) {
        mpq_class num = mpq_class(four_n, pow2z(j)) - mpq_class(two_n);
        mpq_class den = mpq_class(pow2z(k) - pow2z(j));
        r *= num / den;
    }
    r.canonicalize();
    if (r.get_den() != 1) throw StabgeoError("k-neighbor count is not an integer");
    return r.get_num();
}

mpz_class count_orthogonal(int n) {
    mpz_class num = count_states(n) * (pow2z(n) - 1);
    mpz_class den = 3 * pow2z(n);
    if (num % den != 0) throw StabgeoError("orthogonal count is not an integer");
    return num / den;
}

LimitBounds limit_bounds(int k) {
    double m5 = 1.0;
    for (int j = 1; j <= 5; j++) m5 *= 1.0 / (1.0 - std::ldexp(1.0, -j));
    for (int j = 1; j <= 5; j++) m5 *= 1.0 - 2.0 / (std::ldexp(1.0, j + k) + 1.0);
    double lower = m5 / std::ldexp(1.0, k * (k + 5) / 2) * std::exp(1.0 / 32 - 2.0 / (std::ldexp(1.0, k + 5) - 1));
    double upper = m5 / std::ldexp(1.0, k * (k + 3) / 2) * std::exp(1.0 / 15 - 2.0 / (std::ldexp(1.0, k + 5) + 1));
    return {lower, upper};
}

namespace {

// Calls fn(rows) for every reduced row echelon basis of a k-dim subspace of
// GF(2)^n, given as the pivot list and the row vectors.
template <typename Fn>
void for_each_rref(int n, int k, Fn &&fn) {
    std::vector<int> piv(k);
    // choose pivots
    std::function<void(int, int)> choose = [&](int i, int start) {
        if (i == k) {
            // free positions: for row i, columns c > piv[i] not among pivots
            std::vector<std::pair<int, int>> slots;
            for (int r = 0; r < k; r++)
                for (int c = piv[r] + 1; c < n; c++)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.push_back({r, c});
            for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); mask++) {
                std::vector<BitString> rows(k, BitString(n));
                for (int r = 0; r < k; r++) rows[r].set(piv[r], true);
                for (size_t s = 0; s < slots.size(); s++)
                    if ((mask >> s) & 1) rows[slots[s].first].set(slots[s].second, true);
                fn(piv, rows);
            }
            return;
        }
        for (int c = start; c <= n - (k - i); c++) {
            piv[i] = c;
            choose(i + 1, c + 1);
        }
    };
    choose(0, 0);
}

}  // namespace

std::vector<StabilizerMatrix> enumerate_shapes(int n) {
    if (n < 1 || n > 6) throw SizeError("enumeration supports 1 <= n <= 6");
    std::vector<StabilizerMatrix> out;
    for (int k = 0; k <= n; k++) {
        for_each_rref(n, k, [&](const std::vector<int> &piv, const std::vector<BitString> &xs) {
            // Z-only rows span the annihilator of the X parts: one vector per
            // free column f, with bit piv[r] = xs[r][f].
            std::vector<PauliOp> zrows;
            for (int f = 0; f < n; f++) {
                if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
                PauliOp z(n);
                z.zs().set(f, true);
                for (int r = 0; r < k; r++)
                    if (xs[r].get(f)) z.zs().set(piv[r], true);
                zrows.push_back(std::move(z));
            }
            // Z parts of the X rows live on the pivot columns; commutation
            // forces z_i[piv[j]] = z_j[piv[i]], a symmetric k x k matrix.
            int free_bits = k * (k + 1) / 2;
            for (uint64_t mask = 0; mask < (uint64_t{1} << free_bits); mask++) {
                std::vector<PauliOp> rows;
                for (int r = 0; r < k; r++) {
                    PauliOp p(n);
                    p.xs() = xs[r];
                    rows.push_back(std::move(p));
                }
                int bit = 0;
                for (int i = 0; i < k; i++) {
                    for (int j = i; j < k; j++, bit++) {
                        if (!((mask >> bit) & 1)) continue;
                        rows[i].zs().set(piv[j], true);
                        rows[j].zs().set(piv[i], true);
                    }
                }
                for (const auto &z : zrows) rows.push_back(z);
                out.push_back(canonicalize(StabilizerMatrix(n, std::move(rows))));
            }
        });
    }
    return out;
}

std::vector<StabilizerMatrix> enumerate_states(int n) {
    std::vector<StabilizerMatrix> shapes = enumerate_shapes(n);
    std::vector<StabilizerMatrix> out;
    out.reserve(shapes.size() << n);
    std::unordered_set<std::string> seen;
    for (const auto &shape : shapes) {
        for (uint64_t signs = 0; signs < (uint64_t{1} << n); signs++) {
            StabilizerMatrix m = shape;
            for (int r = 0; r < n; r++)
                if ((signs >> r) & 1) m.row(r).add_phase(2);
            if (seen.insert(m.str()).second) out.push_back(std::move(m));
        }
    }
    return out;
}

std::string CountReport::csv() const {
    std::string s = "n,k,count,fraction\n";
    mpz_class others = total - parallel;
    auto line = [&](const std::string &k, const mpz_class &c) {
        double f = others == 0 ? 0.0 : mpq_class(c, others).get_d();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", f);
        s += std::to_string(n) + "," + k + "," + c.get_str() + "," + buf + "\n";
    };
    for (const auto &[k, c] : per_k) line(std::to_string(k), c);
    line("perp", orthogonal);
    return s;
}

namespace {

void tally(CountReport &r, const NeighborClass &c, long times = 1) {
    switch (c.kind) {
        case NeighborClass::Parallel:
            r.parallel += times;
            break;
        case NeighborClass::Orthogonal:
            r.orthogonal += times;
            break;
        case NeighborClass::Neighbor:
            r.per_k[c.k] += times;
            break;
    }
    r.total += times;
}

}  // namespace

CountReport angle_histogram_serial(const std::vector<StabilizerMatrix> &states, const StabilizerMatrix &reference) {
    CountReport r;
    r.n = static_cast<int>(reference.num_qubits());
    BasisFrame frame(reference);
    for (const auto &s : states) tally(r, classify_magnitude(frame.abs_inner(s)));
    return r;
}

CountReport angle_histogram_parallel(const std::vector<StabilizerMatrix> &states, const StabilizerMatrix &reference) {
    int n = static_cast<int>(reference.num_qubits());
    BasisFrame frame(reference);
    // slot 0 orthogonal, slot 1 + k for k >= 0
    std::vector<long> counts(n + 2, 0);
    long long len = static_cast<long long>(states.size());
#pragma omp parallel
    {
        std::vector<long> local(n + 2, 0);
#pragma omp for schedule(static)
        for (long long i = 0; i < len; i++) {
            NeighborClass c = classify_magnitude(frame.abs_inner(states[i]));
            local[c.kind == NeighborClass::Orthogonal ? 0 : 1 + c.k]++;
        }
#pragma omp critical
        for (int s = 0; s < n + 2; s++) counts[s] += local[s];
    }
    CountReport r;
    r.n = n;
    tally(r, {NeighborClass::Orthogonal, -1}, counts[0]);
    tally(r, {NeighborClass::Parallel, 0}, counts[1]);
    for (int k = 1; k <= n; k++)
        if (counts[1 + k]) tally(r, {NeighborClass::Neighbor, k}, counts[1 + k]);
    return r;
}

CountReport angle_histogram(int n, const StabilizerMatrix &reference) {
    if (static_cast<int>(reference.num_qubits()) != n) throw DimensionError("reference has the wrong qubit count");
    return angle_histogram_parallel(enumerate_states(n), reference);
}

std::map<int, long long> pairwise_classes_serial(const std::vector<StabilizerMatrix> &states) {
    std::map<int, long long> out;
    for (size_t i = 0; i < states.size(); i++) {
        BasisFrame frame(states[i]);
        for (size_t j = 0; j < states.size(); j++)
            if (i != j) out[classify_magnitude(frame.abs_inner(states[j])).k]++;
    }
    return out;
}

std::map<int, long long> pairwise_classes_parallel(const std::vector<StabilizerMatrix> &states) {
    std::map<int, long long> out;
    long long len = static_cast<long long>(states.size());
#pragma omp parallel
    {
        std::map<int, long long> local;
#pragma omp for schedule(dynamic, 8)
        for (long long i = 0; i < len; i++) {
            BasisFrame frame(states[i]);
            for (long long j = 0; j < len; j++)
                if (i != j) local[classify_magnitude(frame.abs_inner(states[j])).k]++;
        }
#pragma omp critical
        for (const auto &[k, c] : local) out[k] += c;
    }
    return out;
}

DenseState DenseState::from_ints(size_t n, const std::vector<long> &values) {
    if (values.size() != (size_t{1} << n)) throw DimensionError("amplitude count must be 2^n");
    DenseState s;
    s.n = n;
    for (long v : values) s.amps.emplace_back(v);
    return s;
}

DenseState DenseState::from_matrix(const StabilizerMatrix &m) {
    DenseState s;
    s.n = m.num_qubits();
    for (const auto &a : to_dense(m, 12)) s.amps.emplace_back(a);
    return s;
}

QuadReal DenseState::norm2() const {
    QuadReal r;
    for (const auto &a : amps)
        if (!a.is_zero()) r = r + a.norm2();
    return r;
}

size_t DenseState::support() const {
    size_t c = 0;
    for (const auto &a : amps) c += !a.is_zero();
    return c;
}

DenseState kron(const DenseState &a, const DenseState &b) {
    DenseState s;
    s.n = a.n + b.n;
    s.amps.reserve(a.amps.size() * b.amps.size());
    for (const auto &x : a.amps)
        for (const auto &y : b.amps) s.amps.push_back(x * y);
    return s;
}

QuadReal overlap2(const DenseState &target, const StabilizerMatrix &s) {
    if (target.n != s.num_qubits()) throw DimensionError("target and state differ in qubit count");
    AmplitudeReader reader(s);
    Cyclo ip;
    for (uint64_t x = 0; x < target.amps.size(); x++) {
        if (target.amps[x].is_zero()) continue;
        ExactScalar a = reader.amplitude_at(BitString::from_index(target.n, x));
        if (a.is_zero()) continue;
        // conj(i^m) t = i^-m t
        ip += target.amps[x].times_i_pow(-(a.omega_exp() / 2));
    }
    QuadReal denom = target.norm2() * QuadReal(pow2z(static_cast<unsigned>(reader.support_log2())), 0);
    return ip.norm2() / denom;
}

LocalSearchResult local_search(const DenseState &target, const StabilizerMatrix &start) {
    LocalSearchResult r;
    r.path.push_back(canonicalize(start));
    r.overlaps.push_back(overlap2(target, r.path.back()));
    for (;;) {
        const QuadReal &cur = r.overlaps.back();
        std::optional<StabilizerMatrix> best;
        QuadReal best_ov = cur;
        for (auto &nb : nearest_neighbors(r.path.back())) {
            QuadReal ov = overlap2(target, nb);
            if (ov > best_ov) {
                best_ov = ov;
                best = std::move(nb);
            }
        }
        if (!best) break;
        r.path.push_back(std::move(*best));
        r.overlaps.push_back(best_ov);
    }
    return r;
}

DenseState evading_state(int m) {
    DenseState mu = DenseState::from_ints(2, {1, 1, 1, 0});
    DenseState s = mu;
    for (int i = 1; i < m; i++) s = kron(s, mu);
    return s;
}

DenseState local_search_target(int n, long eps) {
    std::vector<long> v(size_t{1} << n, 1);
    v[0] = 1 + eps;
    return DenseState::from_ints(n, v);
}

OverlapResult max_overlap_serial(const DenseState &target, const std::vector<StabilizerMatrix> &states) {
    OverlapResult best{QuadReal(-1), StabilizerMatrix()};
    for (const auto &s : states) {
        QuadReal ov = overlap2(target, s);
        if (ov > best.overlap2) best = {ov, s};
    }
    return best;
}

OverlapResult max_overlap_parallel(const DenseState &target, const std::vector<StabilizerMatrix> &states) {
    long long len = static_cast<long long>(states.size());
    QuadReal best_ov(-1);
    long long best_idx = -1;
#pragma omp parallel
    {
        QuadReal local_ov(-1);
        long long local_idx = -1;
#pragma omp for schedule(static)
        for (long long i = 0; i < len; i++) {
            QuadReal ov = overlap2(target, states[i]);
            if (ov > local_ov) {
                local_ov = ov;
                local_idx = i;
            }
        }
#pragma omp critical
        if (local_idx >= 0 && (local_ov > best_ov || (local_ov == best_ov && local_idx < best_idx))) {
            best_ov = local_ov;
            best_idx = local_idx;
        }
    }
    if (best_idx < 0) throw DimensionError("no states to search");
    return {best_ov, states[best_idx]};
}

OverlapResult max_overlap(const DenseState &target) {
    return max_overlap_parallel(target, enumerate_states(static_cast<int>(target.n)));
}

AmplitudeReport check_amplitudes(size_t n, const std::vector<Cyclo> &amps) {
    AmplitudeReport r;
    size_t dim = size_t{1} << n;
    if (amps.size() != dim) throw DimensionError("amplitude count must be 2^n");
    size_t first = 0;
    while (first < dim && amps[first].is_zero()) first++;
    if (first == dim) return r;
    Cyclo inv = amps[first].inverse();
    size_t support = 0, imag = 0, neg = 0;
    bool unbiased = true;
    std::vector<bool> nz(dim, false);
    for (size_t x = 0; x < dim; x++) {
        if (amps[x].is_zero()) continue;
        nz[x] = true;
        support++;
        Cyclo a = amps[x] * inv;
        int which = -1;
        for (int t = 0; t < 4; t++)
            if (a == Cyclo(1).times_i_pow(t)) which = t;
        if (which < 0) {
            unbiased = false;
            continue;
        }
        imag += which & 1;
        neg += which >= 2;
    }
    r.support_power_of_two = is_pow2(support);
    r.unbiased = unbiased;
    r.imaginary_zero_or_half = imag == 0 || 2 * imag == support;
    // possibly after a global -1
    r.negative_zero_or_power = neg == 0 || is_pow2(neg) || neg == support || is_pow2(support - neg);
    r.cofactors_balanced = true;
    r.no_three_double_cofactors = true;
    for (size_t q = 0; q < n; q++) {
        size_t bit = size_t{1} << (n - 1 - q);
        size_t c[2] = {0, 0};
        for (size_t x = 0; x < dim; x++)
            if (nz[x]) c[(x & bit) ? 1 : 0]++;
        for (size_t v : c)
            if (v && !is_pow2(v)) r.cofactors_balanced = false;
        if (c[0] && c[1] && c[0] != c[1]) r.cofactors_balanced = false;
        for (size_t p = q + 1; p < n; p++) {
            size_t bit2 = size_t{1} << (n - 1 - p);
            size_t d[4] = {0, 0, 0, 0};
            for (size_t x = 0; x < dim; x++)
                if (nz[x]) d[((x & bit) ? 2 : 0) + ((x & bit2) ? 1 : 0)]++;
            int nonzero = 0;
            size_t size = 0;
            for (size_t v : d) {
                if (!v) continue;
                nonzero++;
                if (size && v != size) r.no_three_double_cofactors = false;
                size = v;
            }
            if (nonzero == 3) r.no_three_double_cofactors = false;
        }
    }
    return r;
}

bool support_is_power_of_two(const DenseState &s) { return is_pow2(s.support()); }

}  // namespace stabgeo
