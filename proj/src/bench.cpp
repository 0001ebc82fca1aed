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

#include "stabgeo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "stabgeo/errors.hpp"
#include "stabgeo/geometry.hpp"
#include "stabgeo/synth.hpp"

namespace stabgeo {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

size_t random_circuit_size(size_t n, double beta) {
    if (n == 0 || !(beta > 0)) throw StabgeoError("random circuits need n >= 1 and beta > 0");
    double x = beta * static_cast<double>(n) * std::log2(static_cast<double>(n));
    // Absorb rounding noise so exact products such as 1 * 2 * 1 are not pushed up.
    return static_cast<size_t>(std::ceil(x - 1e-9));
}

CliffordCircuit random_circuit(size_t n, double beta, uint64_t seed) {
    size_t count = random_circuit_size(n, beta);
    uint64_t s = seed;
    std::mt19937_64 rng(splitmix64(s));
    std::uniform_int_distribution<int> kind(0, n > 1 ? 2 : 1);
    std::uniform_int_distribution<size_t> q(0, n - 1);
    CliffordCircuit c(n);
    for (size_t i = 0; i < count; i++) {
        int k = kind(rng);
        size_t a = q(rng);
        if (k == 0) {
            c.append(Gate::h(a));
        } else if (k == 1) {
            c.append(Gate::p(a));
        } else {
            std::uniform_int_distribution<size_t> other(0, n - 2);
            size_t b = other(rng);
            if (b >= a) b++;
            c.append(Gate::cnot(a, b));
        }
    }
    return c;
}

StabilizerMatrix ghz_state(size_t n) {
    StabilizerMatrix m(n);
    PauliOp x(n);
    for (size_t q = 0; q < n; q++) x.set_letter(q, Letter::X);
    m.add_row(x);
    for (size_t q = 0; q + 1 < n; q++) {
        PauliOp z(n);
        z.set_letter(q, Letter::Z);
        z.set_letter(q + 1, Letter::Z);
        m.add_row(z);
    }
    return m;
}

namespace {

double mean(const std::vector<double> &v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0 : s / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

}  // namespace

std::vector<BenchRow> bench_inner(const std::vector<size_t> &ns, const std::vector<double> &betas, size_t reps,
                                  uint64_t seed, BenchReference ref) {
    std::vector<BenchRow> rows;
    uint64_t s = seed;
    for (size_t n : ns) {
        for (double beta : betas) {
            std::vector<double> secs, gates;
            for (size_t r = 0; r < reps; r++) {
                StabilizerMatrix zero = StabilizerMatrix::zero_state(n);
                StabilizerMatrix phi = conjugate_circuit(zero, random_circuit(n, beta, splitmix64(s)));
                StabilizerMatrix psi = ref == BenchReference::Zero  ? zero
                                       : ref == BenchReference::Ghz ? ghz_state(n)
                                                                    : conjugate_circuit(zero, random_circuit(n, beta, splitmix64(s)));
                auto t0 = std::chrono::steady_clock::now();
                ExactScalar v = inner_product_abs(psi, phi);
                auto t1 = std::chrono::steady_clock::now();
                (void)v;
                secs.push_back(std::chrono::duration<double>(t1 - t0).count());
                gates.push_back(static_cast<double>(basis_norm_circuit(phi).circuit.size()));
            }
            rows.push_back({n, beta, mean(secs), median(secs), mean(gates), median(gates)});
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::string out = "n,beta,mean_seconds,median_seconds,mean_gates,median_gates\n";
    char buf[160];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%g,%.6e,%.6e,%.2f,%.2f\n", r.n, r.beta, r.mean_seconds, r.median_seconds,
                      r.mean_gates, r.median_gates);
        out += buf;
    }
    return out;
}

double fit_exponent(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) throw StabgeoError("exponent fit needs at least two points");
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); i++) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double num = 0, den = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double dx = std::log(x[i]) - mx;
        num += dx * (std::log(y[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

}  // namespace stabgeo
