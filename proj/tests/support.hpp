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

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/dense.hpp"
#include "stabgeo/clifford.hpp"
#include "stabgeo/tableau.hpp"

namespace testing_support {

struct Fixture {
    oracle::Vec amplitudes;  // unnormalized, entries 0, +-1, +-i
    stabgeo::StabilizerMatrix matrix;
    std::string angle;
};

inline stabgeo::Cyclo parse_amp(const std::string &t) {
    if (t == "0") return oracle::cnum(0);
    if (t == "1") return oracle::cnum(1);
    if (t == "-1") return oracle::cnum(-1);
    if (t == "i") return oracle::cnum(0, 1);
    if (t == "-i") return oracle::cnum(0, -1);
    throw std::invalid_argument("bad amplitude " + t);
}

inline std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Lines look like "<amplitudes> | <generators>[ | <angle>]".
inline std::vector<Fixture> load_fixtures(const std::string &name) {
    std::ifstream f(std::string(STABGEO_TEST_DATA) + "/" + name);
    if (!f) throw std::runtime_error("missing fixture " + name);
    std::vector<Fixture> out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> parts;
        size_t pos = 0;
        while (true) {
            size_t bar = line.find('|', pos);
            parts.push_back(line.substr(pos, bar - pos));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }
        Fixture fx;
        for (const auto &t : split_ws(parts.at(0))) fx.amplitudes.push_back(parse_amp(t));
        std::vector<stabgeo::PauliOp> rows;
        for (const auto &g : split_ws(parts.at(1))) rows.push_back(stabgeo::PauliOp::from_string(g));
        fx.matrix = stabgeo::StabilizerMatrix(rows.at(0).num_qubits(), rows);
        if (parts.size() > 2) fx.angle = split_ws(parts[2]).at(0);
        out.push_back(std::move(fx));
    }
    return out;
}

// Full set draws from all eight gate kinds, otherwise from {H, P, CNOT}.
inline stabgeo::Gate random_gate(size_t n, std::mt19937_64 &rng, bool full_set = true) {
    using stabgeo::Gate;
    static const int small[] = {0, 1, 5};
    std::uniform_int_distribution<int> pick(0, full_set ? 7 : 2);
    std::uniform_int_distribution<size_t> q(0, n - 1);
    int k = full_set ? pick(rng) : small[pick(rng)];
    if (n == 1 && k >= 5) k = 0;
    size_t a = q(rng), b = q(rng);
    while (k >= 5 && b == a) b = q(rng);
    switch (k) {
        case 0: return Gate::h(a);
        case 1: return Gate::p(a);
        case 2: return Gate::x(a);
        case 3: return Gate::y(a);
        case 4: return Gate::z(a);
        case 5: return Gate::cnot(a, b);
        case 6: return Gate::cz(a, b);
        default: return Gate::cy(a, b);
    }
}

inline stabgeo::CliffordCircuit random_circuit(size_t n, size_t gates, std::mt19937_64 &rng, bool full_set = true) {
    stabgeo::CliffordCircuit c(n);
    for (size_t i = 0; i < gates; i++) c.append(random_gate(n, rng, full_set));
    return c;
}

inline stabgeo::StabilizerMatrix random_state(size_t n, std::mt19937_64 &rng) {
    return stabgeo::conjugate_circuit(stabgeo::StabilizerMatrix::zero_state(n), random_circuit(n, 6 * n + 4, rng));
}

}  // namespace testing_support
