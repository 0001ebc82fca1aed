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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracle/dense.hpp"
#include "stabgeo/census.hpp"
#include "stabgeo/errors.hpp"
#include "stabgeo/geometry.hpp"
#include "support.hpp"

using namespace stabgeo;
using testing_support::load_fixtures;

namespace {

ExactScalar inv_sqrt2_pow(int k) { return {0, k}; }

oracle::Vec wedge(const oracle::Vec &a, const oracle::Vec &b) {
    return oracle::add(oracle::kron(a, b), oracle::scale(oracle::cnum(-1), oracle::kron(b, a)));
}

std::set<std::string> canon_set(const std::vector<StabilizerMatrix> &v) {
    std::set<std::string> s;
    for (const auto &m : v) s.insert(canonicalize(m).str());
    return s;
}

}  // namespace

TEST(Geometry, InnerProductExamples) {
    StabilizerMatrix zero = StabilizerMatrix::zero_state(2);
    EXPECT_EQ(inner_product_abs(zero, StabilizerMatrix({"XX", "ZZ"})), inv_sqrt2_pow(1));
    EXPECT_EQ(inner_product_abs(zero, zero), ExactScalar::one());
    EXPECT_EQ(inner_product_abs(zero, StabilizerMatrix({"IX", "XI"})), inv_sqrt2_pow(2));
    EXPECT_EQ(inner_product_abs(zero, StabilizerMatrix({"-ZI", "-IZ"})), ExactScalar::zero());
    EXPECT_EQ(inner_product_complex(StabilizerMatrix({"Z"}), StabilizerMatrix({"Y"})), inv_sqrt2_pow(1));
    EXPECT_THROW(inner_product_abs(zero, StabilizerMatrix::zero_state(3)), DimensionError);
}

TEST(Geometry, ComplexInnerProductMatchesDenseForAllTwoQubitPairs) {
    auto fx = load_fixtures("two_qubit_states.txt");
    std::vector<oracle::Vec> dense;
    for (const auto &f : fx) dense.push_back(oracle::state_of(f.matrix));
    for (size_t i = 0; i < fx.size(); i++)
        for (size_t j = 0; j < fx.size(); j++)
            ASSERT_EQ(Cyclo(inner_product_complex(fx[i].matrix, fx[j].matrix)), oracle::inner(dense[i], dense[j]))
                << fx[i].matrix.str() << " vs " << fx[j].matrix.str();
}

TEST(Geometry, ConjugateSymmetryAndDenseAgreement) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 120; trial++) {
        size_t n = 3 + trial % 3;
        StabilizerMatrix a = testing_support::random_state(n, rng), b = testing_support::random_state(n, rng);
        ExactScalar ab = inner_product_complex(a, b), ba = inner_product_complex(b, a);
        EXPECT_EQ(ab, ba.conj());
        EXPECT_EQ(Cyclo(ab), oracle::inner(oracle::state_of(a), oracle::state_of(b)));
    }
}

TEST(Geometry, MagnitudeLaw) {
    auto fx = load_fixtures("three_qubit_states.txt");
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 2000; trial++) {
        const auto &a = fx[rng() % fx.size()].matrix;
        const auto &b = fx[rng() % fx.size()].matrix;
        ExactScalar v = inner_product_abs(a, b);
        if (v.is_zero()) continue;
        EXPECT_EQ(v.omega_exp(), 0);
        EXPECT_GE(v.half_exp(), 0);
        EXPECT_LE(v.half_exp(), 3);
        EXPECT_EQ(Cyclo(v).norm2(), oracle::inner(oracle::state_of(a), oracle::state_of(b)).norm2());
    }
}

TEST(Geometry, NeighborClasses) {
    StabilizerMatrix zero = StabilizerMatrix::zero_state(2);
    EXPECT_EQ(k_neighbor_class(zero, StabilizerMatrix({"IX", "XI"})), (NeighborClass{NeighborClass::Neighbor, 2}));
    EXPECT_EQ(k_neighbor_class(zero, StabilizerMatrix({"ZI", "IX"})), (NeighborClass{NeighborClass::Neighbor, 1}));
    EXPECT_EQ(k_neighbor_class(zero, StabilizerMatrix({"-ZI", "-IZ"})).kind, NeighborClass::Orthogonal);
    EXPECT_EQ(k_neighbor_class(zero, zero).kind, NeighborClass::Parallel);
}

TEST(Geometry, TwoQubitAnglesAgreeWithTable) {
    StabilizerMatrix zero = StabilizerMatrix::zero_state(2);
    std::map<std::string, int> seen;
    for (const auto &fx : load_fixtures("two_qubit_states.txt")) {
        NeighborClass c = k_neighbor_class(zero, fx.matrix);
        std::string angle = c.kind == NeighborClass::Parallel     ? "0"
                            : c.kind == NeighborClass::Orthogonal ? "perp"
                            : c.k == 1                            ? "pi/4"
                                                                  : "pi/3";
        EXPECT_EQ(angle, fx.angle) << fx.matrix.str();
        seen[fx.angle]++;
    }
    EXPECT_EQ(seen["pi/4"], 12);
    EXPECT_EQ(seen["pi/3"], 32);
    EXPECT_EQ(seen["perp"], 15);
}

TEST(Geometry, SumOfBasisStates) {
    auto b = [](size_t n, uint64_t x) { return BitString::from_index(n, x); };
    EXPECT_EQ(canonicalize(sum_basis_states(b(2, 0), b(2, 3), 0)), StabilizerMatrix({"XX", "ZZ"}));
    EXPECT_EQ(canonicalize(sum_basis_states(b(1, 0), b(1, 1), 1)), StabilizerMatrix({"Y"}));
    EXPECT_EQ(canonicalize(sum_basis_states(b(1, 0), b(1, 1), 2)), StabilizerMatrix({"-X"}));
    EXPECT_THROW(sum_basis_states(b(2, 1), b(2, 1), 0), StabgeoError);
    for (uint64_t x = 0; x < 16; x++)
        for (uint64_t y = 0; y < 16; y++) {
            if (x == y) continue;
            for (int t = 0; t < 4; t++) {
                oracle::Vec expect = oracle::add(oracle::basis_vector(4, x),
                                                 oracle::scale(Cyclo::omega_pow(2 * t), oracle::basis_vector(4, y)));
                EXPECT_TRUE(oracle::proportional(oracle::state_of(sum_basis_states(b(4, x), b(4, y), t)), expect));
            }
        }
}

TEST(Geometry, NearestNeighborCounts) {
    for (size_t n = 1; n <= 4; n++) {
        std::mt19937_64 rng(43 + n);
        StabilizerMatrix m = testing_support::random_state(n, rng);
        auto nn = nearest_neighbors(m);
        EXPECT_EQ(nn.size(), 4 * ((size_t{1} << n) - 1));
        EXPECT_EQ(canon_set(nn).size(), nn.size());
        for (const auto &s : nn) EXPECT_EQ(inner_product_abs(m, s), inv_sqrt2_pow(1));
    }
}

TEST(Geometry, NearestNeighborsAreTheWholeFirstShell) {
    auto fx = load_fixtures("three_qubit_states.txt");
    for (size_t i : {0u, 17u, 500u, 1079u}) {
        std::vector<StabilizerMatrix> shell;
        for (const auto &f : fx)
            if (inner_product_abs(fx[i].matrix, f.matrix) == inv_sqrt2_pow(1)) shell.push_back(f.matrix);
        EXPECT_EQ(canon_set(nearest_neighbors(fx[i].matrix)), canon_set(shell));
    }
}

TEST(Geometry, TensorProducts) {
    EXPECT_EQ(tensor(StabilizerMatrix({"Z"}), StabilizerMatrix({"Z"})), StabilizerMatrix({"ZI", "IZ"}));
    EXPECT_EQ(tensor(StabilizerMatrix({"XX", "ZZ"}), StabilizerMatrix({"Z"})), StabilizerMatrix({"XXI", "ZZI", "IIZ"}));
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 50; trial++) {
        StabilizerMatrix a = testing_support::random_state(1 + trial % 2, rng);
        StabilizerMatrix b = testing_support::random_state(1 + (trial / 2) % 2, rng);
        EXPECT_EQ(oracle::state_of(tensor(a, b)), oracle::kron(oracle::state_of(a), oracle::state_of(b)));
    }
}

TEST(Geometry, BivectorOfBellPair) {
    // The wedge of |00>+|11> and |00>-|11> is proportional to |1100> - |0011>.
    StabilizerMatrix w = bivector(StabilizerMatrix({"XX", "ZZ"}), StabilizerMatrix({"-XX", "ZZ"}));
    oracle::Vec expect(16);
    expect[0b1100] = oracle::cnum(1);
    expect[0b0011] = oracle::cnum(-1);
    EXPECT_TRUE(oracle::proportional(oracle::state_of(w), expect));
    EXPECT_EQ(w, canonicalize(StabilizerMatrix({"-XXXX", "-ZIIZ", "-IZIZ", "IIZZ"})));
}

TEST(Geometry, BivectorErrors) {
    StabilizerMatrix bell({"XX", "ZZ"});
    EXPECT_THROW(bivector(bell, StabilizerMatrix({"-ZI", "IZ"})), NotStabilizerBivector);
    EXPECT_THROW(bivector(bell, bell), ParallelStatesError);
    EXPECT_THROW(bivector(StabilizerMatrix::zero_state(2), StabilizerMatrix({"XI", "IX"})), NotStabilizerBivector);
}

TEST(Geometry, BivectorCensusTwoQubits) {
    auto fx = load_fixtures("two_qubit_states.txt");
    for (const auto &a : fx) {
        oracle::Vec va = oracle::state_of(a.matrix);
        int partners = 0;
        for (const auto &b : fx) {
            StabilizerMatrix w;
            try {
                w = bivector(a.matrix, b.matrix);
            } catch (const NotStabilizerBivector &) {
                continue;
            }
            partners++;
            EXPECT_TRUE(oracle::proportional(oracle::state_of(w), wedge(va, oracle::state_of(b.matrix))));
        }
        EXPECT_EQ(partners, 15) << a.matrix.str();
    }
}

TEST(Geometry, WedgeNormMatchesDense) {
    auto fx = load_fixtures("two_qubit_states.txt");
    for (const auto &a : fx)
        for (const auto &b : fx) {
            oracle::Vec w = wedge(oracle::state_of(a.matrix), oracle::state_of(b.matrix));
            Cyclo ww = oracle::inner(w, w);
            auto real = ww.as_real();
            ASSERT_TRUE(real.has_value());
            EXPECT_EQ(*real, QuadReal(2 * wedge_norm(a.matrix, b.matrix).squared(), 0));
        }
    StabilizerMatrix zero = StabilizerMatrix::zero_state(2);
    EXPECT_EQ(wedge_norm(zero, StabilizerMatrix({"ZI", "IX"})).squared(), mpq_class(1, 2));
    EXPECT_EQ(wedge_norm(zero, zero).squared(), 0);
    EXPECT_EQ(wedge_norm(zero, StabilizerMatrix({"-ZI", "IZ"})).squared(), 1);
}

namespace {

oracle::Vec dense_sum(const StabilizerSum &s) {
    oracle::Vec v(size_t{1} << s.num_qubits());
    for (const auto &t : s.terms()) v = oracle::add(v, oracle::scale(t.coef, oracle::state_of(t.matrix)));
    return v;
}

void check_orthogonal_output(const StabilizerSum &in) {
    StabilizerSum out = orthogonalize(in);
    EXPECT_EQ(dense_sum(out), dense_sum(in));
    for (size_t i = 0; i < out.size(); i++)
        for (size_t j = i + 1; j < out.size(); j++) {
            EXPECT_TRUE(is_similar(out.terms()[i].matrix, out.terms()[j].matrix));
            EXPECT_TRUE(inner_product_complex(out.terms()[i].matrix, out.terms()[j].matrix).is_zero());
        }
}

}  // namespace

TEST(Geometry, OrthogonalizeExamples) {
    StabilizerSum one(2);
    one.insert(Cyclo(3L), StabilizerMatrix({"XX", "ZZ"}));
    StabilizerSum out = orthogonalize(one);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out.terms()[0].matrix, StabilizerMatrix({"XX", "ZZ"}));

    StabilizerSum diag(3);
    diag.insert(Cyclo(1L), StabilizerMatrix({"XII", "IXI", "IIX"}));
    diag.insert(Cyclo(1L), StabilizerMatrix({"XII", "IYI", "IIX"}));
    EXPECT_EQ(orthogonalize(diag).size(), 2u);
    check_orthogonal_output(diag);

    // c1 |+> + c2 |0> over {+Z, -Z}.
    Cyclo c1 = oracle::cnum(2, 1), c2 = oracle::cnum(-1, 3);
    StabilizerSum xz(1);
    xz.insert(c1, StabilizerMatrix({"X"}));
    xz.insert(c2, StabilizerMatrix({"Z"}));
    StabilizerSum r = orthogonalize(xz);
    ASSERT_EQ(r.size(), 2u);
    Cyclo s = oracle::inv_sqrt2();
    for (const auto &t : r.terms()) {
        if (t.matrix == StabilizerMatrix({"Z"}))
            EXPECT_EQ(t.coef, c1 * s + c2);
        else
            EXPECT_EQ(t.coef, c1 * s);
    }
    check_orthogonal_output(xz);
}

TEST(Geometry, OrthogonalizeRandomSums) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 100; trial++) {
        StabilizerSum s(3);
        int terms = 1 + trial % 4;
        for (int k = 0; k < terms; k++)
            s.insert(oracle::cnum(1 + static_cast<long>(rng() % 3), static_cast<long>(rng() % 3)) - oracle::cnum(1),
                     testing_support::random_state(3, rng));
        check_orthogonal_output(s);
    }
}

TEST(Geometry, GramianExamples) {
    EXPECT_TRUE(gramian_dependent({StabilizerMatrix({"ZI", "IZ"}), StabilizerMatrix({"-ZI", "IZ"}),
                                   StabilizerMatrix({"XI", "IZ"})}));
    std::vector<StabilizerMatrix> basis;
    for (uint64_t x = 0; x < 4; x++) basis.push_back(StabilizerMatrix::basis_state(BitString::from_index(2, x)));
    EXPECT_FALSE(gramian_dependent(basis));

    std::vector<StabilizerMatrix> five = {StabilizerMatrix({"ZII", "IZI", "IIX"}), StabilizerMatrix({"ZII", "-IZI", "IIX"}),
                                          StabilizerMatrix({"-ZII", "IZI", "IIX"}), StabilizerMatrix({"-ZII", "-IZI", "IIX"}),
                                          StabilizerMatrix({"XII", "IXI", "IIX"})};
    EXPECT_TRUE(gramian_dependent(five));
    for (size_t mask = 1; mask + 1 < (size_t{1} << five.size()); mask++) {
        std::vector<StabilizerMatrix> sub;
        for (size_t i = 0; i < five.size(); i++)
            if (mask >> i & 1) sub.push_back(five[i]);
        EXPECT_FALSE(gramian_dependent(sub)) << "mask " << mask;
    }
}

// With real coefficients a dependent triplet has two nearest-neighbor pairs
// and one orthogonal pair. Complex coefficients add triplets of mutual
// nearest neighbors (|00>, |0+>, |0,+i>) and triplets of mutual 2-neighbors
// (|++>, (|00> + i|01> + i|10> - |11>)/2, (|00> - i|11>)/sqrt2).
TEST(Geometry, DependentTripletShapes) {
    auto fx = load_fixtures("two_qubit_states.txt");
    size_t n = fx.size();
    std::vector<std::vector<Cyclo>> g(n, std::vector<Cyclo>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            g[i][j] = oracle::inner(oracle::state_of(fx[i].matrix), oracle::state_of(fx[j].matrix));
    std::map<std::pair<int, int>, size_t> shapes;
    size_t checked = 0;
    for (size_t a = 0; a < n; a++)
        for (size_t b = a + 1; b < n; b++)
            for (size_t c = b + 1; c < n; c++) {
                size_t idx[3] = {a, b, c};
                auto G = [&](int i, int j) { return g[idx[i]][idx[j]]; };
                Cyclo det = G(0, 0) * (G(1, 1) * G(2, 2) - G(1, 2) * G(2, 1)) -
                            G(0, 1) * (G(1, 0) * G(2, 2) - G(1, 2) * G(2, 0)) +
                            G(0, 2) * (G(1, 0) * G(2, 1) - G(1, 1) * G(2, 0));
                if (!det.is_zero()) continue;
                int nn = 0, perp = 0;
                for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
                    ExactScalar v = inner_product_abs(fx[x].matrix, fx[y].matrix);
                    nn += v == ExactScalar(0, 1);
                    perp += v.is_zero();
                }
                shapes[{nn, perp}]++;
                if (checked++ % 40 == 0) EXPECT_TRUE(gramian_dependent({fx[a].matrix, fx[b].matrix, fx[c].matrix}));
            }
    EXPECT_EQ(shapes.size(), 3u);
    EXPECT_EQ((shapes[{2, 1}]), 360u);
    EXPECT_EQ((shapes[{3, 0}]), 240u);
    EXPECT_EQ((shapes[{0, 0}]), 320u);
}

// Every nearest-neighbor pair extends to a dependent triplet with an orthogonal pair.
TEST(Geometry, NeighborPairsExtendToTriplets) {
    auto fx = load_fixtures("two_qubit_states.txt");
    for (size_t a = 0; a < fx.size(); a += 5)
        for (size_t b = 0; b < fx.size(); b++) {
            if (inner_product_abs(fx[a].matrix, fx[b].matrix) != ExactScalar(0, 1)) continue;
            bool found = false;
            for (size_t c = 0; c < fx.size() && !found; c++)
                found = inner_product_abs(fx[a].matrix, fx[c].matrix).is_zero() &&
                        gramian_dependent({fx[a].matrix, fx[b].matrix, fx[c].matrix});
            EXPECT_TRUE(found);
        }
}

TEST(Geometry, BasisFromNeighbors) {
    for (size_t n = 1; n <= 3; n++) {
        std::vector<StabilizerMatrix> set = {StabilizerMatrix::zero_state(n)};
        for (uint64_t x = 1; x < (uint64_t{1} << n); x++)
            set.push_back(sum_basis_states(BitString(n), BitString::from_index(n, x), 0));
        for (size_t i = 1; i < set.size(); i++)
            for (size_t j = 1; j < set.size(); j++)
                if (i != j) EXPECT_EQ(inner_product_complex(set[i], set[j]), ExactScalar(0, 2));
        EXPECT_FALSE(gramian_dependent(set));
    }
}
