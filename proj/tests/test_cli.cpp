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
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "stabgeo/bench.hpp"
#include "stabgeo/io.hpp"

using namespace stabgeo;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
};

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("stabgeo_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string &name, const std::string &text) {
        fs::path p = dir_ / name;
        write_file(p.string(), text);
        return p.string();
    }

    CliResult run(const std::string &args) {
        fs::path out = dir_ / "stdout.txt";
        std::string cmd = std::string(STABGEO_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
        int status = std::system(cmd.c_str());
        return {WEXITSTATUS(status), read_file(out.string())};
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ExitCodes) {
    std::string bell = file("bell", "XX\nZZ\n");
    std::string bad = file("bad", "XX\nXZQ\n");
    std::string zero = file("zero", "ZI\nIZ\n");
    std::string one = file("one", "-ZI\nIZ\n");
    EXPECT_EQ(run("canon " + bell).code, 0);
    EXPECT_EQ(run("canon " + bad).code, 2);
    EXPECT_EQ(run("wedge " + bell + " " + one).code, 3);
    EXPECT_EQ(run("nosuchcommand").code, 1);
    EXPECT_EQ(run("inner " + bell).code, 1);
    EXPECT_EQ(run("inner " + zero + " " + bell).out, "w^0 * 2^-1/2\n");
}

TEST_F(CliTest, SynthWritesACircuitFile) {
    std::string bell = file("bell", "XX\nZZ\n");
    std::string circ = (dir_ / "c.txt").string();
    CliResult r = run("synth " + bell + " --out " + circ);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "# basis 00\n");
    EXPECT_EQ(parse_circuit(read_file(circ)), CliffordCircuit(2, {Gate::cnot(0, 1), Gate::h(0)}));
}

TEST_F(CliTest, EnumVerifyAndHistogram) {
    CliResult r = run("enum --n 2 --verify --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2,60"), std::string::npos);
    CliResult h = run("hist --n 2");
    EXPECT_EQ(h.out, "n,k,count,fraction\n2,1,12,0.203390\n2,2,32,0.542373\n2,perp,15,0.254237\n");
}

TEST_F(CliTest, DeterministicGivenSeed) {
    std::string plus = file("plus", "XX\nZZ\n");
    EXPECT_EQ(run("measure " + plus + " --seed 5").out, run("measure " + plus + " --seed 5").out);
    CliResult a = run("bench --n 8 12 --beta 0.5 1 --reps 2 --seed 3");
    EXPECT_EQ(a.code, 0);
    size_t lines = 0;
    for (char c : a.out) lines += c == '\n';
    EXPECT_EQ(lines, 1u + 2 * 2);
}

TEST(RandomCircuit, SizeFormula) {
    EXPECT_EQ(random_circuit(2, 1.0, 1).size(), 2u);
    EXPECT_EQ(random_circuit(20, 0.6, 1).size(), 52u);
    EXPECT_EQ(random_circuit_size(4, 1.0), 8u);
    for (size_t n = 2; n <= 300; n += 7)
        for (double beta : {0.3, 0.6, 1.2, 1.8})
            EXPECT_EQ(random_circuit_size(n, beta),
                      static_cast<size_t>(std::ceil(beta * n * std::log2(static_cast<double>(n)) - 1e-9)));
}

TEST(RandomCircuit, DeterministicAndWellFormed) {
    EXPECT_EQ(random_circuit(30, 1.2, 99), random_circuit(30, 1.2, 99));
    EXPECT_NE(random_circuit(30, 1.2, 99), random_circuit(30, 1.2, 100));
    size_t kinds[3] = {0, 0, 0};
    for (const auto &g : random_circuit(50, 4.0, 7).gates) {
        ASSERT_TRUE(g.kind == GateKind::H || g.kind == GateKind::P || g.kind == GateKind::CNOT);
        kinds[g.kind == GateKind::H ? 0 : g.kind == GateKind::P ? 1 : 2]++;
        if (g.kind == GateKind::CNOT) EXPECT_NE(g.control, g.target);
        EXPECT_LT(g.target, 50u);
    }
    for (size_t k : kinds) EXPECT_GT(k, 250u);
}

TEST(Bench, RowsAndExponentFit) {
    auto rows = bench_inner({4, 8, 16}, {0.5, 1.0}, 2, 5);
    EXPECT_EQ(rows.size(), 6u);
    EXPECT_NEAR(fit_exponent({1, 2, 4, 8}, {3, 12, 48, 192}), 2.0, 1e-12);
    EXPECT_EQ(ghz_state(3), StabilizerMatrix({"XXX", "ZZI", "IZZ"}));
}
