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

// Command-line front end. Exit codes: 0 ok, 1 usage, 2 parse error, 3 domain error.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "stabgeo/bench.hpp"
#include "stabgeo/census.hpp"
#include "stabgeo/errors.hpp"
#include "stabgeo/fixtures.hpp"
#include "stabgeo/geometry.hpp"
#include "stabgeo/io.hpp"
#include "stabgeo/synth.hpp"

using namespace stabgeo;

namespace {

struct Options {
    std::string file_a, file_b, out;
    std::string format = "text";
    std::string reference = "random";
    uint64_t seed = 1;
    int n = 2;
    int m = 1;
    long eps = 1;
    size_t qubit = 1;
    size_t reps = 5;
    bool complex = false;
    bool verify = false;
    std::vector<int> ns;
    std::vector<double> betas = {1.2};
};

// Writes to --out when given, stdout otherwise.
void emit(const Options &o, const std::string &text) {
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
}

StabilizerMatrix load_matrix(const std::string &path) { return parse_matrix(read_file(path)); }

StabilizerMatrix load_pure(const std::string &path) {
    StabilizerMatrix m = load_matrix(path);
    if (!m.is_pure()) throw DimensionError(path + " does not describe a pure state");
    return m;
}

std::string one_line(const StabilizerMatrix &m) {
    std::string s;
    for (size_t i = 0; i < m.num_rows(); i++) s += (i ? " " : "") + m.row(i).str();
    return s;
}

int cmd_canon(const Options &o) {
    emit(o, emit_matrix(canonicalize(load_matrix(o.file_a))));
    return 0;
}

int cmd_synth(const Options &o) {
    BasisNormalization r = basis_norm_circuit(load_pure(o.file_a));
    emit(o, emit_circuit(r.circuit));
    std::cout << "# basis " << r.basis.str() << "\n";
    return 0;
}

int cmd_inner(const Options &o) {
    StabilizerMatrix a = load_pure(o.file_a), b = load_pure(o.file_b);
    ExactScalar v = o.complex ? inner_product_complex(a, b) : inner_product_abs(a, b);
    emit(o, v.str() + "\n");
    return 0;
}

int cmd_wedge(const Options &o) {
    StabilizerMatrix a = load_pure(o.file_a), b = load_pure(o.file_b);
    WedgeNorm w = wedge_norm(a, b);
    StabilizerMatrix biv = bivector(a, b);
    emit(o, "# norm " + w.str() + "\n" + emit_matrix(biv));
    return 0;
}

int cmd_ortho(const Options &o) {
    emit(o, emit_sum(orthogonalize(parse_sum(read_file(o.file_a)))));
    return 0;
}

int cmd_neighbors(const Options &o) {
    StabilizerMatrix m = load_pure(o.file_a);
    std::string text;
    for (const auto &s : nearest_neighbors(m))
        text += "# inner " + inner_product_complex(m, s).str() + "\n" + emit_matrix(s) + "\n";
    emit(o, text);
    return 0;
}

int verify_golden() {
    std::set<std::string> enumerated;
    for (const auto &s : enumerate_states(2)) enumerated.insert(s.str());
    StabilizerMatrix zero = StabilizerMatrix::zero_state(2);
    int bad = 0;
    for (const auto &g : two_qubit_golden()) {
        std::istringstream in(g.generators);
        std::string row, text;
        while (in >> row) text += row + "\n";
        StabilizerMatrix m = canonicalize(parse_matrix(text));
        NeighborClass c = k_neighbor_class(zero, m);
        std::string angle = c.kind == NeighborClass::Parallel     ? "0"
                            : c.kind == NeighborClass::Orthogonal ? "perp"
                            : c.k == 1                            ? "pi/4"
                                                                  : "pi/3";
        bool ok = enumerated.erase(m.str()) == 1 && angle == g.angle;
        if (!ok) {
            std::cerr << "golden mismatch: " << g.generators << "\n";
            bad++;
        }
    }
    bad += static_cast<int>(enumerated.size());
    std::cout << "# verify " << (bad ? "FAILED" : "ok") << " (" << two_qubit_golden().size() << " golden states)\n";
    return bad ? 3 : 0;
}

int cmd_enum(const Options &o) {
    if (o.verify && o.n != 2) throw DimensionError("--verify compares against the two-qubit golden table, use --n 2");
    auto states = enumerate_states(o.n);
    std::string text;
    if (o.format == "csv") {
        text = "n,count\n" + std::to_string(o.n) + "," + std::to_string(states.size()) + "\n";
    } else {
        for (const auto &s : states) text += one_line(s) + "\n";
        text += "# count " + std::to_string(states.size()) + "\n";
    }
    emit(o, text);
    return o.verify ? verify_golden() : 0;
}

int cmd_hist(const Options &o) {
    StabilizerMatrix ref = o.file_a.empty() ? StabilizerMatrix::zero_state(o.n) : load_pure(o.file_a);
    emit(o, angle_histogram(static_cast<int>(ref.num_qubits()), ref).csv());
    return 0;
}

int cmd_localsearch(const Options &o) {
    LocalSearchResult r = local_search(local_search_target(o.n, o.eps), StabilizerMatrix::zero_state(o.n));
    std::string text = o.format == "csv" ? "step,overlap2,state\n" : "";
    for (size_t i = 0; i < r.path.size(); i++) {
        if (o.format == "csv")
            text += std::to_string(i) + "," + r.overlaps[i].str() + "," + one_line(r.path[i]) + "\n";
        else
            text += "step " + std::to_string(i) + ": " + one_line(r.path[i]) + "  overlap^2 " + r.overlaps[i].str() + "\n";
    }
    emit(o, text);
    return 0;
}

int cmd_evade(const Options &o) {
    OverlapResult r = max_overlap(evading_state(o.m));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.overlap2.to_double());
    emit(o, "max overlap^2 " + r.overlap2.str() + " (" + buf + ") at " + one_line(r.best) + "\n");
    return 0;
}

int cmd_bench(const Options &o) {
    std::vector<size_t> ns;
    for (int n : o.ns) {
        if (n < 1) throw DimensionError("bench needs n >= 1");
        ns.push_back(static_cast<size_t>(n));
    }
    if (ns.empty()) ns = {20, 40, 60, 80, 100};
    BenchReference ref = o.reference == "zero"  ? BenchReference::Zero
                         : o.reference == "ghz" ? BenchReference::Ghz
                                                : BenchReference::Random;
    emit(o, bench_csv(bench_inner(ns, o.betas, o.reps, o.seed, ref)));
    return 0;
}

int cmd_measure(const Options &o) {
    StabilizerMatrix m = load_matrix(o.file_a);
    if (o.qubit == 0 || o.qubit > m.num_qubits()) throw IndexError("qubit out of range");
    std::mt19937_64 rng(o.seed);
    MeasureResult r = measure(m, o.qubit - 1, rng);
    emit(o, "# outcome " + std::to_string(r.outcome) + (r.random ? " random" : " deterministic") + "\n" +
                emit_matrix(canonicalize(r.posterior)));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer-state geometry toolkit"};
    app.require_subcommand(1);
    Options o;
    auto add_out = [&](CLI::App *s) {
        s->add_option("--out", o.out, "Write output to this file");
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    };
    auto one_file = [&](const char *name, const char *help) {
        CLI::App *s = app.add_subcommand(name, help);
        s->add_option("matrix", o.file_a, "Matrix file")->required()->check(CLI::ExistingFile);
        add_out(s);
        return s;
    };
    auto two_files = [&](const char *name, const char *help) {
        CLI::App *s = app.add_subcommand(name, help);
        s->add_option("first", o.file_a, "First matrix file")->required()->check(CLI::ExistingFile);
        s->add_option("second", o.file_b, "Second matrix file")->required()->check(CLI::ExistingFile);
        add_out(s);
        return s;
    };

    std::map<CLI::App *, std::function<int(const Options &)>> handlers;
    handlers[one_file("canon", "Print the canonical form of a matrix")] = cmd_canon;
    handlers[one_file("synth", "Synthesize a basis-normalization circuit")] = cmd_synth;
    CLI::App *inner = two_files("inner", "Inner product of two states");
    inner->add_flag("--complex", o.complex, "Include the phase");
    handlers[inner] = cmd_inner;
    handlers[two_files("wedge", "Stabilizer bivector and wedge norm")] = cmd_wedge;
    CLI::App *ortho = app.add_subcommand("ortho", "Orthogonalize a sum of stabilizer states");
    ortho->add_option("sum", o.file_a, "Sum file")->required()->check(CLI::ExistingFile);
    add_out(ortho);
    handlers[ortho] = cmd_ortho;
    handlers[one_file("neighbors", "List nearest-neighbor states")] = cmd_neighbors;

    CLI::App *en = app.add_subcommand("enum", "Enumerate all n-qubit stabilizer states");
    en->add_option("--n", o.n, "Qubits")->check(CLI::Range(1, 6));
    en->add_flag("--verify", o.verify, "Check n=2 against the built-in golden table");
    add_out(en);
    handlers[en] = cmd_enum;

    CLI::App *hist = app.add_subcommand("hist", "Inner-product histogram against a reference state");
    hist->add_option("--n", o.n, "Qubits when no reference is given")->check(CLI::Range(1, 5));
    hist->add_option("--ref", o.file_a, "Reference matrix file")->check(CLI::ExistingFile);
    add_out(hist);
    handlers[hist] = cmd_hist;

    CLI::App *ls = app.add_subcommand("localsearch", "Greedy search toward (1+eps)|0..0> + sum of other basis states");
    ls->add_option("--n", o.n, "Qubits")->check(CLI::Range(1, 6));
    ls->add_option("--eps", o.eps, "Integer eps");
    add_out(ls);
    handlers[ls] = cmd_localsearch;

    CLI::App *ev = app.add_subcommand("evade", "Maximum stabilizer overlap of a product of mu states");
    ev->add_option("--m", o.m, "Number of two-qubit mu factors")->check(CLI::Range(1, 2));
    add_out(ev);
    handlers[ev] = cmd_evade;

    CLI::App *bench = app.add_subcommand("bench", "Time inner products between random states");
    bench->add_option("--n", o.ns, "Qubit counts")->delimiter(',');
    bench->add_option("--beta", o.betas, "Gate density factors")->delimiter(',')->check(CLI::PositiveNumber);
    bench->add_option("--reps", o.reps, "Repetitions per point")->check(CLI::PositiveNumber);
    bench->add_option("--seed", o.seed, "Seed");
    bench->add_option("--ref", o.reference, "Reference state")->check(CLI::IsMember({"random", "zero", "ghz"}));
    add_out(bench);
    handlers[bench] = cmd_bench;

    CLI::App *meas = one_file("measure", "Measure one qubit in the computational basis");
    meas->add_option("--qubit", o.qubit, "1-indexed qubit");
    meas->add_option("--seed", o.seed, "Seed");
    handlers[meas] = cmd_measure;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        for (auto &[sub, fn] : handlers)
            if (sub->parsed()) return fn(o);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const StabgeoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
