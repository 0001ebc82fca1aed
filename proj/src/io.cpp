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

#include "stabgeo/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "stabgeo/errors.hpp"

namespace stabgeo {

namespace {

std::string strip(const std::string &line) {
    std::string s = line.substr(0, line.find('#'));
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct MatrixBuilder {
    std::vector<PauliOp> rows;
    size_t width = 0;
    size_t first_line = 0;

    void add(const std::string &s, size_t line) {
        PauliOp p;
        try {
            p = PauliOp::from_string(s);
        } catch (const ParseError &e) {
            throw ParseError(e.what(), line);
        }
        if (p.phase_exp() & 1) throw ParseError("odd phase in row '" + s + "'", line);
        if (rows.empty()) {
            width = p.num_qubits();
            first_line = line;
        } else if (p.num_qubits() != width) {
            throw ParseError("row width " + std::to_string(p.num_qubits()) + " differs from " + std::to_string(width), line);
        }
        for (const auto &r : rows)
            if (!commutes(r, p)) throw ParseError("row '" + s + "' anticommutes with an earlier row", line);
        rows.push_back(std::move(p));
        if (rows.size() > width) throw ParseError("more rows than qubits", line);
    }

    StabilizerMatrix finish(size_t line) {
        if (rows.empty()) throw ParseError("empty matrix", line);
        StabilizerMatrix m(width, std::move(rows));
        try {
            m.check_well_formed();
        } catch (const StabgeoError &e) {
            throw ParseError(e.what(), first_line);
        }
        rows.clear();
        return m;
    }
};

size_t parse_qubit(const std::string &tok, size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad qubit index '" + tok + "'", line);
    size_t q = std::stoul(tok);
    if (q == 0) throw ParseError("qubit indices start at 1", line);
    return q - 1;
}

}  // namespace

StabilizerMatrix parse_matrix(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    size_t no = 0;
    MatrixBuilder b;
    while (std::getline(in, line)) {
        no++;
        std::string s = strip(line);
        if (!s.empty()) b.add(s, no);
    }
    return b.finish(no);
}

std::string emit_matrix(const StabilizerMatrix &m) {
    std::string out;
    for (const auto &r : m.rows()) out += r.str() + "\n";
    return out;
}

CliffordCircuit parse_circuit(const std::string &text, size_t n) {
    static const std::map<std::string, GateKind> kinds = {
        {"H", GateKind::H},       {"P", GateKind::P},   {"X", GateKind::X},   {"Y", GateKind::Y},
        {"Z", GateKind::Z},       {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ}, {"CY", GateKind::CY}};
    std::istringstream in(text);
    std::string line;
    size_t no = 0, width = 0;
    std::vector<std::pair<Gate, size_t>> gates;
    while (std::getline(in, line)) {
        no++;
        std::istringstream ls(strip(line));
        std::string name;
        if (!(ls >> name)) continue;
        auto it = kinds.find(name);
        if (it == kinds.end()) throw ParseError("unknown gate '" + name + "'", no);
        std::vector<size_t> qs;
        std::string tok;
        while (ls >> tok) qs.push_back(parse_qubit(tok, no));
        size_t want = is_two_qubit(it->second) ? 2 : 1;
        if (qs.size() != want) throw ParseError(name + " takes " + std::to_string(want) + " qubit(s)", no);
        Gate g = want == 2 ? Gate{it->second, qs[1], qs[0]} : Gate{it->second, qs[0], 0};
        if (want == 2 && qs[0] == qs[1]) throw ParseError("control equals target", no);
        for (size_t q : qs) width = std::max(width, q + 1);
        gates.emplace_back(g, no);
    }
    if (n == 0) n = width;
    CliffordCircuit c(n);
    for (const auto &[g, l] : gates) {
        try {
            validate_gate(g, n);
        } catch (const StabgeoError &e) {
            throw ParseError(e.what(), l);
        }
        c.append(g);
    }
    return c;
}

std::string emit_circuit(const CliffordCircuit &c) {
    std::string out;
    for (const auto &g : c.gates) out += g.str() + "\n";
    return out;
}

Cyclo parse_cyclo(const std::string &text) {
    try {
        return Cyclo(ExactScalar::parse(text));
    } catch (const ParseError &) {
    }
    static const std::regex term_re(R"(\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*(w(?:\^([0-3]))?)?\s*)");
    Cyclo out;
    std::string rest = text;
    bool first = true;
    while (true) {
        size_t b = rest.find_first_not_of(" \t");
        if (b == std::string::npos) break;
        rest = rest.substr(b);
        // Split off one signed term.
        size_t end = rest.find_first_of("+-", 1);
        std::string tok = rest.substr(0, end);
        rest = end == std::string::npos ? "" : rest.substr(end);
        std::smatch m;
        if (!std::regex_match(tok, m, term_re) || (!m[2].matched && !m[4].matched) ||
            (m[3].matched != (m[2].matched && m[4].matched)) || (!first && !m[1].matched))
            throw ParseError("bad coefficient '" + text + "'", 0);
        mpq_class v = m[2].matched ? mpq_class(m[2].str()) : mpq_class(1);
        v.canonicalize();
        if (m[1].matched && m[1].str() == "-") v = -v;
        int j = !m[4].matched ? 0 : (m[5].matched ? std::stoi(m[5]) : 1);
        out.coef(j) += v;
        first = false;
    }
    if (first) throw ParseError("empty coefficient", 0);
    return out;
}

StabilizerSum parse_sum(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    size_t no = 0;
    std::vector<std::pair<Cyclo, StabilizerMatrix>> terms;
    std::optional<Cyclo> coef;
    MatrixBuilder b;
    auto flush = [&] {
        if (coef) terms.emplace_back(*coef, canonicalize(b.finish(no)));
    };
    while (std::getline(in, line)) {
        no++;
        std::string s = strip(line);
        if (s.empty()) continue;
        if (s.rfind("term", 0) == 0) {
            flush();
            try {
                coef = parse_cyclo(s.substr(4));
            } catch (const ParseError &e) {
                throw ParseError(e.what(), no);
            }
            continue;
        }
        if (!coef) throw ParseError("matrix row before the first 'term' line", no);
        b.add(s, no);
    }
    flush();
    if (terms.empty()) throw ParseError("empty sum", no);
    StabilizerSum sum(terms[0].second.num_qubits());
    for (const auto &[c, m] : terms) {
        if (m.num_qubits() != sum.num_qubits() || !m.is_pure())
            throw ParseError("sum terms must be pure states on the same qubits", 0);
        sum.insert(c, m);
    }
    return sum;
}

std::string emit_sum(const StabilizerSum &s) {
    std::string out;
    for (const auto &t : s.terms()) out += "term " + t.coef.str() + "\n" + emit_matrix(t.matrix);
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

}  // namespace stabgeo
