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

#include "stabgeo/exact.hpp"

#include <cmath>
#include <regex>

#include "stabgeo/errors.hpp"

namespace stabgeo {

namespace {

// q == 2^e for some integer e.
std::optional<int> exact_log2(const mpq_class &q) {
    if (sgn(q) <= 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    auto is_pow2 = [](const mpz_class &v) { return mpz_popcount(v.get_mpz_t()) == 1; };
    if (!is_pow2(num) || !is_pow2(den)) return std::nullopt;
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    return static_cast<int>(e);
}

mpq_class pow2(int e) {
    mpz_class v = 1;
    if (e >= 0) {
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e);
        return mpq_class(v);
    }
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), -e);
    return mpq_class(mpz_class(1), v);
}

}  // namespace

std::string ExactScalar::str() const {
    if (zero_) return "0";
    return "w^" + std::to_string(m_) + " * 2^-" + std::to_string(k_) + "/2";
}

ExactScalar ExactScalar::parse(const std::string &text) {
    static const std::regex zero_re(R"(\s*0\s*)");
    static const std::regex re(R"(\s*w\^(-?\d+)\s*\*\s*2\^-(\d+)/2\s*)");
    if (std::regex_match(text, zero_re)) return {};
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw ParseError("bad scalar '" + text + "'", 0);
    return {std::stoi(m[1]), std::stoi(m[2])};
}

int QuadReal::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sa >= 0 && sb >= 0) return (sa || sb) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    mpq_class lhs = a * a, rhs = 2 * b * b;
    int c = cmp(lhs, rhs);
    return sa > 0 ? c : -c;
}

QuadReal QuadReal::inverse() const {
    mpq_class d = a * a - 2 * b * b;
    if (sgn(d) == 0) throw StabgeoError("division by zero in Q(sqrt2)");
    return {a / d, -b / d};
}

double QuadReal::to_double() const { return a.get_d() + b.get_d() * std::sqrt(2.0); }

std::string QuadReal::str() const {
    if (sgn(b) == 0) return a.get_str();
    if (sgn(a) == 0) return b.get_str() + "*sqrt2";
    return a.get_str() + (sgn(b) > 0 ? " + " : " - ") + mpq_class(abs(b)).get_str() + "*sqrt2";
}

Cyclo::Cyclo(const ExactScalar &s) {
    if (s.is_zero()) return;
    int k = s.half_exp();
    Cyclo mag;
    if (k % 2 == 0) {
        mag = Cyclo(pow2(-k / 2));
    } else {
        // 2^(-k/2) = 2^(-(k+1)/2) * sqrt2
        int e = (k + 1) / 2;
        mag = sqrt2() * Cyclo(pow2(-e));
    }
    *this = mag * omega_pow(s.omega_exp());
}

Cyclo Cyclo::omega_pow(int m) {
    m = ((m % 8) + 8) % 8;
    Cyclo z;
    if (m < 4) {
        z.c_[m] = 1;
    } else {
        z.c_[m - 4] = -1;
    }
    return z;
}

Cyclo Cyclo::sqrt2() {
    Cyclo z;
    z.c_[1] = 1;
    z.c_[3] = -1;
    return z;
}

Cyclo Cyclo::times_i_pow(int t) const {
    Cyclo z;
    int s = 2 * (((t % 4) + 4) % 4);
    for (int i = 0; i < 4; i++) {
        int e = (i + s) % 8;
        if (e < 4) {
            z.c_[e] = c_[i];
        } else {
            z.c_[e - 4] = -c_[i];
        }
    }
    return z;
}

bool Cyclo::is_zero() const {
    for (const auto &c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

Cyclo Cyclo::conj() const {
    Cyclo z;
    z.c_[0] = c_[0];
    z.c_[1] = -c_[3];
    z.c_[2] = -c_[2];
    z.c_[3] = -c_[1];
    return z;
}

Cyclo Cyclo::galois(int j) const {
    Cyclo z;
    for (int i = 0; i < 4; i++) {
        if (sgn(c_[i]) == 0) continue;
        int e = (i * j) % 8;
        if (e < 4) {
            z.c_[e] += c_[i];
        } else {
            z.c_[e - 4] -= c_[i];
        }
    }
    return z;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw StabgeoError("division by zero in Q(omega)");
    Cyclo p = galois(3) * galois(5) * galois(7);
    Cyclo nrm = *this * p;  // field norm, rational
    mpq_class inv = 1 / nrm.c_[0];
    for (auto &c : p.c_) c *= inv;
    return p;
}

QuadReal Cyclo::norm2() const { return *(*this * conj()).as_real(); }

std::optional<QuadReal> Cyclo::as_real() const {
    if (sgn(c_[2]) != 0 || c_[3] != -c_[1]) return std::nullopt;
    return QuadReal(c_[0], c_[1]);
}

std::optional<ExactScalar> Cyclo::to_exact() const {
    if (is_zero()) return ExactScalar::zero();
    for (int m = 0; m < 8; m++) {
        auto r = (*this * omega_pow(-m)).as_real();
        if (!r) continue;
        if (sgn(r->b) == 0) {
            auto e = exact_log2(r->a);
            if (e) return ExactScalar(m, -2 * *e);
        } else if (sgn(r->a) == 0) {
            auto e = exact_log2(r->b);
            if (e) return ExactScalar(m, -2 * *e - 1);
        }
    }
    return std::nullopt;
}

Cyclo &Cyclo::operator+=(const Cyclo &o) {
    for (int i = 0; i < 4; i++) c_[i] += o.c_[i];
    return *this;
}

Cyclo &Cyclo::operator-=(const Cyclo &o) {
    for (int i = 0; i < 4; i++) c_[i] -= o.c_[i];
    return *this;
}

Cyclo operator*(const Cyclo &a, const Cyclo &b) {
    Cyclo r;
    for (int i = 0; i < 4; i++) {
        if (sgn(a.c_[i]) == 0) continue;
        for (int j = 0; j < 4; j++) {
            if (sgn(b.c_[j]) == 0) continue;
            int e = i + j;
            if (e < 4) {
                r.c_[e] += a.c_[i] * b.c_[j];
            } else {
                r.c_[e - 4] -= a.c_[i] * b.c_[j];
            }
        }
    }
    return r;
}

bool Cyclo::operator==(const Cyclo &o) const {
    for (int i = 0; i < 4; i++)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string Cyclo::str() const {
    static const char *basis[4] = {"", "w", "w^2", "w^3"};
    std::string s;
    for (int i = 0; i < 4; i++) {
        if (sgn(c_[i]) == 0) continue;
        mpq_class mag = abs(c_[i]);
        if (s.empty()) {
            if (sgn(c_[i]) < 0) s += "-";
        } else {
            s += sgn(c_[i]) < 0 ? " - " : " + ";
        }
        if (i == 0) {
            s += mag.get_str();
        } else if (mag == 1) {
            s += basis[i];
        } else {
            s += mag.get_str() + "*" + basis[i];
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace stabgeo
