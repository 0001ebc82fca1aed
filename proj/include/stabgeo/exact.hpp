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

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace stabgeo {

// omega^m * 2^(-k/2) with omega = exp(i pi/4), or exact zero.
class ExactScalar {
   public:
    ExactScalar() = default;  // zero
    ExactScalar(int omega_exp, int half_exp) : zero_(false), m_(norm8(omega_exp)), k_(half_exp) {}

    static ExactScalar zero() { return {}; }
    static ExactScalar one() { return {0, 0}; }
    // i^t as an ExactScalar.
    static ExactScalar i_pow(int t) { return {2 * t, 0}; }

    bool is_zero() const { return zero_; }
    int omega_exp() const { return m_; }
    int half_exp() const { return k_; }

    ExactScalar conj() const { return zero_ ? *this : ExactScalar(-m_, k_); }
    friend ExactScalar operator*(const ExactScalar &a, const ExactScalar &b) {
        if (a.zero_ || b.zero_) return {};
        return {a.m_ + b.m_, a.k_ + b.k_};
    }
    bool operator==(const ExactScalar &o) const = default;

    // "0" or "w^m * 2^-k/2".
    std::string str() const;
    static ExactScalar parse(const std::string &text);

   private:
    static int norm8(int m) { return ((m % 8) + 8) % 8; }
    bool zero_ = true;
    int m_ = 0;
    int k_ = 0;
};

// Element of the real subfield Q(sqrt2): a + b*sqrt2.
struct QuadReal {
    mpq_class a = 0;
    mpq_class b = 0;

    QuadReal() = default;
    QuadReal(mpq_class a_, mpq_class b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadReal(long v) : a(v), b(0) {}

    int sign() const;
    QuadReal inverse() const;
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    double to_double() const;
    std::string str() const;

    friend QuadReal operator+(const QuadReal &x, const QuadReal &y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadReal operator-(const QuadReal &x, const QuadReal &y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadReal operator*(const QuadReal &x, const QuadReal &y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend QuadReal operator/(const QuadReal &x, const QuadReal &y) { return x * y.inverse(); }
    friend bool operator==(const QuadReal &x, const QuadReal &y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const QuadReal &x, const QuadReal &y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadReal &x, const QuadReal &y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadReal &x, const QuadReal &y) { return (x - y).sign() <= 0; }
};

// Element of the cyclotomic field Q(omega), omega^4 = -1, stored as rational
// coefficients of 1, omega, omega^2, omega^3. Every amplitude, inner product and
// superposition coefficient in the library lives here.
class Cyclo {
   public:
    Cyclo() = default;
    explicit Cyclo(long v) { c_[0] = v; }
    explicit Cyclo(const mpq_class &v) { c_[0] = v; }
    Cyclo(const ExactScalar &s);  // NOLINT implicit embedding

    static Cyclo omega_pow(int m);
    static Cyclo sqrt2();

    // this * i^t, a coefficient rotation.
    Cyclo times_i_pow(int t) const;

    const mpq_class &coef(int j) const { return c_[j]; }
    mpq_class &coef(int j) { return c_[j]; }

    bool is_zero() const;
    Cyclo conj() const;
    // Galois automorphism omega -> omega^j, j odd.
    Cyclo galois(int j) const;
    Cyclo inverse() const;
    // |z|^2 as an element of Q(sqrt2).
    QuadReal norm2() const;
    // Real-subfield view; requires the value to be real.
    std::optional<QuadReal> as_real() const;
    // Returns the ExactScalar with the same value, if there is one.
    std::optional<ExactScalar> to_exact() const;

    Cyclo &operator+=(const Cyclo &o);
    Cyclo &operator-=(const Cyclo &o);
    friend Cyclo operator+(Cyclo a, const Cyclo &b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo &b) { return a -= b; }
    friend Cyclo operator-(const Cyclo &a) { return Cyclo() - a; }
    friend Cyclo operator*(const Cyclo &a, const Cyclo &b);
    friend Cyclo operator/(const Cyclo &a, const Cyclo &b) { return a * b.inverse(); }
    bool operator==(const Cyclo &o) const;

    std::string str() const;

   private:
    std::array<mpq_class, 4> c_{};
};

}  // namespace stabgeo
