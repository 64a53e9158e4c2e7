/*
   Copyright 2026 the yb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef YB_RAWQ_HPP
#define YB_RAWQ_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "yb/rational.hpp"

namespace yb {

// Fraction without canonicalization. The canonical Rational pays a gcd on
// every operation, which dominates once lattice coordinates reach tens of
// kilobits; the map kernels instead run on RawQ (integer num/den, gcd-free)
// and canonicalize the handful of outputs once. Only the hot paths in
// lattice evolution use this type; Rational remains the reference scalar,
// and the two are cross-checked in the test suite.
//
// Not a general-purpose number: equality is intentionally absent (two RawQ
// can represent the same rational with different num/den), and denominators
// may go negative.
struct RawQ {
    mpz_class num;
    mpz_class den;

    RawQ() : num(0), den(1) {}
    RawQ(long n) : num(n), den(1) {}  // NOLINT: implicit scalar literals
    explicit RawQ(const Rational& r) : num(r.numerator()), den(r.denominator()) {}
    RawQ(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {}

    Rational canonical() const { return Rational(num, den); }

    RawQ operator-() const { return {-num, den}; }

    friend RawQ operator+(const RawQ& a, const RawQ& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RawQ operator-(const RawQ& a, const RawQ& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RawQ operator*(const RawQ& a, const RawQ& b) { return {a.num * b.num, a.den * b.den}; }
    friend RawQ operator/(const RawQ& a, const RawQ& b) {
        if (b.num == 0) throw DivisionByZero("raw fraction division by zero");
        return {a.num * b.den, a.den * b.num};
    }

    RawQ& operator+=(const RawQ& o) { *this = *this + o; return *this; }
    RawQ& operator-=(const RawQ& o) { *this = *this - o; return *this; }
    RawQ& operator*=(const RawQ& o) { *this = *this * o; return *this; }
    RawQ& operator/=(const RawQ& o) { *this = *this / o; return *this; }

    // Mathematical equality (cross-multiplied), not representation equality.
    friend bool operator==(const RawQ& a, const RawQ& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const RawQ& a, const RawQ& b) { return !(a == b); }
};

inline bool vanishes(const RawQ& x) { return x.num == 0; }

inline std::string scalar_str(const RawQ& x) {
    return x.num.get_str() + "/" + x.den.get_str();
}

}  // namespace yb

#endif
