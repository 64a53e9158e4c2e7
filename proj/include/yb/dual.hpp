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

#ifndef YB_DUAL_HPP
#define YB_DUAL_HPP

#include <string>

#include "yb/rational.hpp"

namespace yb {

// Dual number a + b*delta with delta^2 = 0. Feeding lifted inputs through
// any rational expression leaves the exact partial derivative in the
// derivative slot; this is how the Poisson suites take exact Jacobians of
// the parametric maps.
template <class T>
struct Dual {
    T val;
    T der;

    Dual() : val(0), der(0) {}
    Dual(long n) : val(n), der(0) {}  // NOLINT: implicit scalar literals
    Dual(T v) : val(std::move(v)), der(0) {}  // NOLINT
    Dual(T v, T d) : val(std::move(v)), der(std::move(d)) {}

    Dual operator-() const { return {-val, -der}; }

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.val + b.val, a.der + b.der}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.val - b.val, a.der - b.der}; }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.val * b.val, a.val * b.der + a.der * b.val};
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        if (vanishes(b.val)) throw DivisionByZero("dual division by zero value part");
        T v = a.val / b.val;
        return {v, (a.der - v * b.der) / b.val};
    }

    Dual& operator+=(const Dual& o) { *this = *this + o; return *this; }
    Dual& operator-=(const Dual& o) { *this = *this - o; return *this; }
    Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
    Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

    friend bool operator==(const Dual& a, const Dual& b) { return a.val == b.val && a.der == b.der; }
    friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

using DualScalar = Dual<Rational>;

// lift(x, seed): start a derivative computation with d(x)/dt = seed.
template <class T>
Dual<T> dual_lift(T x, T seed) {
    return Dual<T>(std::move(x), std::move(seed));
}

// Divisor guard looks at the value part only: a + b*delta is invertible
// iff a != 0.
template <class T>
bool vanishes(const Dual<T>& x) {
    return vanishes(x.val);
}

template <class T>
std::string scalar_str(const Dual<T>& x) {
    return scalar_str(x.val) + "+" + scalar_str(x.der) + "d";
}

}  // namespace yb

#endif
