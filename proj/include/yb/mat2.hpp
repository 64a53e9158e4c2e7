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

#ifndef YB_MAT2_HPP
#define YB_MAT2_HPP

#include <array>
#include <string>

#include "yb/dual.hpp"
#include "yb/rational.hpp"

namespace yb {

// 2x2 matrix over any scalar field with exact arithmetic (Rational, duals,
// double on the float-limit path). Value type, immutable in spirit: all
// operations return fresh matrices.
template <class S>
struct Mat2 {
    std::array<std::array<S, 2>, 2> e{{{S(0), S(0)}, {S(0), S(0)}}};

    Mat2() = default;
    Mat2(S a, S b, S c, S d) : e{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}} {}

    static Mat2 identity() { return Mat2(S(1), S(0), S(0), S(1)); }
    static Mat2 zero() { return Mat2(); }
    static Mat2 diagonal(S a, S d) { return Mat2(std::move(a), S(0), S(0), std::move(d)); }

    S& operator()(int i, int j) { return e[i][j]; }
    const S& operator()(int i, int j) const { return e[i][j]; }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return Mat2(a.e[0][0] + b.e[0][0], a.e[0][1] + b.e[0][1],
                    a.e[1][0] + b.e[1][0], a.e[1][1] + b.e[1][1]);
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return Mat2(a.e[0][0] - b.e[0][0], a.e[0][1] - b.e[0][1],
                    a.e[1][0] - b.e[1][0], a.e[1][1] - b.e[1][1]);
    }
    Mat2 operator-() const { return Mat2(-e[0][0], -e[0][1], -e[1][0], -e[1][1]); }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return Mat2(a.e[0][0] * b.e[0][0] + a.e[0][1] * b.e[1][0],
                    a.e[0][0] * b.e[0][1] + a.e[0][1] * b.e[1][1],
                    a.e[1][0] * b.e[0][0] + a.e[1][1] * b.e[1][0],
                    a.e[1][0] * b.e[0][1] + a.e[1][1] * b.e[1][1]);
    }
    friend Mat2 operator*(const S& c, const Mat2& m) {
        return Mat2(c * m.e[0][0], c * m.e[0][1], c * m.e[1][0], c * m.e[1][1]);
    }

    friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

    S det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }
    S trace() const { return e[0][0] + e[1][1]; }

    Mat2 transpose() const { return Mat2(e[0][0], e[1][0], e[0][1], e[1][1]); }

    Mat2 adjugate() const { return Mat2(e[1][1], -e[0][1], -e[1][0], e[0][0]); }

    Mat2 inverse() const {
        S d = det();
        if (vanishes(d)) throw SingularMatrix("inverse of singular matrix " + mat_str(*this));
        return Mat2(e[1][1] / d, -e[0][1] / d, -e[1][0] / d, e[0][0] / d);
    }

    bool is_zero() const {
        return e[0][0] == S(0) && e[0][1] == S(0) && e[1][0] == S(0) && e[1][1] == S(0);
    }

    bool commutes_with(const Mat2& o) const { return (*this) * o == o * (*this); }
};

template <class S>
std::string mat_str(const Mat2<S>& m) {
    return "[[" + scalar_str(m(0, 0)) + "," + scalar_str(m(0, 1)) + "],[" +
           scalar_str(m(1, 0)) + "," + scalar_str(m(1, 1)) + "]]";
}

// Coefficients of det(X - zeta*A) = f2*zeta^2 - f1*zeta + f0. Note the sign
// convention on f1: the polynomial is written with alternating signs, so f1
// of the identity pencil is the trace.
template <class S>
struct CharPoly {
    S f0, f1, f2;

    friend bool operator==(const CharPoly& a, const CharPoly& b) {
        return a.f0 == b.f0 && a.f1 == b.f1 && a.f2 == b.f2;
    }
    friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }
};

template <class S>
CharPoly<S> char_poly(const Mat2<S>& X, const Mat2<S>& A) {
    // f1 expands the bilinear cross term of det(X - zeta A).
    S f1 = A(1, 1) * X(0, 0) - A(1, 0) * X(0, 1) - A(0, 1) * X(1, 0) + A(0, 0) * X(1, 1);
    return CharPoly<S>{X.det(), std::move(f1), A.det()};
}

// f2*(X A^-1)^2 - f1*(X A^-1) + f0*I. The Cayley-Hamilton theorem for the
// pencil says this is identically zero; the suites assert exactly that.
template <class S>
Mat2<S> cayley_hamilton_residual(const Mat2<S>& X, const Mat2<S>& A) {
    if (vanishes(A.det()))
        throw SingularMatrix("cayley_hamilton_residual needs invertible A, got " + mat_str(A));
    CharPoly<S> cp = char_poly(X, A);
    Mat2<S> W = X * A.inverse();
    return cp.f2 * (W * W) - cp.f1 * W + cp.f0 * Mat2<S>::identity();
}

using Mat2Q = Mat2<Rational>;
using CharPolyQ = CharPoly<Rational>;

}  // namespace yb

#endif
