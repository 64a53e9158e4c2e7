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

#ifndef YB_MATPOLY_HPP
#define YB_MATPOLY_HPP

#include <string>
#include <vector>

#include "yb/mat2.hpp"

namespace yb {

// Scalar polynomial in the spectral parameter, dense by coefficient.
template <class S>
using Poly = std::vector<S>;

template <class S>
Poly<S> poly_mul(const Poly<S>& p, const Poly<S>& q) {
    if (p.empty() || q.empty()) return {};
    Poly<S> out(p.size() + q.size() - 1, S(0));
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = 0; b < q.size(); ++b) out[a + b] += p[a] * q[b];
    return out;
}

template <class S>
S poly_eval(const Poly<S>& p, const S& z) {
    S acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
    return acc;
}

// Matrix polynomial in the spectral parameter with 2x2 coefficients,
// index k = coefficient of zeta^k. Degrees here are tiny (at most twice the
// lattice period plus one), so dense storage is the right call.
//
// Equality is coefficient-wise after trailing-zero trimming. Over an
// infinite field that IS the "holds for every zeta" notion used by all the
// identity suites.
template <class S>
struct MatPoly {
    std::vector<Mat2<S>> c;

    MatPoly() = default;
    explicit MatPoly(std::vector<Mat2<S>> coeffs) : c(std::move(coeffs)) { trim(); }

    static MatPoly constant(Mat2<S> m) { return MatPoly(std::vector<Mat2<S>>{std::move(m)}); }
    static MatPoly one() { return constant(Mat2<S>::identity()); }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for the zero polynomial

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    Mat2<S> coeff(size_t k) const { return k < c.size() ? c[k] : Mat2<S>::zero(); }

    Mat2<S> eval(const S& z) const {
        Mat2<S> acc = Mat2<S>::zero();
        for (size_t k = c.size(); k-- > 0;) acc = z * acc + c[k];
        return acc;
    }

    friend MatPoly operator*(const MatPoly& p, const MatPoly& q) {
        if (p.c.empty() || q.c.empty()) return MatPoly();
        std::vector<Mat2<S>> out(p.c.size() + q.c.size() - 1, Mat2<S>::zero());
        for (size_t a = 0; a < p.c.size(); ++a)
            for (size_t b = 0; b < q.c.size(); ++b) out[a + b] = out[a + b] + p.c[a] * q.c[b];
        return MatPoly(std::move(out));
    }

    friend MatPoly operator+(const MatPoly& p, const MatPoly& q) {
        std::vector<Mat2<S>> out(std::max(p.c.size(), q.c.size()), Mat2<S>::zero());
        for (size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) + q.coeff(k);
        return MatPoly(std::move(out));
    }

    friend MatPoly operator-(const MatPoly& p, const MatPoly& q) {
        std::vector<Mat2<S>> out(std::max(p.c.size(), q.c.size()), Mat2<S>::zero());
        for (size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) - q.coeff(k);
        return MatPoly(std::move(out));
    }

    friend bool operator==(const MatPoly& p, const MatPoly& q) { return p.c == q.c; }
    friend bool operator!=(const MatPoly& p, const MatPoly& q) { return !(p == q); }

    Poly<S> trace_poly() const {
        Poly<S> t;
        t.reserve(c.size());
        for (const auto& m : c) t.push_back(m.trace());
        return t;
    }

    // det as a scalar polynomial, from the entries. Fine for the small
    // degrees handled here; the lattice engine has a cheaper route through
    // multiplicativity when the factorization is known.
    Poly<S> det_poly() const {
        Poly<S> p00, p01, p10, p11;
        for (const auto& m : c) {
            p00.push_back(m(0, 0));
            p01.push_back(m(0, 1));
            p10.push_back(m(1, 0));
            p11.push_back(m(1, 1));
        }
        Poly<S> d1 = poly_mul(p00, p11), d2 = poly_mul(p01, p10);
        if (d2.size() > d1.size()) d1.resize(d2.size(), S(0));
        for (size_t k = 0; k < d2.size(); ++k) d1[k] -= d2[k];
        while (!d1.empty() && d1.back() == S(0)) d1.pop_back();
        return d1;
    }
};

// First-degree pencil X - zeta*A, the fundamental object everything else is
// built from. Evaluation at zeta = 0 returns the X part; the coefficient of
// zeta is minus the A part.
template <class S>
struct BinomialMatrix {
    Mat2<S> x_part;
    Mat2<S> a_part;

    MatPoly<S> poly() const { return MatPoly<S>({x_part, -a_part}); }
    Mat2<S> eval(const S& z) const { return x_part - z * a_part; }
    CharPoly<S> char_poly() const { return yb::char_poly(x_part, a_part); }
};

template <class S>
MatPoly<S> operator*(const BinomialMatrix<S>& a, const BinomialMatrix<S>& b) {
    return a.poly() * b.poly();
}

// Left-multiply a matrix polynomial by the pencil (X - zeta A) without
// building the intermediate two-term polynomial.
template <class S>
MatPoly<S> pencil_mul(const BinomialMatrix<S>& f, const MatPoly<S>& p) {
    std::vector<Mat2<S>> out(p.c.size() + 1, Mat2<S>::zero());
    for (size_t k = 0; k < p.c.size(); ++k) {
        out[k] = out[k] + f.x_part * p.c[k];
        out[k + 1] = out[k + 1] - f.a_part * p.c[k];
    }
    return MatPoly<S>(std::move(out));
}

using MatPolyQ = MatPoly<Rational>;
using BinomialQ = BinomialMatrix<Rational>;

}  // namespace yb

#endif
