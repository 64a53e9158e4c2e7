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

#ifndef YB_REFACTOR_HPP
#define YB_REFACTOR_HPP

#include <string>
#include <tuple>
#include <utility>

#include "yb/matpoly.hpp"

namespace yb {

// Matrix refactorization: given the pencil product (Y - zeta B)(X - zeta A)
// with A, B invertible and commuting, find the unique (U, V) with
//
//     (U - zeta A)(V - zeta B) = (Y - zeta B)(X - zeta A)
//
// such that U has the spectrum of X relative to A (equivalently, V has the
// spectrum of Y relative to B). The closed form goes through the two
// auxiliary matrices
//
//     Pi1 = f2(X;A)(YA + BX) - f1(X;A) AB
//     Pi2 = f2(X;A) YX       - f0(X;A) AB
//
// with U = Pi2 Pi1^-1 A and V = A^-1 (YA + BX - UB). The map is undefined
// where det Pi1 = 0; that is an error here, not a limit.

template <class S>
struct RefactorInput {
    Mat2<S> X, Y, A, B;

    // Validates the standing hypotheses: A, B invertible and AB = BA.
    static RefactorInput checked(Mat2<S> X, Mat2<S> Y, Mat2<S> A, Mat2<S> B) {
        if (vanishes(A.det()))
            throw SingularMatrix("refactorization needs invertible A, got " + mat_str(A));
        if (vanishes(B.det()))
            throw SingularMatrix("refactorization needs invertible B, got " + mat_str(B));
        if (!A.commutes_with(B))
            throw NonCommuting("structure matrices do not commute: A=" + mat_str(A) +
                               " B=" + mat_str(B));
        return RefactorInput{std::move(X), std::move(Y), std::move(A), std::move(B)};
    }
};

template <class S>
std::pair<Mat2<S>, Mat2<S>> pi_matrices(const RefactorInput<S>& in) {
    CharPoly<S> cp = char_poly(in.X, in.A);
    Mat2<S> AB = in.A * in.B;
    Mat2<S> pi1 = cp.f2 * (in.Y * in.A + in.B * in.X) - cp.f1 * AB;
    Mat2<S> pi2 = cp.f2 * (in.Y * in.X) - cp.f0 * AB;
    return {std::move(pi1), std::move(pi2)};
}

template <class S>
std::pair<Mat2<S>, Mat2<S>> refactor_pair(const RefactorInput<S>& in) {
    auto [pi1, pi2] = pi_matrices(in);
    if (vanishes(pi1.det()))
        throw SingularPi1("det Pi1 = 0 at X=" + mat_str(in.X) + " Y=" + mat_str(in.Y) +
                          " A=" + mat_str(in.A) + " B=" + mat_str(in.B));
    Mat2<S> U = pi2 * pi1.inverse() * in.A;
    Mat2<S> V = in.A.inverse() * (in.Y * in.A + in.B * in.X - U * in.B);
    return {std::move(U), std::move(V)};
}

// True iff the pencil identity holds coefficient-wise AND both spectra are
// preserved. The spectrum conditions are what single out this branch among
// all factorizations of the same product.
template <class S>
bool verify_refactorization(const Mat2<S>& U, const Mat2<S>& V, const Mat2<S>& X,
                            const Mat2<S>& Y, const Mat2<S>& A, const Mat2<S>& B) {
    BinomialMatrix<S> bu{U, A}, bv{V, B}, bx{X, A}, by{Y, B};
    if (bu * bv != by * bx) return false;
    if (char_poly(U, A) != char_poly(X, A)) return false;
    if (char_poly(V, B) != char_poly(Y, B)) return false;
    return true;
}

// Triple pencil product (X - zeta A1)(Y - zeta A2)(Z - zeta A3) stored by
// its coefficient combinations:
//   zeta^0:  K = XYZ
//   zeta^1: -L,  L = XY A3 + X A2 Z + A1 Y Z
//   zeta^2:  M,  M = X A2 A3 + A1 Y A3 + A1 A2 Z
//   zeta^3: -A1 A2 A3
template <class S>
struct TripleProduct {
    Mat2<S> K, L, M;
    Mat2<S> A1, A2, A3;

    MatPoly<S> poly() const {
        return MatPoly<S>({K, -L, M, -(A1 * A2 * A3)});
    }
};

template <class S>
TripleProduct<S> build_triple_product(const Mat2<S>& X, const Mat2<S>& Y, const Mat2<S>& Z,
                                      const Mat2<S>& A1, const Mat2<S>& A2, const Mat2<S>& A3) {
    return TripleProduct<S>{X * Y * Z,
                            X * Y * A3 + X * A2 * Z + A1 * Y * Z,
                            X * A2 * A3 + A1 * Y * A3 + A1 * A2 * Z,
                            A1, A2, A3};
}

// Unique recovery of the three factors from the triple product, given the
// prescribed spectra cp1 = (f0,f1,f2) of X w.r.t. A1, cp2 of Y w.r.t. A2,
// cp3 of Z w.r.t. A3.
//
// X is isolated by eliminating powers of X A1^-1 through Cayley-Hamilton:
// with G = A1 A2 A3 and (a0,a1,a2) = cp1,
//
//   X A1^-1 [a2^2 L - a2 a1 M + (a1^2 - a2 a0) G] = a2^2 K - a2 a0 M + a1 a0 G.
//
// Z satisfies the mirror-image relation (transpose the product to reverse
// the factor order), and Y then follows linearly from the zeta^2 equation.
// The bracketed matrix being singular is surfaced as SingularRecovery; the
// hypotheses that characterize that degeneracy are not known, so the input
// is reported verbatim.
template <class S>
std::tuple<Mat2<S>, Mat2<S>, Mat2<S>> recover_from_triple_product(const TripleProduct<S>& tp,
                                                                  const CharPoly<S>& cp1,
                                                                  const CharPoly<S>& cp2,
                                                                  const CharPoly<S>& cp3) {
    for (const Mat2<S>* a : {&tp.A1, &tp.A2, &tp.A3})
        if (vanishes(a->det()))
            throw SingularMatrix("triple recovery needs invertible structure matrices");
    if (!tp.A1.commutes_with(tp.A2) || !tp.A1.commutes_with(tp.A3) || !tp.A2.commutes_with(tp.A3))
        throw NonCommuting("triple recovery needs pairwise commuting structure matrices");

    const Mat2<S> G = tp.A1 * tp.A2 * tp.A3;

    auto bracket = [&](const CharPoly<S>& cp) {
        return cp.f2 * cp.f2 * tp.L - cp.f2 * cp.f1 * tp.M +
               (cp.f1 * cp.f1 - cp.f2 * cp.f0) * G;
    };
    auto numer = [&](const CharPoly<S>& cp) {
        return cp.f2 * cp.f2 * tp.K - cp.f2 * cp.f0 * tp.M + cp.f1 * cp.f0 * G;
    };

    Mat2<S> Dx = bracket(cp1);
    if (vanishes(Dx.det()))
        throw SingularRecovery("X-recovery bracket singular: K=" + mat_str(tp.K) +
                               " L=" + mat_str(tp.L) + " M=" + mat_str(tp.M));
    Mat2<S> X = numer(cp1) * Dx.inverse() * tp.A1;

    // Residual of the elimination identity with the recovered X; vanishes
    // by construction, kept as a guard against algebra regressions.
    Mat2<S> Q = numer(cp1) - X * tp.A1.inverse() * Dx;
    if (!Q.is_zero()) throw SingularRecovery("nonzero elimination residual, Q=" + mat_str(Q));

    Mat2<S> Dz = bracket(cp3);
    if (vanishes(Dz.det()))
        throw SingularRecovery("Z-recovery bracket singular: K=" + mat_str(tp.K) +
                               " L=" + mat_str(tp.L) + " M=" + mat_str(tp.M));
    Mat2<S> Z = tp.A3 * Dz.inverse() * numer(cp3);

    Mat2<S> Y = tp.A1.inverse() * (tp.M - X * tp.A2 * tp.A3 - tp.A1 * tp.A2 * Z) * tp.A3.inverse();

    if (build_triple_product(X, Y, Z, tp.A1, tp.A2, tp.A3).poly() != tp.poly())
        throw DomainError("triple product does not factor with the prescribed spectra");
    if (char_poly(Y, tp.A2) != cp2)
        throw DomainError("recovered middle factor has unexpected spectrum");

    return {std::move(X), std::move(Y), std::move(Z)};
}

}  // namespace yb

#endif
