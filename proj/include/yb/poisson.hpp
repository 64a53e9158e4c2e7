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

#ifndef YB_POISSON_HPP
#define YB_POISSON_HPP

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "yb/leaves.hpp"

namespace yb {

// Sklyanin bracket on pencils L(zeta) = X - zeta A with A constant:
//
//   {L(zeta) (x) L(eta)} = [r/(zeta-eta), L(zeta) (x) L(eta)],
//
// r the permutation matrix. Since [r, P (x) P] = 0 and r conjugation swaps
// tensor factors, the commutator collapses to (zeta-eta)(A (x) X - X (x) A) r,
// so the entry brackets are constant in the spectral parameters and read off
// as
//
//   {x_ij, x_kl} = A_il x_kj - x_il A_kj.
//
// The overall sign is pinned by requiring the reduced bracket on the L1
// leaf to come out as {x1,x2} = -x2. The six Casimirs (the entries of A,
// plus f0 and f1 of the pencil) annihilate this table identically.
template <class S>
S sklyanin_entry_bracket(const Mat2<S>& A, const Mat2<S>& X, int i, int j, int k, int l) {
    return A(i, l) * X(k, j) - X(i, l) * A(k, j);
}

// The antisymmetric 4x4 table of entry brackets for a fixed structure
// matrix, evaluated at pencil points.
struct BracketTable {
    Mat2Q A;
    Rational eval(const Mat2Q& X, int i, int j, int k, int l) const {
        return sklyanin_entry_bracket(A, X, i, j, k, l);
    }
};

inline BracketTable sklyanin_entry_brackets(Mat2Q A) { return {std::move(A)}; }

// All brackets of entry functions f, g : Mat2 -> scalar at the point X,
// expanded over the coordinate table with exact dual-number partials.
template <class S, class F, class G>
S entry_bracket_of(const Mat2<S>& A, const Mat2<S>& X, F&& f, G&& g) {
    std::array<S, 4> df, dg;
    for (int idx = 0; idx < 4; ++idx) {
        Mat2<Dual<S>> lifted;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                lifted(i, j) = Dual<S>(X(i, j), S(i * 2 + j == idx ? 1 : 0));
        df[idx] = f(lifted).der;
        dg[idx] = g(lifted).der;
    }
    S acc(0);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (df[a] == S(0) || dg[b] == S(0)) continue;
            acc += df[a] * dg[b] *
                   sklyanin_entry_bracket(A, X, a / 2, a % 2, b / 2, b % 2);
        }
    return acc;
}

// ---------------------------------------------------------------------------
// Reduced brackets on products of two leaves, in coordinates
// (x1, x2, y1, y2). Cross brackets vanish (product Poisson structure); the
// self brackets depend on the leaf pair:
//
//   S-leaves    (L1 x L2):  {x1,x2} = -x2,  {y1,y2} = 1
//   R-leaves    (L1 x L1):  {x1,x2} = -x2,  {y1,y2} = -y2
//   Rbar-leaves (L2 x L2):  {x1,x2} = 1,    {y1,y2} = 1
//   T-leaves    (L2 x L1):  {x1,x2} = 1,    {y1,y2} = -y2
//
// The L1-side values are re-derivable from the ambient table above (the
// leaf is a graph over (x1,x2) there); the L2-side values survive from the
// eps -> 0 degeneration and are taken as given.

template <class S>
using Point4 = std::array<S, 4>;  // (x1, x2, y1, y2)

struct ReducedBracket {
    enum class Leaves { S, R, Rbar, T };
    Leaves tag = Leaves::S;

    // {x1,x2} and {y1,y2} at the point.
    Rational w_x(const Point4<Rational>& p) const {
        return (tag == Leaves::S || tag == Leaves::R) ? -p[1] : Rational(1);
    }
    Rational w_y(const Point4<Rational>& p) const {
        return (tag == Leaves::R || tag == Leaves::T) ? -p[3] : Rational(1);
    }

    static ReducedBracket for_map(EdgeMap::Kind k) {
        switch (k) {
            case EdgeMap::Kind::R: return {Leaves::R};
            case EdgeMap::Kind::Rbar: return {Leaves::Rbar};
            case EdgeMap::Kind::T: return {Leaves::T};
            default: return {Leaves::S};
        }
    }
};

inline Point4<DualScalar> lift_point(const Point4<Rational>& p, int dir) {
    Point4<DualScalar> out;
    for (int i = 0; i < 4; ++i) out[i] = DualScalar(p[i], Rational(i == dir ? 1 : 0));
    return out;
}

// {f, g} at p under the reduced structure, with exact dual partials.
// Rational functions can pole out; that surfaces as DomainError.
template <class F, class G>
Rational bracket_eval(F&& f, G&& g, const ReducedBracket& rb, const Point4<Rational>& p) {
    std::array<Rational, 4> df, dg;
    try {
        for (int dir = 0; dir < 4; ++dir) {
            Point4<DualScalar> lp = lift_point(p, dir);
            df[dir] = f(lp).der;
            dg[dir] = g(lp).der;
        }
    } catch (const DivisionByZero&) {
        throw DomainError("bracket evaluation at a pole, p=(" + p[0].str() + "," + p[1].str() +
                          "," + p[2].str() + "," + p[3].str() + ")");
    }
    return rb.w_x(p) * (df[0] * dg[1] - df[1] * dg[0]) +
           rb.w_y(p) * (df[2] * dg[3] - df[3] * dg[2]);
}

// ---------------------------------------------------------------------------
// Symplecticity: the map preserves coordinate brackets,
// {phi_a, phi_b}(p) = {xi_a, xi_b}(phi(p)) for all coordinate pairs. The
// target-side structure is the same leaf pair; the maps preserve leaves.

template <class MapF>
bool check_symplectic(const MapF& map, const ReducedBracket& rb, const Rational& alpha,
                      const Rational& beta, const Point4<Rational>& p) {
    // Image point (also validates the map is defined at p).
    PointPair<Rational> img =
        map(alpha, beta, LeafPoint<Rational>{p[0], p[1]}, LeafPoint<Rational>{p[2], p[3]});
    Point4<Rational> q{img.first.x1, img.first.x2, img.second.x1, img.second.x2};

    // Pullback partials: one dual sweep per direction gives all four
    // component derivatives.
    std::array<std::array<Rational, 4>, 4> J;  // J[dir][component]
    for (int dir = 0; dir < 4; ++dir) {
        Point4<DualScalar> lp = lift_point(p, dir);
        PointPair<DualScalar> out = map(DualScalar(alpha), DualScalar(beta),
                                        LeafPoint<DualScalar>{lp[0], lp[1]},
                                        LeafPoint<DualScalar>{lp[2], lp[3]});
        J[dir] = {out.first.x1.der, out.first.x2.der, out.second.x1.der, out.second.x2.der};
    }

    auto pb = [&](int a, int b) {
        return rb.w_x(p) * (J[0][a] * J[1][b] - J[1][a] * J[0][b]) +
               rb.w_y(p) * (J[2][a] * J[3][b] - J[3][a] * J[2][b]);
    };
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Rational want(0);
            if (a == 0 && b == 1) want = rb.w_x(q);
            if (a == 2 && b == 3) want = rb.w_y(q);
            if (pb(a, b) != want) return false;
        }
    return true;
}

// Adapter so EdgeMap tags fit the generic functor slot.
struct EdgeMapFn {
    EdgeMap m;
    template <class S>
    PointPair<S> operator()(const S& a, const S& b, const LeafPoint<S>& x,
                            const LeafPoint<S>& y) const {
        return m.apply(a, b, x, y);
    }
};

// ---------------------------------------------------------------------------
// First integrals. Each map's pair is exactly invariant and in involution
// under that map's reduced bracket.

struct Integral {
    std::string name;
    std::function<Rational(const Point4<Rational>&, const Rational&, const Rational&)> eval_q;
    std::function<DualScalar(const Point4<DualScalar>&, const DualScalar&, const DualScalar&)>
        eval_d;
};

template <class F>
Integral make_integral(std::string name, F f) {
    return Integral{
        std::move(name),
        [f](const Point4<Rational>& p, const Rational& a, const Rational& b) {
            return f(p, a, b);
        },
        [f](const Point4<DualScalar>& p, const DualScalar& a, const DualScalar& b) {
            return f(p, a, b);
        }};
}

// The two trace integrals of the 1-periodic monodromy for each map family.
inline std::vector<Integral> integral_catalog(EdgeMap::Kind kind) {
    switch (kind) {
        case EdgeMap::Kind::S:
            return {make_integral("J_S_1",
                                  [](const auto& p, const auto& a, const auto& b) {
                                      return p[1] * p[3] + p[0] * (p[2] * p[3] + b - 1) -
                                             (p[2] / p[1]) * (p[0] * p[0] - p[0] + a);
                                  }),
                    make_integral("J_S_2", [](const auto& p, const auto&, const auto&) {
                        return p[0] + p[2] * p[3];
                    })};
        case EdgeMap::Kind::Rbar:
            return {make_integral("J_Rbar_1",
                                  [](const auto& p, const auto& a, const auto& b) {
                                      return a * p[2] * p[3] + b * p[0] * p[1] +
                                             (p[1] * p[2] + 1) * (p[0] * p[3] + 1);
                                  }),
                    make_integral("J_Rbar_2", [](const auto& p, const auto&, const auto&) {
                        return p[0] * p[1] + p[2] * p[3];
                    })};
        case EdgeMap::Kind::T:
            return {make_integral("J_T_1",
                                  [](const auto& p, const auto& a, const auto& b) {
                                      return p[1] * p[3] + p[2] * (p[0] * p[1] + a - 1) -
                                             (p[0] / p[3]) * (p[2] * p[2] - p[2] + b);
                                  }),
                    make_integral("J_T_2", [](const auto& p, const auto&, const auto&) {
                        return p[2] + p[0] * p[1];
                    })};
        default:
            return {};  // the L1xL1 map is an involution; no integral pair carried
    }
}

}  // namespace yb

#endif
