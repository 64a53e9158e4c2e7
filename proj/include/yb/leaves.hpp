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

#ifndef YB_LEAVES_HPP
#define YB_LEAVES_HPP

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

#include "yb/refactor.hpp"

namespace yb {

// Symplectic-leaf Lax families and the four explicit parametric maps R,
// Rbar, S, T between them, plus the generic refactorization-backed map.
//
// A leaf is the level set {f0 = alpha0, f1 = alpha1} of the two non-constant
// Casimirs of the Sklyanin bracket, coordinatized by the two remaining
// matrix entries (x1, x2). The concrete families all sit at alpha1 = 1:
//
//   L1 (structure matrix I):
//       X = [[x1, x2], [-(alpha + (x1-1)x1)/x2, 1-x1]],  needs x2 != 0
//   L2 (structure matrix diag(1,0), the eps -> 0 limit of Meps):
//       X = [[x1 x2 + alpha, x1], [x2, 1]]
//   Meps (structure matrix diag(1,eps), float path):
//       X = [[(1-sqrt(1-4 eps (alpha+x1 x2)))/(2 eps), x1],
//            [x2, (sqrt(1-4 eps (alpha+x1 x2))+1)/2]]
//
// Coordinate extraction from a family matrix follows the same
// identifications: L1 reads (x1,x2) off entries (0,0),(0,1); L2/Meps read
// entries (0,1),(1,0).

template <class S>
struct LeafPoint {
    S x1, x2;

    friend bool operator==(const LeafPoint& a, const LeafPoint& b) {
        return a.x1 == b.x1 && a.x2 == b.x2;
    }
    friend bool operator!=(const LeafPoint& a, const LeafPoint& b) { return !(a == b); }
};

template <class S>
using PointPair = std::pair<LeafPoint<S>, LeafPoint<S>>;

template <class S>
std::string point_str(const LeafPoint<S>& p) {
    return "(" + scalar_str(p.x1) + "," + scalar_str(p.x2) + ")";
}

// Leaf level-set values (alpha0, alpha1). All concrete families pin
// alpha1 = 1; the field is carried for the generic level-set story.
struct LeafParams {
    Rational alpha0;
    Rational alpha1{1};
};

enum class Family { L1, L2, Meps };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::L1: return "L1";
        case Family::L2: return "L2";
        default: return "Meps";
    }
}

// Structure matrix (the pencil's zeta coefficient). Diagonal for every
// family, so any two commute. L2's is singular: it is excluded from the
// refactorization hypotheses and reached only as the eps -> 0 limit.
template <class S>
Mat2<S> structure_matrix(Family f, const S& eps = S(0)) {
    switch (f) {
        case Family::L1: return Mat2<S>::identity();
        case Family::L2: return Mat2<S>::diagonal(S(1), S(0));
        default: return Mat2<S>::diagonal(S(1), eps);
    }
}

template <class S>
BinomialMatrix<S> leaf_L1(const LeafPoint<S>& p, const S& alpha) {
    if (vanishes(p.x2))
        throw DomainError("L1 leaf needs x2 != 0, got " + point_str(p));
    Mat2<S> X(p.x1, p.x2, -(alpha + (p.x1 - S(1)) * p.x1) / p.x2, S(1) - p.x1);
    return {std::move(X), Mat2<S>::identity()};
}

template <class S>
BinomialMatrix<S> leaf_L2(const LeafPoint<S>& p, const S& alpha) {
    Mat2<S> X(p.x1 * p.x2 + alpha, p.x1, p.x2, S(1));
    return {std::move(X), Mat2<S>::diagonal(S(1), S(0))};
}

// Float-path family with the square-root entries; the sign choice is the
// branch that stays bounded as eps -> 0.
inline BinomialMatrix<double> leaf_Meps(const LeafPoint<double>& p, double alpha, double eps) {
    if (eps == 0.0) throw ZeroEpsilon();
    double rad = 1.0 - 4.0 * eps * (alpha + p.x1 * p.x2);
    if (rad < 0.0)
        throw NegativeRadicand("radicand " + std::to_string(rad) + " at " + point_str(p));
    double s = std::sqrt(rad);
    Mat2<double> X((1.0 - s) / (2.0 * eps), p.x1, p.x2, 0.5 * s + 0.5);
    return {std::move(X), Mat2<double>::diagonal(1.0, eps)};
}

// Exact variant for points where the radicand is a perfect square; lets the
// randomized suites exercise genuinely distinct invertible structure
// matrices without leaving the rational path.
inline BinomialMatrix<Rational> leaf_Meps_exact(const LeafPoint<Rational>& p,
                                                const Rational& alpha, const Rational& eps) {
    if (eps.is_zero()) throw ZeroEpsilon();
    Rational rad = Rational(1) - Rational(4) * eps * (alpha + p.x1 * p.x2);
    Rational s = sqrt_exact(rad);
    Mat2<Rational> X((Rational(1) - s) / (Rational(2) * eps), p.x1, p.x2,
                     (s + Rational(1)) / Rational(2));
    return {std::move(X), Mat2<Rational>::diagonal(Rational(1), eps)};
}

// ---------------------------------------------------------------------------
// The four closed-form maps. Transcribed verbatim from the closed forms the
// generic refactorization produces on these leaves; the cross-validation
// against generic_edge_map in the suites is what guards the transcription.
// Each satisfies its pencil identity exactly:
//
//   R:    L1(u;a) L1(v;b) = L1(y;b) L1(x;a)      (Yang-Baxter map)
//   Rbar: L2(u;a) L2(v;b) = L2(y;b) L2(x;a)      (degenerate Yang-Baxter map)
//   S:    L1(u;a) L2(v;b) = L2(y;b) L1(x;a)
//   T:    L2(u;a) L1(v;b) = L1(y;b) L2(x;a)

template <class S>
PointPair<S> map_R(const S& a, const S& b, const LeafPoint<S>& x, const LeafPoint<S>& y) {
    if (vanishes(x.x2) || vanishes(y.x2))
        throw DomainError("map R needs x2,y2 != 0 at x=" + point_str(x) + " y=" + point_str(y));
    S d = x.x2 * y.x1 - x.x1 * y.x2;  // the recurring cross term
    S n = a * y.x2 * y.x2 + b * x.x2 * x.x2 + (a + b - S(1)) * y.x2 * x.x2 +
          d * (d + y.x2 - x.x2);
    if (vanishes(n))
        throw DomainError("map R denominator vanished at x=" + point_str(x) +
                          " y=" + point_str(y) + " a=" + scalar_str(a) + " b=" + scalar_str(b));
    S shift = (x.x2 * y.x2 / n) * (a - b) * (x.x1 + y.x1 - S(1));
    S core = (x.x2 * (y.x1 - S(1)) - x.x1 * y.x2) * (d + y.x2);
    LeafPoint<S> u{y.x1 + shift, (y.x2 / n) * (a * (x.x2 + y.x2) * (x.x2 + y.x2) + core)};
    LeafPoint<S> v{x.x1 - shift, (x.x2 / n) * (b * (x.x2 + y.x2) * (x.x2 + y.x2) + core)};
    return {std::move(u), std::move(v)};
}

template <class S>
PointPair<S> map_Rbar(const S& a, const S& b, const LeafPoint<S>& x, const LeafPoint<S>& y) {
    S w = S(1) + x.x1 * y.x2;
    if (vanishes(w))
        throw DomainError("map Rbar denominator vanished at x=" + point_str(x) +
                          " y=" + point_str(y));
    LeafPoint<S> u{y.x1 - (a - b) * x.x1 / w, y.x2};
    LeafPoint<S> v{x.x1, x.x2 + (a - b) * y.x2 / w};
    return {std::move(u), std::move(v)};
}

template <class S>
PointPair<S> map_S(const S& a, const S& b, const LeafPoint<S>& x, const LeafPoint<S>& y) {
    if (vanishes(x.x2))
        throw DomainError("map S needs x2 != 0 at x=" + point_str(x));
    S den = x.x2 * y.x2 - x.x1 - b + S(1);
    if (vanishes(den))
        throw DomainError("map S denominator vanished at x=" + point_str(x) +
                          " y=" + point_str(y) + " a=" + scalar_str(a) + " b=" + scalar_str(b));
    S u1 = y.x2 * y.x1 - x.x1 * y.x1 / x.x2 +
           (a + b * (x.x2 * y.x2 - x.x1)) * (x.x2 + y.x1) / (x.x2 * den);
    S u2 = -(a * (x.x2 + y.x1) * (x.x2 + y.x1) +
             (b * x.x2 + y.x1 * y.x2 * x.x2 - x.x1 * y.x1 + y.x1) *
                 (x.x2 * (b + y.x1 * y.x2 - S(1)) - x.x1 * y.x1)) /
           (x.x2 * den);
    LeafPoint<S> u{std::move(u1), std::move(u2)};
    LeafPoint<S> v{x.x2 + y.x1,
                   x.x1 / x.x2 - (a + b * (x.x2 * y.x2 - x.x1)) / (x.x2 * den)};
    return {std::move(u), std::move(v)};
}

template <class S>
PointPair<S> map_T(const S& a, const S& b, const LeafPoint<S>& x, const LeafPoint<S>& y) {
    if (vanishes(y.x2))
        throw DomainError("map T needs y2 != 0 at y=" + point_str(y));
    S den = b * x.x1 + (y.x1 - S(1)) * y.x1 * x.x1 + (a + y.x1 - S(1)) * y.x2;
    if (vanishes(den))
        throw DomainError("map T denominator vanished at x=" + point_str(x) +
                          " y=" + point_str(y) + " a=" + scalar_str(a) + " b=" + scalar_str(b));
    S frac = (a * x.x1 - y.x1 * x.x1 - y.x2) * y.x2 / den;
    LeafPoint<S> u{frac, x.x2 - (b + (y.x1 - S(1)) * y.x1) / y.x2};
    S v1 = (b * (a * x.x1 - y.x2) + (y.x1 * x.x1 - x.x1 + y.x2) * (a * y.x1 + x.x2 * y.x2) +
            x.x1 * x.x2 * (x.x1 * (y.x1 * y.x1 - y.x1 + b) + y.x1 * y.x2)) /
           den;
    // v2 = x1 - u1 by construction; kept in that form deliberately.
    LeafPoint<S> v{std::move(v1), x.x1 - frac};
    return {std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// Generic leaf-to-leaf map through the refactorization engine.

template <class S>
BinomialMatrix<S> make_leaf_matrix(Family f, const LeafPoint<S>& p, const S& alpha,
                                   const S& eps = S(0)) {
    switch (f) {
        case Family::L1: return leaf_L1(p, alpha);
        case Family::L2: return leaf_L2(p, alpha);
        default:
            if constexpr (std::is_same_v<S, double>) {
                return leaf_Meps(p, alpha, eps);
            } else if constexpr (std::is_same_v<S, Rational>) {
                return leaf_Meps_exact(p, alpha, eps);
            } else {
                throw DomainError("Meps family is defined on the float and exact-square paths only");
            }
    }
}

template <class S>
LeafPoint<S> extract_leaf_point(Family f, const Mat2<S>& m) {
    if (f == Family::L1) return {m(0, 0), m(0, 1)};
    return {m(0, 1), m(1, 0)};
}

// Reconstructs the family matrix from the extracted coordinates and the
// prescribed leaf values and demands exact agreement entry-wise. Spectrum
// preservation guarantees this; a mismatch means an internal bug, never a
// user error.
template <class S>
void check_leaf_residual(Family f, const Mat2<S>& m, const LeafPoint<S>& p, const S& alpha,
                         const S& eps) {
    CharPoly<S> cp = char_poly(m, structure_matrix<S>(f, eps));
    if (cp.f0 != alpha || cp.f1 != S(1))
        throw LeafExtractionMismatch("off-leaf refactorization output " + mat_str(m));
    if (f == Family::L1) {
        BinomialMatrix<S> rebuilt = leaf_L1(p, alpha);
        if (rebuilt.x_part != m)
            throw LeafExtractionMismatch("L1 residual entries disagree at " + mat_str(m));
    } else if (f == Family::Meps) {
        // Entries (0,0) and (1,1) are pinned by the two leaf constraints;
        // check the branch relation sqrt(rad) = 1 - 2 eps m00 explicitly.
        S s = S(1) - S(2) * eps * m(0, 0);
        if (s * s != S(1) - S(4) * eps * (alpha + p.x1 * p.x2))
            throw LeafExtractionMismatch("Meps branch relation violated at " + mat_str(m));
    }
}

// The refactorization-backed map between two leaves with invertible
// structure matrices (so fam L2 is excluded; its maps are the closed forms
// above, derived as eps -> 0 limits and cross-validated on the float path).
template <class S>
PointPair<S> generic_edge_map(Family fam_i, Family fam_j, const S& alpha, const S& beta,
                              const LeafPoint<S>& x, const LeafPoint<S>& y,
                              const S& eps_i = S(0), const S& eps_j = S(0)) {
    if (fam_i == Family::L2 || fam_j == Family::L2)
        throw DomainError("generic edge map needs invertible structure matrices; "
                          "L2 is reachable only as the eps -> 0 limit");
    BinomialMatrix<S> lx = make_leaf_matrix(fam_i, x, alpha, eps_i);
    BinomialMatrix<S> ly = make_leaf_matrix(fam_j, y, beta, eps_j);
    auto in = RefactorInput<S>::checked(lx.x_part, ly.x_part, lx.a_part, ly.a_part);
    auto [U, V] = refactor_pair(in);
    LeafPoint<S> u = extract_leaf_point(fam_i, U);
    LeafPoint<S> v = extract_leaf_point(fam_j, V);
    if constexpr (!std::is_same_v<S, double>) {
        check_leaf_residual(fam_i, U, u, alpha, eps_i);
        check_leaf_residual(fam_j, V, v, beta, eps_j);
    }
    return {std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// Map selection by tag, the form the lattice and the CLI consume.

struct EdgeMap {
    enum class Kind { R, Rbar, S, T, Generic };

    Kind kind = Kind::S;
    Family fam_i = Family::L1;  // only meaningful for Generic
    Family fam_j = Family::L1;

    static EdgeMap parse(const std::string& tag);
    std::string str() const;

    // Lax families carried by the x-edges and y-edges of a lattice evolved
    // with this map.
    Family x_family() const {
        switch (kind) {
            case Kind::R: return Family::L1;
            case Kind::Rbar: return Family::L2;
            case Kind::S: return Family::L1;
            case Kind::T: return Family::L2;
            default: return fam_i;
        }
    }
    Family y_family() const {
        switch (kind) {
            case Kind::R: return Family::L1;
            case Kind::Rbar: return Family::L2;
            case Kind::S: return Family::L2;
            case Kind::T: return Family::L1;
            default: return fam_j;
        }
    }

    template <class S>
    PointPair<S> apply(const S& alpha, const S& beta, const LeafPoint<S>& x,
                       const LeafPoint<S>& y) const {
        switch (kind) {
            case Kind::R: return map_R(alpha, beta, x, y);
            case Kind::Rbar: return map_Rbar(alpha, beta, x, y);
            case Kind::S: return map_S(alpha, beta, x, y);
            case Kind::T: return map_T(alpha, beta, x, y);
            default: return generic_edge_map(fam_i, fam_j, alpha, beta, x, y);
        }
    }
};

inline Family parse_family(const std::string& s) {
    if (s == "L1") return Family::L1;
    if (s == "L2") return Family::L2;
    if (s == "Meps") return Family::Meps;
    throw ConfigError("unknown Lax family \"" + s + "\"");
}

inline EdgeMap EdgeMap::parse(const std::string& tag) {
    if (tag == "R") return {Kind::R};
    if (tag == "Rbar") return {Kind::Rbar};
    if (tag == "S") return {Kind::S};
    if (tag == "T") return {Kind::T};
    if (tag.rfind("generic:", 0) == 0) {
        std::string rest = tag.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ConfigError("generic map tag needs two families, e.g. generic:L1:L1");
        EdgeMap m{Kind::Generic, parse_family(rest.substr(0, colon)),
                  parse_family(rest.substr(colon + 1))};
        if (m.fam_i == Family::L2 || m.fam_j == Family::L2 || m.fam_i == Family::Meps ||
            m.fam_j == Family::Meps)
            throw ConfigError("exact lattice evolution supports generic:L1:L1 only; "
                              "Meps runs on the float path, L2 as closed forms");
        return m;
    }
    throw ConfigError("unknown edge map tag \"" + tag + "\"");
}

inline std::string EdgeMap::str() const {
    switch (kind) {
        case Kind::R: return "R";
        case Kind::Rbar: return "Rbar";
        case Kind::S: return "S";
        case Kind::T: return "T";
        default:
            return std::string("generic:") + family_name(fam_i) + ":" + family_name(fam_j);
    }
}

}  // namespace yb

#endif
