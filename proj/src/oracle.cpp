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

#include "yb/oracle.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "yb/rng.hpp"

namespace yb {

namespace {

using Vec4 = std::array<double, 4>;
using Vec6 = std::array<double, 6>;

Mat2<double> from_vec(const Vec4& u) { return {u[0], u[1], u[2], u[3]}; }

struct Problem {
    Mat2<double> X, Y, A, B, Ainv, YAplusBX, YX;
    double f1x, f0x;

    Vec6 residual(const Vec4& uv) const {
        Mat2<double> U = from_vec(uv);
        Mat2<double> V = Ainv * (YAplusBX - U * B);
        Mat2<double> P = U * V - YX;
        CharPoly<double> cu = char_poly(U, A);
        return {P(0, 0), P(0, 1), P(1, 0), P(1, 1), cu.f1 - f1x, cu.f0 - f0x};
    }
};

double inf_norm(const Vec6& r) {
    double m = 0;
    for (double v : r) m = std::max(m, std::fabs(v));
    return m;
}

// Solve the 4x4 system M s = b in place, partial pivoting. Returns false on
// a (near-)singular pivot.
bool solve4(std::array<std::array<double, 4>, 4>& M, Vec4& b) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
        if (std::fabs(M[piv][col]) < 1e-14) return false;
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            double f = M[r][col] / M[col][col];
            for (int c = col; c < 4; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int i = 0; i < 4; ++i) b[i] /= M[i][i];
    return true;
}

// Levenberg-Marquardt on the overdetermined 6x4 system, numeric Jacobian.
bool lm_solve(const Problem& pb, Vec4& u) {
    double lambda = 1e-3;
    Vec6 r = pb.residual(u);
    double cost = inf_norm(r);
    for (int iter = 0; iter < 200; ++iter) {
        if (cost < 1e-12) return true;
        // Central-difference Jacobian.
        std::array<Vec6, 4> J;
        for (int j = 0; j < 4; ++j) {
            double h = 1e-7 * std::max(1.0, std::fabs(u[j]));
            Vec4 up = u, um = u;
            up[j] += h;
            um[j] -= h;
            Vec6 rp = pb.residual(up), rm = pb.residual(um);
            for (int i = 0; i < 6; ++i) J[j][i] = (rp[i] - rm[i]) / (2 * h);
        }
        // Normal equations with damping.
        std::array<std::array<double, 4>, 4> M{};
        Vec4 g{};
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b)
                for (int i = 0; i < 6; ++i) M[a][b] += J[a][i] * J[b][i];
            for (int i = 0; i < 6; ++i) g[a] -= J[a][i] * r[i];
        }
        for (int a = 0; a < 4; ++a) M[a][a] *= 1.0 + lambda;
        Vec4 step = g;
        if (!solve4(M, step)) {
            lambda *= 10;
            if (lambda > 1e12) return false;
            continue;
        }
        Vec4 cand{u[0] + step[0], u[1] + step[1], u[2] + step[2], u[3] + step[3]};
        Vec6 rc = pb.residual(cand);
        double cc = inf_norm(rc);
        if (cc < cost) {
            u = cand;
            r = rc;
            cost = cc;
            lambda = std::max(lambda * 0.3, 1e-12);
        } else {
            lambda *= 10;
            if (lambda > 1e12) return cost < 1e-11;
        }
    }
    return cost < 1e-11;
}

}  // namespace

OracleResult refactor_oracle(const Mat2<double>& X, const Mat2<double>& Y,
                             const Mat2<double>& A, const Mat2<double>& B, uint64_t seed,
                             int starts) {
    Problem pb{X, Y, A, B, A.inverse(), Y * A + B * X, Y * X, 0, 0};
    CharPoly<double> cx = char_poly(X, A);
    pb.f1x = cx.f1;
    pb.f0x = cx.f0;

    double scale = 1.0;
    for (const Mat2<double>* m : {&X, &Y, &A, &B})
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) scale = std::max(scale, std::fabs((*m)(i, j)));
    double radius = 4.0 * scale;

    Rng rng(seed);
    std::vector<Vec4> roots;
    OracleResult out;
    for (int s = 0; s < starts; ++s) {
        Vec4 u;
        for (double& v : u) v = rng.double_in(-radius, radius);
        if (!lm_solve(pb, u)) continue;
        if (inf_norm(pb.residual(u)) > 1e-10) continue;
        ++out.converged_starts;
        bool fresh = true;
        for (const Vec4& r : roots) {
            double d = 0, n = 1;
            for (int i = 0; i < 4; ++i) {
                d = std::max(d, std::fabs(r[i] - u[i]));
                n = std::max(n, std::fabs(r[i]));
            }
            if (d / n < 1e-6) {
                fresh = false;
                break;
            }
        }
        if (fresh) roots.push_back(u);
    }
    if (roots.empty())
        throw OracleInconclusive("no residual-zero root in " + std::to_string(starts) +
                                 " starts (seed " + std::to_string(seed) + ")");
    out.distinct_roots = static_cast<int>(roots.size());
    out.U = from_vec(roots.front());
    out.V = pb.Ainv * (pb.YAplusBX - out.U * B);
    out.residual = inf_norm(pb.residual(roots.front()));
    return out;
}

}  // namespace yb
