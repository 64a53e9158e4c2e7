#include <doctest.h>

#include <cmath>

#include "yb/oracle.hpp"
#include "yb/refactor.hpp"
#include "yb/rng.hpp"

using yb::Mat2Q;
using yb::Rational;

namespace {

template <class T>
using Mat2 = yb::Mat2<T>;

Mat2<double> to_double(const Mat2Q& m) {
    return {m(0, 0).to_double(), m(0, 1).to_double(), m(1, 0).to_double(), m(1, 1).to_double()};
}

double rel_diff(const Mat2<double>& a, const Mat2<double>& b) {
    double d = 0, n = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            d = std::max(d, std::fabs(a(i, j) - b(i, j)));
            n = std::max(n, std::fabs(a(i, j)));
        }
    return d / n;
}

}  // namespace

TEST_CASE("oracle finds the worked-example root and nothing else") {
    Mat2<double> X{1, 0, 0, 2}, Y{0, 1, 1, 0}, I{1, 0, 0, 1};
    auto res = yb::refactor_oracle(X, Y, I, I, 99);
    CHECK(res.distinct_roots == 1);
    CHECK(rel_diff(res.U, Mat2<double>{0, -2, 1, 3}) < 1e-8);
    CHECK(rel_diff(res.V, Mat2<double>{1, 3, 0, -1}) < 1e-8);
}

TEST_CASE("equal inputs give the fixed point") {
    Mat2<double> X{0.5, 1.25, -2, 3}, A{2, 0, 0, 1};
    auto res = yb::refactor_oracle(X, X, A, A, 5);
    CHECK(res.distinct_roots == 1);
    CHECK(rel_diff(res.U, X) < 1e-8);
}

TEST_CASE("oracle agrees with the closed form on random rational inputs") {
    yb::Rng rng(73);
    int done = 0;
    while (done < 20) {
        Mat2Q A(rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2));
        if (A.det().is_zero()) continue;
        Mat2Q B = rng.rational(3, 2) * Mat2Q::identity() + rng.nonzero_rational(3, 2) * A;
        if (B.det().is_zero()) continue;
        Mat2Q X(rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2));
        Mat2Q Y(rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2));
        auto in = yb::RefactorInput<Rational>::checked(X, Y, A, B);
        auto [pi1, pi2] = pi_matrices(in);
        if (pi1.det().is_zero()) continue;
        // Keep the float problem well-conditioned at desk scale.
        if (pi1.det().abs() < Rational(1, 100)) continue;
        auto [U, V] = refactor_pair(in);
        auto res = yb::refactor_oracle(to_double(X), to_double(Y), to_double(A), to_double(B),
                                       1000 + done);
        CHECK(res.distinct_roots == 1);
        CHECK(rel_diff(res.U, to_double(U)) < 1e-8);
        CHECK(rel_diff(res.V, to_double(V)) < 1e-8);
        ++done;
    }
}
