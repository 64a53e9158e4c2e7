#include <doctest.h>

#include "yb/mat2.hpp"
#include "yb/rng.hpp"

using yb::Mat2Q;
using yb::Rational;

namespace {

Mat2Q random_mat(yb::Rng& rng, long nb = 6, long db = 4) {
    return {rng.rational(nb, db), rng.rational(nb, db), rng.rational(nb, db),
            rng.rational(nb, db)};
}

Mat2Q random_invertible(yb::Rng& rng) {
    for (;;) {
        Mat2Q m = random_mat(rng);
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("determinant and inverse basics") {
    CHECK(Mat2Q(1, 2, 3, 4).det() == Rational(-2));
    Mat2Q d = Mat2Q::diagonal(Rational(1), Rational(2));
    CHECK(d.inverse() == Mat2Q::diagonal(Rational(1), Rational(1, 2)));
    CHECK_THROWS_AS(Mat2Q(1, 2, 2, 4).inverse(), yb::SingularMatrix);
    CHECK(Mat2Q::identity().commutes_with(Mat2Q(5, -3, 7, 2)));
}

TEST_CASE("multiplicativity of det, exact inverses") {
    yb::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        Mat2Q a = random_mat(rng), b = random_mat(rng);
        CHECK((a * b).det() == a.det() * b.det());
        if (!a.det().is_zero()) CHECK(a * a.inverse() == Mat2Q::identity());
    }
}

TEST_CASE("pencil characteristic coefficients") {
    // det(X - z A) = f2 z^2 - f1 z + f0.
    Mat2Q X(1, 2, 3, 4);
    auto cp = yb::char_poly(X, Mat2Q::identity());
    CHECK(cp.f2 == Rational(1));
    CHECK(cp.f1 == Rational(5));
    CHECK(cp.f0 == Rational(-2));

    // Degenerate second structure entry: f1 collapses to eps*x11 + x22.
    Rational eps(1, 7);
    auto cp2 = yb::char_poly(X, Mat2Q::diagonal(Rational(1), eps));
    CHECK(cp2.f1 == eps * X(0, 0) + X(1, 1));

    auto cp3 = yb::char_poly(Mat2Q::zero(), Mat2Q::identity());
    CHECK(cp3.f2 == Rational(1));
    CHECK(cp3.f1 == Rational(0));
    CHECK(cp3.f0 == Rational(0));
}

TEST_CASE("char poly agrees with the determinant at sample points") {
    yb::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        Mat2Q X = random_mat(rng), A = random_mat(rng);
        auto cp = yb::char_poly(X, A);
        for (long z : {-2, 1, 3}) {
            Rational zz(z);
            CHECK((X - zz * A).det() == cp.f2 * zz * zz - cp.f1 * zz + cp.f0);
        }
    }
}

TEST_CASE("char poly is a conjugation invariant") {
    yb::Rng rng(19);
    for (int i = 0; i < 50; ++i) {
        Mat2Q X = random_mat(rng), A = random_mat(rng);
        Mat2Q P = random_invertible(rng);
        Mat2Q Pi = P.inverse();
        CHECK(yb::char_poly(P * X * Pi, P * A * Pi) == yb::char_poly(X, A));
    }
}

TEST_CASE("Cayley-Hamilton residual vanishes") {
    CHECK(yb::cayley_hamilton_residual(Mat2Q(1, 2, 3, 4), Mat2Q::identity()).is_zero());
    CHECK(yb::cayley_hamilton_residual(Mat2Q::identity(), Mat2Q::identity()).is_zero());
    yb::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Mat2Q X = random_mat(rng);
        Mat2Q A = random_invertible(rng);
        CHECK(yb::cayley_hamilton_residual(X, A).is_zero());
    }
    CHECK(yb::cayley_hamilton_residual(random_mat(rng), Mat2Q::diagonal(Rational(1), Rational(3)))
              .is_zero());
    CHECK_THROWS_AS(yb::cayley_hamilton_residual(Mat2Q(1, 2, 3, 4), Mat2Q(1, 2, 2, 4)),
                    yb::SingularMatrix);
}
