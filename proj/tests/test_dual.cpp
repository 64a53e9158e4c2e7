#include <doctest.h>

#include "yb/dual.hpp"
#include "yb/rng.hpp"

using yb::DualScalar;
using yb::Rational;

TEST_CASE("multiplication carries the product rule") {
    DualScalar x = yb::dual_lift(Rational(3), Rational(1));
    DualScalar sq = x * x;
    CHECK(sq.val == Rational(9));
    CHECK(sq.der == Rational(6));
}

TEST_CASE("constant seed stays constant") {
    DualScalar x = yb::dual_lift(Rational(5, 7), Rational(0));
    DualScalar y = (x * x + DualScalar(2)) / (x - DualScalar(4));
    CHECK(y.der == Rational(0));
}

TEST_CASE("quotient rule: d/dx 1/(1+x) at 1") {
    DualScalar x = yb::dual_lift(Rational(1), Rational(1));
    DualScalar y = DualScalar(1) / (DualScalar(1) + x);
    CHECK(y.val == Rational(1, 2));
    CHECK(y.der == Rational(-1, 4));
}

TEST_CASE("division needs a nonzero value part") {
    DualScalar zero_val(Rational(0), Rational(3));
    CHECK_THROWS_AS(DualScalar(1) / zero_val, yb::DivisionByZero);
}

TEST_CASE("derivative agrees with the symbolic derivative on a rational function") {
    // f(x) = (x^2 - 3) / (2x + 1); f'(x) = (2x(2x+1) - 2(x^2-3)) / (2x+1)^2.
    yb::Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        Rational x0 = rng.rational(20, 10);
        if ((Rational(2) * x0 + Rational(1)).is_zero()) continue;
        DualScalar x = yb::dual_lift(x0, Rational(1));
        DualScalar f = (x * x - DualScalar(3)) / (DualScalar(2) * x + DualScalar(1));
        Rational denom = Rational(2) * x0 + Rational(1);
        Rational expect =
            (Rational(2) * x0 * denom - Rational(2) * (x0 * x0 - Rational(3))) / (denom * denom);
        CHECK(f.der == expect);
    }
}
