#include <doctest.h>

#include "yb/rng.hpp"
#include "yb/verify.hpp"

using yb::Family;
using yb::Rational;
using yb::TriplePoint;
using LP = yb::LeafPoint<Rational>;

namespace {

TriplePoint rand_triple(yb::Rng& rng) {
    auto pt = [&rng]() -> LP { return {rng.rational(8, 8), rng.nonzero_rational(8, 8)}; };
    return {pt(), pt(), pt(), rng.rational(4, 4), rng.rational(4, 4), rng.rational(4, 4)};
}

}  // namespace

TEST_CASE("slot arithmetic pinned with a tagged swap") {
    // Distinct markers in every slot; the swap map makes slot placement
    // visible.
    yb::MapFn swap = [](const Rational&, const Rational&, const LP& x, const LP& y) {
        return yb::PointPair<Rational>{y, x};
    };
    yb::Triple pts{LP{1, 10}, LP{2, 20}, LP{3, 30}};
    std::array<Rational, 3> par{Rational(0), Rational(0), Rational(0)};

    yb::Triple r12 = yb::apply_on_slots(swap, 0, 1, pts, par);
    CHECK(r12 == yb::Triple{LP{2, 20}, LP{1, 10}, LP{3, 30}});
    yb::Triple r13 = yb::apply_on_slots(swap, 0, 2, pts, par);
    CHECK(r13 == yb::Triple{LP{3, 30}, LP{2, 20}, LP{1, 10}});
    yb::Triple r23 = yb::apply_on_slots(swap, 1, 2, pts, par);
    CHECK(r23 == yb::Triple{LP{1, 10}, LP{3, 30}, LP{2, 20}});

    // Parameters ride with the slots: a map that returns its parameters
    // reveals which pair it received.
    yb::MapFn par_probe = [](const Rational& a, const Rational& b, const LP&, const LP&) {
        return yb::PointPair<Rational>{LP{a, a}, LP{b, b}};
    };
    std::array<Rational, 3> abc{Rational(7), Rational(8), Rational(9)};
    yb::Triple probed = yb::apply_on_slots(par_probe, 0, 2, pts, abc);
    CHECK(probed[0] == LP{7, 7});
    CHECK(probed[2] == LP{9, 9});

    // Three swaps in either braid order agree: the transposition braid.
    yb::EntwiningSystem braid{swap, swap, swap, Family::L1, Family::L1, Family::L1, "swap"};
    TriplePoint tp{LP{1, 10}, LP{2, 20}, LP{3, 30}, Rational(1), Rational(2), Rational(3)};
    CHECK(yb::check_entwining(braid, tp));

    // And trivially with three identity maps.
    yb::MapFn ident = [](const Rational&, const Rational&, const LP& x, const LP& y) {
        return yb::PointPair<Rational>{x, y};
    };
    yb::EntwiningSystem trivial{ident, ident, ident, Family::L1, Family::L1, Family::L1, "id"};
    CHECK(yb::check_entwining(trivial, tp));
}

TEST_CASE("pencil identities via check_lax_pair, including a perturbed failure") {
    yb::Rng rng(181);
    int done = 0;
    while (done < 20) {
        Rational a = rng.rational(4, 4), b = rng.rational(4, 4);
        LP x = {rng.rational(8, 8), rng.nonzero_rational(8, 8)};
        LP y = {rng.rational(8, 8), rng.nonzero_rational(8, 8)};
        try {
            bool s_ok = yb::check_lax_pair(Family::L1, Family::L2,
                                           yb::map_fn(yb::EdgeMap{yb::EdgeMap::Kind::S}), a, b,
                                           x, y);
            bool t_ok = yb::check_lax_pair(Family::L2, Family::L1,
                                           yb::map_fn(yb::EdgeMap{yb::EdgeMap::Kind::T}), a, b,
                                           x, y);
            yb::MapFn broken = [](const Rational& aa, const Rational& bb, const LP& xx,
                                  const LP& yy) {
                auto uv = yb::map_S(aa, bb, xx, yy);
                uv.first.x1 += Rational(1);
                return uv;
            };
            bool broken_ok = yb::check_lax_pair(Family::L1, Family::L2, broken, a, b, x, y);
            CHECK(s_ok);
            CHECK(t_ok);
            CHECK_FALSE(broken_ok);
            ++done;
        } catch (const yb::DomainError&) {
            continue;
        }
    }
}

TEST_CASE("entwining systems hold at random triples") {
    yb::Rng rng(191);
    for (const auto& sys : {yb::system_srt(), yb::system_ssrbar()}) {
        int done = 0;
        while (done < 40) {
            TriplePoint tp = rand_triple(rng);
            try {
                bool chains = yb::check_entwining(sys, tp);
                bool transport = yb::check_triple_product_transport(sys, tp);
                CHECK(chains);
                CHECK(transport);
                ++done;
            } catch (const yb::DomainError&) {
                continue;
            }
        }
    }
}

TEST_CASE("Yang-Baxter property of the two one-family maps") {
    yb::Rng rng(193);
    int done = 0;
    while (done < 40) {
        TriplePoint tp = rand_triple(rng);
        try {
            bool r_ok = yb::check_yb(yb::map_fn(yb::EdgeMap{yb::EdgeMap::Kind::R}), Family::L1, tp);
            bool rbar_ok =
                yb::check_yb(yb::map_fn(yb::EdgeMap{yb::EdgeMap::Kind::Rbar}), Family::L2, tp);
            CHECK(r_ok);
            CHECK(rbar_ok);
            ++done;
        } catch (const yb::DomainError&) {
            continue;
        }
    }
    // Equal parameters: every factor is a swap; the relation is the braid
    // identity on transpositions.
    int done2 = 0;
    while (done2 < 10) {
        TriplePoint tp = rand_triple(rng);
        tp.beta = tp.alpha;
        tp.gamma = tp.alpha;
        try {
            bool braid_ok =
                yb::check_yb(yb::map_fn(yb::EdgeMap{yb::EdgeMap::Kind::R}), Family::L1, tp);
            CHECK(braid_ok);
            ++done2;
        } catch (const yb::DomainError&) {
            continue;
        }
    }
}

TEST_CASE("triple factorization uniqueness on leaves") {
    yb::Rng rng(197);
    int done = 0;
    while (done < 50) {
        TriplePoint tp = rand_triple(rng);
        try {
            bool ok = yb::check_triple_uniqueness(Family::L1, Family::L1, Family::L1, tp);
            CHECK(ok);
            ++done;
        } catch (const yb::Error&) {
            continue;
        }
    }
    // Mixed structure matrices through the exact square-root family.
    Rational eps(1, 5);
    int done2 = 0;
    while (done2 < 10) {
        TriplePoint tp = rand_triple(rng);
        Rational w = rng.nonzero_rational(5, 5).abs();
        tp.beta = (Rational(1) - w * w) / (Rational(4) * eps) - tp.y.x1 * tp.y.x2;
        try {
            bool ok = yb::check_triple_uniqueness(Family::L1, Family::Meps, Family::L1, tp,
                                                  Rational(0), eps, Rational(0));
            CHECK(ok);
            ++done2;
        } catch (const yb::Error&) {
            continue;
        }
    }
}

TEST_CASE("suite runner contracts") {
    yb::SuiteOptions opt;
    opt.samples = 5;
    opt.seed = 11;
    auto rs = yb::run_suites("maps", opt);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].passed);
    CHECK(rs[0].samples == 5);
    CHECK(rs[0].seed == 11);

    auto all = yb::run_suites("all", opt);
    CHECK(all.size() == 6);
    for (const auto& r : all) CHECK(r.passed);

    CHECK_THROWS_AS(yb::run_suites("bogus", opt), yb::ConfigError);
    yb::SuiteOptions empty;
    empty.samples = 0;
    CHECK_THROWS_AS(yb::run_suites("maps", empty), yb::ConfigError);
}

TEST_CASE("corrupted fixture is detected and reported") {
    yb::SuiteOptions opt;
    opt.samples = 10;
    opt.seed = 3;
    opt.corrupt_fixture = true;
    auto rs = yb::run_suites("maps", opt);
    REQUIRE(rs.size() == 1);
    CHECK_FALSE(rs[0].passed);
    CHECK(!rs[0].counterexample.empty());
    CHECK(rs[0].counterexample.find("x=") != std::string::npos);
}

TEST_CASE("deterministic suites: same seed, same transcript") {
    yb::SuiteOptions opt;
    opt.samples = 8;
    opt.seed = 77;
    auto a = yb::run_suites("entwine", opt);
    auto b = yb::run_suites("entwine", opt);
    REQUIRE(a.size() == b.size());
    CHECK(a[0].samples == b[0].samples);
    CHECK(a[0].resampled == b[0].resampled);
    CHECK(a[0].passed == b[0].passed);
}
