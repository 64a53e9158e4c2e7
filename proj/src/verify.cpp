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

#include "yb/verify.hpp"

#include "yb/lattice.hpp"
#include "yb/poisson.hpp"
#include "yb/rng.hpp"

namespace yb {

EntwiningSystem system_srt() {
    return {map_fn(EdgeMap{EdgeMap::Kind::S}), map_fn(EdgeMap{EdgeMap::Kind::R}),
            map_fn(EdgeMap{EdgeMap::Kind::T}), Family::L1, Family::L2, Family::L1, "S,R,T"};
}

EntwiningSystem system_ssrbar() {
    return {map_fn(EdgeMap{EdgeMap::Kind::S}), map_fn(EdgeMap{EdgeMap::Kind::S}),
            map_fn(EdgeMap{EdgeMap::Kind::Rbar}), Family::L1, Family::L2, Family::L2, "S,S,Rbar"};
}

bool check_lax_pair(Family lfam, Family mfam, const MapFn& f, const Rational& alpha,
                    const Rational& beta, const LeafPoint<Rational>& x,
                    const LeafPoint<Rational>& y) {
    PointPair<Rational> uv = f(alpha, beta, x, y);
    MatPolyQ lhs = make_leaf_matrix(lfam, uv.first, alpha) * make_leaf_matrix(mfam, uv.second, beta);
    MatPolyQ rhs = make_leaf_matrix(mfam, y, beta) * make_leaf_matrix(lfam, x, alpha);
    return lhs == rhs;
}

namespace {

struct Chains {
    Triple left;   // m23 o m13 o m12
    Triple right;  // m12 o m13 o m23
};

Chains run_chains(const EntwiningSystem& sys, const TriplePoint& tp) {
    Triple pts{tp.x, tp.y, tp.z};
    std::array<Rational, 3> par{tp.alpha, tp.beta, tp.gamma};
    Chains c;
    try {
        c.left = apply_on_slots(sys.m12, 0, 1, pts, par);
        c.left = apply_on_slots(sys.m13, 0, 2, c.left, par);
        c.left = apply_on_slots(sys.m23, 1, 2, c.left, par);
    } catch (const DomainError& e) {
        throw DomainError("left chain of (" + sys.name + "): " + e.what());
    }
    try {
        c.right = apply_on_slots(sys.m23, 1, 2, pts, par);
        c.right = apply_on_slots(sys.m13, 0, 2, c.right, par);
        c.right = apply_on_slots(sys.m12, 0, 1, c.right, par);
    } catch (const DomainError& e) {
        throw DomainError("right chain of (" + sys.name + "): " + e.what());
    }
    return c;
}

}  // namespace

bool check_entwining(const EntwiningSystem& sys, const TriplePoint& tp) {
    Chains c = run_chains(sys, tp);
    return c.left == c.right;
}

bool check_triple_product_transport(const EntwiningSystem& sys, const TriplePoint& tp) {
    Chains c = run_chains(sys, tp);
    MatPolyQ before = make_leaf_matrix(sys.f3, tp.z, tp.gamma).poly() *
                      (make_leaf_matrix(sys.f2, tp.y, tp.beta) *
                       make_leaf_matrix(sys.f1, tp.x, tp.alpha));
    MatPolyQ after = make_leaf_matrix(sys.f1, c.left[0], tp.alpha).poly() *
                     (make_leaf_matrix(sys.f2, c.left[1], tp.beta) *
                      make_leaf_matrix(sys.f3, c.left[2], tp.gamma));
    return before == after;
}

bool check_yb(const MapFn& f, Family fam, const TriplePoint& tp) {
    EntwiningSystem sys{f, f, f, fam, fam, fam, "YB"};
    return check_entwining(sys, tp);
}

bool check_triple_uniqueness(Family f1, Family f2, Family f3, const TriplePoint& tp,
                             const Rational& eps1, const Rational& eps2, const Rational& eps3) {
    BinomialQ bx = make_leaf_matrix(f1, tp.x, tp.alpha, eps1);
    BinomialQ by = make_leaf_matrix(f2, tp.y, tp.beta, eps2);
    BinomialQ bz = make_leaf_matrix(f3, tp.z, tp.gamma, eps3);
    TripleProduct<Rational> prod =
        build_triple_product(bx.x_part, by.x_part, bz.x_part, bx.a_part, by.a_part, bz.a_part);
    auto [X, Y, Z] =
        recover_from_triple_product(prod, bx.char_poly(), by.char_poly(), bz.char_poly());
    return X == bx.x_part && Y == by.x_part && Z == bz.x_part;
}

// ---------------------------------------------------------------------------
// Suite runners.

namespace {

struct Harness {
    SuiteResult res;
    Rng rng;
    bool stop = false;

    Harness(std::string suite, std::string claim, const SuiteOptions& opt)
        : res{std::move(suite), std::move(claim), 0, 0, opt.seed, true, ""}, rng(opt.seed) {}

    void fail(const std::string& counterexample) {
        if (res.passed) {
            res.passed = false;
            res.counterexample = counterexample;
        }
        stop = true;
    }
};

LeafPoint<Rational> sample_point(Rng& rng) {
    // Small numerators and denominators keep bit growth tame across chains
    // of six rational maps.
    return {rng.rational(8, 8), rng.nonzero_rational(8, 8)};
}

Rational sample_param(Rng& rng) { return rng.rational(4, 4); }

TriplePoint sample_triple(Rng& rng) {
    return {sample_point(rng), sample_point(rng), sample_point(rng),
            sample_param(rng), sample_param(rng), sample_param(rng)};
}

std::string triple_str(const TriplePoint& t) {
    return "x=" + point_str(t.x) + " y=" + point_str(t.y) + " z=" + point_str(t.z) +
           " a=" + t.alpha.str() + " b=" + t.beta.str() + " g=" + t.gamma.str();
}

std::string pair_str(const Rational& a, const Rational& b, const LeafPoint<Rational>& x,
                     const LeafPoint<Rational>& y) {
    return "x=" + point_str(x) + " y=" + point_str(y) + " a=" + a.str() + " b=" + b.str();
}

// Runs body() up to opt.samples times, resampling (with a counter) whenever
// the rational maps are undefined at the drawn point.
template <class Body>
void sampled(Harness& h, const SuiteOptions& opt, Body&& body) {
    const long max_resamples = 50 * std::max<long>(opt.samples, 1);
    auto resample = [&] {
        if (++h.res.resampled > max_resamples)
            h.fail("resample budget exhausted; the sampler keeps hitting degenerate points");
    };
    while (h.res.samples < opt.samples && !h.stop) {
        try {
            body();
            ++h.res.samples;
        } catch (const DomainError&) {
            resample();
        } catch (const SingularPi1&) {
            resample();
        } catch (const SingularRecovery&) {
            resample();
        } catch (const DivisionByZero&) {
            resample();
        }
    }
}

SuiteResult suite_refactor(const SuiteOptions& opt) {
    Harness h("refactor", "pencil refactorization with spectrum preservation, and unique "
                          "triple-product factorization", opt);
    sampled(h, opt, [&] {
        // Commuting invertible pair: B = c0 I + c1 A.
        Mat2Q A(h.rng.rational(5, 4), h.rng.rational(5, 4), h.rng.rational(5, 4),
                h.rng.rational(5, 4));
        if (A.det().is_zero()) throw DomainError("singular A sample");
        Mat2Q B = h.rng.rational(5, 4) * Mat2Q::identity() + h.rng.nonzero_rational(5, 4) * A;
        if (B.det().is_zero()) throw DomainError("singular B sample");
        Mat2Q X(h.rng.rational(5, 4), h.rng.rational(5, 4), h.rng.rational(5, 4),
                h.rng.rational(5, 4));
        Mat2Q Y(h.rng.rational(5, 4), h.rng.rational(5, 4), h.rng.rational(5, 4),
                h.rng.rational(5, 4));
        auto in = RefactorInput<Rational>::checked(X, Y, A, B);
        auto [pi1, pi2] = pi_matrices(in);
        if (pi1.det().is_zero()) throw DomainError("singular Pi1 sample");
        auto [U, V] = refactor_pair(in);
        std::string at = "X=" + mat_str(X) + " Y=" + mat_str(Y) + " A=" + mat_str(A) +
                         " B=" + mat_str(B);
        if (!verify_refactorization(U, V, X, Y, A, B)) return h.fail("refactorization at " + at);
        if (U * V != Y * X || U * B + A * V != Y * A + B * X)
            return h.fail("product system at " + at);
        if (pi2 != pi1 * A.inverse() * X) return h.fail("Pi2 = Pi1 A^-1 X at " + at);
        if (!cayley_hamilton_residual(X, A).is_zero())
            return h.fail("Cayley-Hamilton residual at " + at);

        // Triple-product roundtrip on three leaves with identity structure.
        TriplePoint tp = sample_triple(h.rng);
        if (!check_triple_uniqueness(Family::L1, Family::L1, Family::L1, tp))
            h.fail("triple factorization roundtrip at " + triple_str(tp));
    });
    return h.res;
}

MapFn corrupted_R() {
    return [](const Rational& a, const Rational& b, const LeafPoint<Rational>& x,
              const LeafPoint<Rational>& y) {
        PointPair<Rational> uv = map_R(a, b, x, y);
        uv.first.x1 += Rational(1);  // deliberately wrong
        return uv;
    };
}

SuiteResult suite_maps(const SuiteOptions& opt) {
    Harness h("maps", "pencil identities, leaf preservation, the involution and the "
                      "equal-parameter swap properties of the four parametric maps", opt);
    MapFn r = opt.corrupt_fixture ? corrupted_R() : map_fn(EdgeMap{EdgeMap::Kind::R});
    sampled(h, opt, [&] {
        Rational a = sample_param(h.rng), b = sample_param(h.rng);
        LeafPoint<Rational> x = sample_point(h.rng), y = sample_point(h.rng);
        std::string at = pair_str(a, b, x, y);

        if (!check_lax_pair(Family::L1, Family::L1, r, a, b, x, y))
            return h.fail("R pencil identity at " + at);
        if (!check_lax_pair(Family::L2, Family::L2, map_fn(EdgeMap{EdgeMap::Kind::Rbar}), a, b, x, y))
            return h.fail("Rbar pencil identity at " + at);
        if (!check_lax_pair(Family::L1, Family::L2, map_fn(EdgeMap{EdgeMap::Kind::S}), a, b, x, y))
            return h.fail("S pencil identity at " + at);
        if (!check_lax_pair(Family::L2, Family::L1, map_fn(EdgeMap{EdgeMap::Kind::T}), a, b, x, y))
            return h.fail("T pencil identity at " + at);

        // Leaf preservation: images satisfy f0 = leaf value, f1 = 1.
        for (auto kind : {EdgeMap::Kind::R, EdgeMap::Kind::Rbar, EdgeMap::Kind::S,
                          EdgeMap::Kind::T}) {
            EdgeMap m{kind};
            PointPair<Rational> uv = m.apply(a, b, x, y);
            CharPolyQ cu = make_leaf_matrix(m.x_family(), uv.first, a).char_poly();
            CharPolyQ cv = make_leaf_matrix(m.y_family(), uv.second, b).char_poly();
            if (cu.f0 != a || cu.f1 != Rational(1) || cv.f0 != b || cv.f1 != Rational(1))
                return h.fail("leaf preservation of " + m.str() + " at " + at);
        }

        // Involution; both maps degenerate to the content swap at equal
        // parameters (forced by uniqueness: with equal leaf values the
        // swapped pair already solves the product with the right spectra).
        auto [u, v] = r(a, b, x, y);
        auto [xx, yy] = r(a, b, u, v);
        if (xx != x || yy != y) return h.fail("R involution at " + at);
        auto [us, vs] = r(a, a, x, y);
        if (us != y || vs != x) return h.fail("R equal-parameter swap at " + at);
        auto [ub, vb] = map_Rbar(a, a, x, y);
        if (ub != y || vb != x) return h.fail("Rbar equal-parameter swap at " + at);

        // The generic refactorization-backed map reproduces the closed form.
        auto g = generic_edge_map(Family::L1, Family::L1, a, b, x, y);
        auto cf = map_R(a, b, x, y);
        if (g != cf) return h.fail("generic L1/L1 vs closed form at " + at);
    });
    return h.res;
}

SuiteResult suite_entwine(const SuiteOptions& opt) {
    Harness h("entwine", "entwining compatibility of (S,R,T) and (S,S,Rbar), and invariance of "
                         "the triple pencil product along the chains", opt);
    const EntwiningSystem systems[] = {system_srt(), system_ssrbar()};
    sampled(h, opt, [&] {
        TriplePoint tp = sample_triple(h.rng);
        for (const EntwiningSystem& sys : systems) {
            if (!check_entwining(sys, tp))
                return h.fail("(" + sys.name + ") chains disagree at " + triple_str(tp));
            if (!check_triple_product_transport(sys, tp))
                return h.fail("(" + sys.name + ") product transport at " + triple_str(tp));
        }
    });
    return h.res;
}

SuiteResult suite_yb(const SuiteOptions& opt) {
    Harness h("yb", "Yang-Baxter property of the L1 map and the degenerate L2 map", opt);
    sampled(h, opt, [&] {
        TriplePoint tp = sample_triple(h.rng);
        if (!check_yb(map_fn(EdgeMap{EdgeMap::Kind::R}), Family::L1, tp))
            return h.fail("R Yang-Baxter at " + triple_str(tp));
        if (!check_yb(map_fn(EdgeMap{EdgeMap::Kind::Rbar}), Family::L2, tp))
            h.fail("Rbar Yang-Baxter at " + triple_str(tp));
    });
    return h.res;
}

SuiteResult suite_poisson(const SuiteOptions& opt) {
    Harness h("poisson", "Casimir annihilation, bracket axioms, reduced-bracket consistency, "
                         "integrals in involution and symplecticity of the maps", opt);
    sampled(h, opt, [&] {
        // Random pencil: ambient table checks.
        Mat2Q A(h.rng.rational(4, 3), h.rng.rational(4, 3), h.rng.rational(4, 3),
                h.rng.rational(4, 3));
        Mat2Q X(h.rng.rational(4, 3), h.rng.rational(4, 3), h.rng.rational(4, 3),
                h.rng.rational(4, 3));
        std::string at = "X=" + mat_str(X) + " A=" + mat_str(A);

        // Casimirs: f0 = det X and f1 annihilate every entry; the entries of
        // A are constants, killed by the differential automatically.
        auto f0 = [](const Mat2<DualScalar>& m) { return m.det(); };
        auto f1c = [&A](const Mat2<DualScalar>& m) {
            return DualScalar(A(1, 1)) * m(0, 0) - DualScalar(A(1, 0)) * m(0, 1) -
                   DualScalar(A(0, 1)) * m(1, 0) + DualScalar(A(0, 0)) * m(1, 1);
        };
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                auto coord = [k, l](const Mat2<DualScalar>& m) { return m(k, l); };
                if (!entry_bracket_of(A, X, f0, coord).is_zero())
                    return h.fail("f0 Casimir at " + at);
                if (!entry_bracket_of(A, X, f1c, coord).is_zero())
                    return h.fail("f1 Casimir at " + at);
            }

        // Antisymmetry and Jacobi at a random point.
        auto table = [&](int i, int j, int k, int l) {
            return sklyanin_entry_bracket(A, X, i, j, k, l);
        };
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (table(a / 2, a % 2, b / 2, b % 2) != -table(b / 2, b % 2, a / 2, a % 2))
                    return h.fail("antisymmetry at " + at);
        // Jacobi via the nested chain rule: {{a,b},c} + cyclic = 0. The inner
        // bracket is itself a (linear) entry function, re-lifted through the
        // dual argument for the outer derivative.
        auto entry_bracket_fn = [&A](int a, int b) {
            return [a, b, &A](const Mat2<DualScalar>& m) {
                return DualScalar(A(a / 2, b % 2)) * m(b / 2, a % 2) -
                       m(a / 2, b % 2) * DualScalar(A(b / 2, a % 2));
            };
        };
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                for (int c = b + 1; c < 4; ++c) {
                    auto fa = [a](const Mat2<DualScalar>& m) { return m(a / 2, a % 2); };
                    auto fb = [b](const Mat2<DualScalar>& m) { return m(b / 2, b % 2); };
                    auto fc = [c](const Mat2<DualScalar>& m) { return m(c / 2, c % 2); };
                    Rational jac = entry_bracket_of(A, X, entry_bracket_fn(a, b), fc) +
                                   entry_bracket_of(A, X, entry_bracket_fn(b, c), fa) +
                                   entry_bracket_of(A, X, entry_bracket_fn(c, a), fb);
                    if (!jac.is_zero()) return h.fail("Jacobi identity at " + at);
                }

        // Reduced bracket on the L1 leaf: ambient value of {entry, entry}
        // restricted to the leaf equals the chain-rule value through the
        // graph, and {x1,x2} comes out as -x2.
        Rational alpha = sample_param(h.rng);
        LeafPoint<Rational> p = sample_point(h.rng);
        BinomialQ leaf = leaf_L1(p, alpha);
        ReducedBracket rb_l1{ReducedBracket::Leaves::R};  // {x1,x2} = -x2 on the L1 side
        if (sklyanin_entry_bracket(Mat2Q::identity(), leaf.x_part, 0, 0, 0, 1) != -p.x2)
            return h.fail("reduced {x1,x2} != -x2 at " + point_str(p));
        Point4<Rational> p4{p.x1, p.x2, Rational(1), Rational(1)};
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                auto entry_as_leaf_fn = [&](int idx) {
                    return [idx, &alpha](const Point4<DualScalar>& q) {
                        LeafPoint<DualScalar> lp{q[0], q[1]};
                        return leaf_L1(lp, DualScalar(alpha)).x_part(idx / 2, idx % 2);
                    };
                };
                Rational via_chain =
                    bracket_eval(entry_as_leaf_fn(a), entry_as_leaf_fn(b), rb_l1, p4);
                Rational via_table = sklyanin_entry_bracket(Mat2Q::identity(), leaf.x_part,
                                                            a / 2, a % 2, b / 2, b % 2);
                if (via_chain != via_table)
                    return h.fail("leaf restriction consistency at " + point_str(p));
            }

        // Integral pairs in involution; maps symplectic for their brackets.
        Rational a2 = sample_param(h.rng), b2 = sample_param(h.rng);
        LeafPoint<Rational> x = sample_point(h.rng), y = sample_point(h.rng);
        Point4<Rational> pt{x.x1, x.x2, y.x1, y.x2};
        std::string at2 = pair_str(a2, b2, x, y);
        for (auto kind : {EdgeMap::Kind::S, EdgeMap::Kind::Rbar, EdgeMap::Kind::T}) {
            auto cat = integral_catalog(kind);
            ReducedBracket rb = ReducedBracket::for_map(kind);
            auto j1 = [&](const Point4<DualScalar>& q) {
                return cat[0].eval_d(q, DualScalar(a2), DualScalar(b2));
            };
            auto j2 = [&](const Point4<DualScalar>& q) {
                return cat[1].eval_d(q, DualScalar(a2), DualScalar(b2));
            };
            if (!bracket_eval(j1, j2, rb, pt).is_zero())
                return h.fail("integrals not in involution (" + cat[0].name + "," + cat[1].name +
                              ") at " + at2);
            // Invariance under the map.
            EdgeMap m{kind};
            PointPair<Rational> uv = m.apply(a2, b2, x, y);
            Point4<Rational> img{uv.first.x1, uv.first.x2, uv.second.x1, uv.second.x2};
            for (const Integral& J : cat)
                if (J.eval_q(pt, a2, b2) != J.eval_q(img, a2, b2))
                    return h.fail(J.name + " not invariant at " + at2);
            if (!check_symplectic(EdgeMapFn{m}, rb, a2, b2, pt))
                return h.fail(m.str() + " not symplectic at " + at2);
        }
        if (!check_symplectic(EdgeMapFn{EdgeMap{EdgeMap::Kind::R}},
                              ReducedBracket{ReducedBracket::Leaves::R}, a2, b2, pt))
            h.fail("R not symplectic at " + at2);
    });
    return h.res;
}

SuiteResult suite_lattice(const SuiteOptions& opt) {
    Harness h("lattice", "monodromy-spectrum conservation, the conjugation identity and the "
                         "k-transfer contracts on small periodic staircases", opt);
    long configs = std::max<long>(1, opt.samples / 10);
    long done = 0;
    while (done < configs && !h.stop) {
        int n = static_cast<int>(1 + h.rng.below(3));
        LatticeState s;
        s.n = n;
        s.edge = EdgeMap{EdgeMap::Kind::S};
        for (int i = 0; i < n; ++i) {
            s.x.push_back({h.rng.rational(3, 2), h.rng.nonzero_rational(3, 2)});
            s.y.push_back({h.rng.rational(3, 2), h.rng.nonzero_rational(3, 2)});
            s.alpha.push_back(h.rng.rational(2, 2));
            s.beta.push_back(h.rng.rational(2, 2));
        }
        try {
            Trajectory tr = evolve(s, 8, EvolveOptions{0, false, true, 1, true});
            ++done;
            h.res.samples += 1;
            if (!tr.invariants_constant) {
                h.fail("invariant drift, n=" + std::to_string(n));
                break;
            }
            if (!tr.conjugation_ok) {
                h.fail("conjugation identity, n=" + std::to_string(n));
                break;
            }
            if (!tr.site_identities_ok) {
                h.fail("site pencil identities, n=" + std::to_string(n));
                break;
            }
            if (!tr.leaf_preserved) {
                h.fail("leaf drift, n=" + std::to_string(n));
                break;
            }
            // k-transfer contracts: k=1 is the transfer; k=n restores the
            // natural y order (equal to n plain transfers un-shifted).
            LatticeState t1 = k_transfer(s, 1);
            LatticeState t1b = transfer(s);
            if (t1.x != t1b.x || t1.y != t1b.y) {
                h.fail("k_transfer(1) != transfer, n=" + std::to_string(n));
                break;
            }
            std::vector<Rational> before = spectral_invariants(s);
            for (long k = 1; k <= n; ++k)
                if (spectral_invariants(k_transfer(s, k)) != before) {
                    h.fail("k-transfer conservation, n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
                    break;
                }
        } catch (const DomainError&) {
            ++h.res.resampled;
            s = LatticeState{};
        }
    }
    return h.res;
}

}  // namespace

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opt) {
    if (opt.samples <= 0) throw ConfigError("samples must be positive");
    std::vector<SuiteResult> out;
    auto want = [&](const char* s) { return name == s || name == "all"; };
    bool known = false;
    if (want("refactor")) out.push_back(suite_refactor(opt)), known = true;
    if (want("maps")) out.push_back(suite_maps(opt)), known = true;
    if (want("entwine")) out.push_back(suite_entwine(opt)), known = true;
    if (want("yb")) out.push_back(suite_yb(opt)), known = true;
    if (want("poisson")) out.push_back(suite_poisson(opt)), known = true;
    if (want("lattice")) out.push_back(suite_lattice(opt)), known = true;
    if (!known)
        throw ConfigError("unknown suite \"" + name +
                          "\"; expected refactor|maps|entwine|yb|poisson|lattice|all");
    return out;
}

}  // namespace yb
