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

#ifndef YB_LATTICE_HPP
#define YB_LATTICE_HPP

#include <string>
#include <vector>

#include "yb/leaves.hpp"

namespace yb {

// Periodic staircase initial-value problem. 2n edge values (x_1..x_n on the
// x-edges with parameters alpha_i, y_1..y_n on the y-edges with beta_i),
// indices mod n. The transfer map applies the edge map on every elementary
// quadrilateral and cyclically shifts the y-row (parameters travel with
// their edges); the monodromy matrix is the ordered right-to-left product
// of the 2n pencil factors, and the coefficients of its trace and
// determinant are conserved along trajectories.
struct LatticeState {
    int n = 0;
    std::vector<LeafPoint<Rational>> x, y;
    std::vector<Rational> alpha, beta;
    EdgeMap edge;
};

// Checks shape, chart preconditions (e.g. x2 != 0 on an L1 leaf), and the
// leaf constraints f0 = alpha_i, f1 = 1. Throws ConfigError naming the
// violated constraint.
void validate_state(const LatticeState& s);

// Pencil factors: L carries the x-edge family, M the y-edge family.
BinomialQ x_factor(const LatticeState& s, int i);
BinomialQ y_factor(const LatticeState& s, int i);

// Ordered product M(y_n)L(x_n) ... M(y_1)L(x_1), degree 2n.
MatPolyQ monodromy(const LatticeState& s);

// Coefficients of trace(M_n) (2n+1 entries) followed by coefficients of
// det(M_n) (4n+1 entries), zero-padded to those fixed lengths so rows are
// comparable across steps. The trace is computed from the full product on a
// cleared-denominator integer path; the determinant through det
// multiplicativity over the factors (both routes are pinned against the
// direct matrix-polynomial computation in the tests).
std::vector<Rational> spectral_invariants(const LatticeState& s);

// One transfer step: (x_i', y_i') = edge map at site i, then the y-row
// shifts down by one. Throws DomainError naming the failing site.
LatticeState transfer(const LatticeState& s);

// Same result as transfer(); runs the map kernels on gcd-free fractions and
// canonicalizes only the outputs. This is what evolve() uses once
// coordinates grow past toy sizes.
LatticeState transfer_fast(const LatticeState& s);

// k levels of the diagonal pairing j = i+k-1 (mod n), then the y-row shift
// by d = k mod n. k_transfer(s, 1) == transfer(s).
LatticeState k_transfer(const LatticeState& s, long k);

// The 2n single-site pencil identities L(x_i')M(y_i') = M(y_i)L(x_i)
// linking a state to its transfer; these are the local mechanism behind
// monodromy-spectrum conservation.
bool site_lax_identities_ok(const LatticeState& s, const LatticeState& t);

// Direct check of M_n(transfer(s)) * C = C * M_n(s) with C the y-edge
// pencil at the site-1 output. Exact, on the cleared-integer path.
bool conjugation_identity_ok(const LatticeState& s, const LatticeState& t);

// Leaf constraints of every point, exactly.
bool leaf_residuals_ok(const LatticeState& s);

long state_max_bits(const LatticeState& s);

struct EvolveOptions {
    long max_bits = 0;        // abort with BitLimitExceeded above this; 0 = uncapped
    bool record_states = true;
    bool check_sites = true;  // per-step single-site pencil identities
    // Full invariant row + direct conjugation check at every heavy_stride-th
    // step (and always at the first and last). 1 = every step. The per-site
    // identities above imply the conjugation identity at every step by pure
    // regrouping of the product; the direct product-level check is the
    // expensive one at large bit sizes.
    long heavy_stride = 1;
    bool use_fast_transfer = true;
};

struct Trajectory {
    std::vector<LatticeState> states;  // all states, or first and last only
    std::vector<std::vector<Rational>> invariant_log;  // rows at invariant_steps
    std::vector<long> invariant_steps;
    std::vector<long> max_bits;  // per step, including step 0
    bool invariants_constant = true;
    bool conjugation_ok = true;
    bool site_identities_ok = true;
    bool leaf_preserved = true;
};

// Applies `steps` transfers, recording states, growth and checks per the
// options. DomainError from a map aborts with the step and site in the
// message.
Trajectory evolve(const LatticeState& s, long steps, const EvolveOptions& opt = {});

}  // namespace yb

#endif
