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

#ifndef YB_RNG_HPP
#define YB_RNG_HPP

#include <cstdint>

#include "yb/rational.hpp"

namespace yb {

// Hand-rolled splitmix64 so that a (seed, sample index) pair gives the same
// stream on every platform; std::uniform_int_distribution is not pinned by
// the standard. One seeded generator drives all randomized suites.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is irrelevant at test-suite scale and
    // keeping it branch-free keeps the stream trivially reproducible.
    uint64_t below(uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double unit_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double double_in(double lo, double hi) { return lo + (hi - lo) * unit_double(); }

    // Small rational with |numerator| <= num_bound, 1 <= denominator <= den_bound.
    Rational rational(long num_bound, long den_bound) {
        return Rational(int_in(-num_bound, num_bound), int_in(1, den_bound));
    }

    Rational nonzero_rational(long num_bound, long den_bound) {
        for (;;) {
            Rational r = rational(num_bound, den_bound);
            if (!r.is_zero()) return r;
        }
    }

  private:
    uint64_t state_;
};

}  // namespace yb

#endif
