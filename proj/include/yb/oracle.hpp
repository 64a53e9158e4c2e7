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

#ifndef YB_ORACLE_HPP
#define YB_ORACLE_HPP

#include <cstdint>

#include "yb/mat2.hpp"

namespace yb {

// Independent numeric confirmation of the refactorization closed form.
// Treats the four entries of U as unknowns, eliminates V through the linear
// relation V = A^-1(YA + BX - UB), and solves the remaining system
//
//   U V(U) = Y X   (4 equations)   f1(U;A) = f1(X;A), f0(U;A) = f0(X;A)
//
// by damped least-squares iteration from many random starts. Deliberately
// shares no code path with refactor_pair beyond the 2x2 type.
struct OracleResult {
    Mat2<double> U, V;
    int distinct_roots = 0;  // residual-zero roots found, after dedup
    int converged_starts = 0;
    double residual = 0.0;   // infinity norm at the reported root
};

OracleResult refactor_oracle(const Mat2<double>& X, const Mat2<double>& Y,
                             const Mat2<double>& A, const Mat2<double>& B, uint64_t seed,
                             int starts = 64);

}  // namespace yb

#endif
