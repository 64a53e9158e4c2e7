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

#ifndef YB_IO_HPP
#define YB_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "yb/lattice.hpp"
#include "yb/verify.hpp"

namespace yb {

// ordered_json keeps key order stable so identical runs serialize
// byte-identically.
using Json = nlohmann::ordered_json;

// Matrices serialize as [["p/q","p/q"],["p/q","p/q"]].
Json mat2_to_json(const Mat2Q& m);
Mat2Q mat2_from_json(const Json& j);

// Lattice config:
// { "n": 2, "edge_map": "S",
//   "x": [["1","1"], ["1/2","2"]], "y": [...],
//   "alpha": ["0", "1/3"], "beta": [...] }
// All scalars are "p/q" strings (or "p" for integers).
LatticeState lattice_from_json(const Json& j);
Json lattice_to_json(const LatticeState& s);
LatticeState load_lattice_config(const std::string& path);

// Trajectory CSV: header step,i,x1,x2,y1,y2 and one row per site per
// recorded state.
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

// Invariant log: per logged step the invariant row as "p/q" strings, plus
// the growth telemetry.
Json invariant_log_json(const Trajectory& tr);

Json suite_results_json(const std::vector<SuiteResult>& results);

}  // namespace yb

#endif
