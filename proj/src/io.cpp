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

#include "yb/io.hpp"

#include <fstream>
#include <ostream>

namespace yb {

namespace {

Rational rat_field(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ConfigError(where + ": rationals are \"p/q\" strings");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ConfigError& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

LeafPoint<Rational> point_field(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(where + ": points are two-element arrays");
    return {rat_field(j[0], where), rat_field(j[1], where)};
}

}  // namespace

Json mat2_to_json(const Mat2Q& m) {
    return Json::array({Json::array({m(0, 0).str(), m(0, 1).str()}),
                        Json::array({m(1, 0).str(), m(1, 1).str()})});
}

Mat2Q mat2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw ConfigError("matrices are 2x2 arrays of \"p/q\" strings");
    return {rat_field(j[0][0], "matrix"), rat_field(j[0][1], "matrix"),
            rat_field(j[1][0], "matrix"), rat_field(j[1][1], "matrix")};
}

LatticeState lattice_from_json(const Json& j) {
    for (const char* key : {"n", "edge_map", "x", "y", "alpha", "beta"})
        if (!j.contains(key)) throw ConfigError(std::string("lattice config missing \"") + key + "\"");
    LatticeState s;
    if (!j["n"].is_number_integer()) throw ConfigError("\"n\" must be an integer");
    s.n = j["n"].get<int>();
    s.edge = EdgeMap::parse(j["edge_map"].get<std::string>());
    for (const auto& e : j["x"]) s.x.push_back(point_field(e, "x"));
    for (const auto& e : j["y"]) s.y.push_back(point_field(e, "y"));
    for (const auto& e : j["alpha"]) s.alpha.push_back(rat_field(e, "alpha"));
    for (const auto& e : j["beta"]) s.beta.push_back(rat_field(e, "beta"));
    validate_state(s);
    return s;
}

Json lattice_to_json(const LatticeState& s) {
    Json j;
    j["n"] = s.n;
    j["edge_map"] = s.edge.str();
    auto points = [](const std::vector<LeafPoint<Rational>>& v) {
        Json a = Json::array();
        for (const auto& p : v) a.push_back({p.x1.str(), p.x2.str()});
        return a;
    };
    auto scalars = [](const std::vector<Rational>& v) {
        Json a = Json::array();
        for (const auto& r : v) a.push_back(r.str());
        return a;
    };
    j["x"] = points(s.x);
    j["y"] = points(s.y);
    j["alpha"] = scalars(s.alpha);
    j["beta"] = scalars(s.beta);
    return j;
}

LatticeState load_lattice_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in \"" + path + "\": " + e.what());
    }
    return lattice_from_json(j);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
    os << "step,i,x1,x2,y1,y2\n";
    for (size_t k = 0; k < tr.states.size(); ++k) {
        const LatticeState& s = tr.states[k];
        for (int i = 0; i < s.n; ++i)
            os << k << ',' << i + 1 << ',' << s.x[i].x1.str() << ',' << s.x[i].x2.str() << ','
               << s.y[i].x1.str() << ',' << s.y[i].x2.str() << '\n';
    }
}

Json invariant_log_json(const Trajectory& tr) {
    Json j;
    j["steps"] = tr.invariant_steps;
    Json rows = Json::array();
    for (const auto& row : tr.invariant_log) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    j["invariants"] = std::move(rows);
    j["constant"] = tr.invariants_constant;
    j["max_bits"] = tr.max_bits;
    return j;
}

Json suite_results_json(const std::vector<SuiteResult>& results) {
    Json j;
    Json rows = Json::array();
    bool all = true;
    for (const SuiteResult& r : results) {
        Json e;
        e["suite"] = r.suite;
        e["claim"] = r.claim;
        e["samples"] = r.samples;
        e["passed"] = r.passed;
        e["resampled"] = r.resampled;
        e["seed"] = r.seed;
        if (!r.passed) e["counterexample"] = r.counterexample;
        rows.push_back(std::move(e));
        all = all && r.passed;
    }
    j["results"] = std::move(rows);
    j["all_passed"] = all;
    return j;
}

}  // namespace yb
