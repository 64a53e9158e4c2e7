#include <doctest.h>

#include <sstream>

#include "yb/io.hpp"

using yb::Json;
using yb::Rational;

namespace {

Json sample_config() {
    return Json{{"n", 2},
                {"edge_map", "S"},
                {"x", Json::array({Json::array({"1", "1"}), Json::array({"1/2", "2"})})},
                {"y", Json::array({Json::array({"0", "3"}), Json::array({"-1/3", "1"})})},
                {"alpha", Json::array({"0", "1/3"})},
                {"beta", Json::array({"1/2", "-1"})}};
}

}  // namespace

TEST_CASE("matrix serialization round trip") {
    yb::Mat2Q m(Rational(1, 2), Rational(-3), Rational(0), Rational(7, 5));
    Json j = yb::mat2_to_json(m);
    CHECK(j[0][0] == "1/2");
    CHECK(j[1][1] == "7/5");
    CHECK(yb::mat2_from_json(j) == m);
    CHECK_THROWS_AS(yb::mat2_from_json(Json::array({1, 2})), yb::ConfigError);
}

TEST_CASE("lattice config round trip") {
    yb::LatticeState s = yb::lattice_from_json(sample_config());
    CHECK(s.n == 2);
    CHECK(s.edge.kind == yb::EdgeMap::Kind::S);
    CHECK(s.x[1].x1 == Rational(1, 2));
    CHECK(s.beta[1] == Rational(-1));
    Json back = yb::lattice_to_json(s);
    yb::LatticeState s2 = yb::lattice_from_json(back);
    CHECK(s2.x == s.x);
    CHECK(s2.y == s.y);
    CHECK(s2.alpha == s.alpha);
    CHECK(s2.beta == s.beta);
}

TEST_CASE("config errors carry the violated field") {
    Json j = sample_config();
    j.erase("alpha");
    CHECK_THROWS_WITH_AS(yb::lattice_from_json(j), doctest::Contains("alpha"), yb::ConfigError);

    j = sample_config();
    j["x"][0][1] = "0";  // chart precondition x2 != 0 on the L1 leaf
    CHECK_THROWS_WITH_AS(yb::lattice_from_json(j), doctest::Contains("x2 != 0"),
                         yb::ConfigError);

    j = sample_config();
    j["x"][0][0] = "1/abc";
    CHECK_THROWS_AS(yb::lattice_from_json(j), yb::ConfigError);

    j = sample_config();
    j["edge_map"] = "Q";
    CHECK_THROWS_AS(yb::lattice_from_json(j), yb::ConfigError);
}

TEST_CASE("trajectory CSV layout") {
    yb::LatticeState s = yb::lattice_from_json(sample_config());
    yb::Trajectory tr;
    tr.states = {s};
    std::ostringstream os;
    yb::write_trajectory_csv(os, tr);
    std::string out = os.str();
    CHECK(out.rfind("step,i,x1,x2,y1,y2\n", 0) == 0);
    CHECK(out.find("0,1,1,1,0,3\n") != std::string::npos);
    CHECK(out.find("0,2,1/2,2,-1/3,1\n") != std::string::npos);
}

TEST_CASE("invariant log serialization") {
    yb::Trajectory tr;
    tr.invariant_steps = {0, 1};
    tr.invariant_log = {{Rational(1), Rational(1, 2)}, {Rational(1), Rational(1, 2)}};
    tr.max_bits = {2, 5};
    Json j = yb::invariant_log_json(tr);
    CHECK(j["constant"] == true);
    CHECK(j["invariants"][0][1] == "1/2");
    CHECK(j["max_bits"][1] == 5);
}

TEST_CASE("suite report serialization") {
    yb::SuiteResult ok{"maps", "claims", 10, 2, 7, true, ""};
    yb::SuiteResult bad{"yb", "claims", 3, 0, 7, false, "x=(1,1)"};
    Json j = yb::suite_results_json({ok, bad});
    CHECK(j["all_passed"] == false);
    CHECK(j["results"][0]["suite"] == "maps");
    CHECK(j["results"][0].contains("counterexample") == false);
    CHECK(j["results"][1]["counterexample"] == "x=(1,1)");

    // Byte-stable dumps for identical inputs.
    CHECK(j.dump(2) == yb::suite_results_json({ok, bad}).dump(2));
}
