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

// yb: exact verification and evolution of Yang-Baxter maps on binomial
// pencil leaves.
//
//   yb verify    run the randomized exact identity suites
//   yb evolve    evolve a periodic staircase lattice, logging invariants
//   yb monodromy print the monodromy trace/det coefficient vectors
//
// Exit codes: 0 success, 1 a check failed (first counterexample reported),
// 2 configuration error, 3 rational bit-size cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "yb/io.hpp"

namespace {

long env_max_bits() {
    const char* v = std::getenv("YB_MAX_BITS");
    if (!v || !*v) return 0;
    char* end = nullptr;
    long bits = std::strtol(v, &end, 10);
    if (end == v || *end || bits < 0) throw yb::ConfigError("YB_MAX_BITS must be a nonnegative integer");
    return bits;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw yb::ConfigError("cannot write \"" + path + "\"");
    out << text;
}

int cmd_verify(const std::string& suite, long samples, uint64_t seed, const std::string& out_path,
               bool corrupt_fixture) {
    yb::SuiteOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.corrupt_fixture = corrupt_fixture;
    std::vector<yb::SuiteResult> results = yb::run_suites(suite, opt);
    yb::Json report = yb::suite_results_json(results);
    std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) write_text(out_path, text);
    std::cout << text;
    for (const yb::SuiteResult& r : results)
        if (!r.passed) {
            std::cerr << "FAIL " << r.suite << ": counterexample " << r.counterexample << "\n";
            return 1;
        }
    return 0;
}

int cmd_evolve(const std::string& config, long steps, const std::string& out_prefix,
               const std::string& format, long stride) {
    yb::LatticeState s = yb::load_lattice_config(config);
    yb::EvolveOptions opt;
    opt.max_bits = env_max_bits();
    opt.heavy_stride = stride;
    yb::Trajectory tr = yb::evolve(s, steps, opt);

    if (format != "csv" && format != "json") throw yb::ConfigError("format must be csv or json");
    std::string traj_path = out_prefix + (format == "csv" ? ".trajectory.csv" : ".trajectory.json");
    if (format == "csv") {
        std::ofstream out(traj_path);
        if (!out) throw yb::ConfigError("cannot write \"" + traj_path + "\"");
        yb::write_trajectory_csv(out, tr);
    } else {
        yb::Json states = yb::Json::array();
        for (const auto& st : tr.states) states.push_back(yb::lattice_to_json(st));
        write_text(traj_path, states.dump(2) + "\n");
    }
    std::string inv_path = out_prefix + ".invariants.json";
    write_text(inv_path, yb::invariant_log_json(tr).dump(2) + "\n");

    long peak = 0;
    for (long b : tr.max_bits) peak = std::max(peak, b);
    std::cout << "steps: " << steps << "\n"
              << "trajectory: " << traj_path << "\n"
              << "invariant log: " << inv_path << "\n"
              << "max coordinate bits: " << peak << "\n"
              << "invariants constant: " << (tr.invariants_constant ? "yes" : "no") << "\n";
    if (!tr.invariants_constant) {
        std::cerr << "FAIL: invariant rows differ along the trajectory\n";
        return 1;
    }
    if (!tr.conjugation_ok || !tr.site_identities_ok || !tr.leaf_preserved) {
        std::cerr << "FAIL: conservation mechanism check failed\n";
        return 1;
    }
    return 0;
}

int cmd_monodromy(const std::string& config) {
    yb::LatticeState s = yb::load_lattice_config(config);
    std::vector<yb::Rational> inv = yb::spectral_invariants(s);
    // trace coefficients first (2n+1), then det coefficients (4n+1).
    std::cout << "trace:";
    for (int k = 0; k <= 2 * s.n; ++k) std::cout << ' ' << inv[k].str();
    std::cout << "\ndet:";
    for (size_t k = 2 * s.n + 1; k < inv.size(); ++k) std::cout << ' ' << inv[k].str();
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Yang-Baxter map verification and lattice evolution"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run exact identity suites");
    std::string suite = "all";
    long samples = 100;
    uint64_t seed = 1;
    std::string out_path;
    bool corrupt = false;
    verify->add_option("--suite", suite, "refactor|maps|entwine|yb|poisson|lattice|all");
    verify->add_option("--samples", samples, "sample points per suite");
    verify->add_option("--seed", seed, "PRNG seed; determines every sampled point");
    verify->add_option("--out", out_path, "also write the JSON report here");
    verify->add_flag("--corrupt-fixture", corrupt)->group("");  // self-test hook, hidden

    auto* evolve = app.add_subcommand("evolve", "evolve a periodic staircase lattice");
    std::string config;
    long steps = 10;
    std::string out_prefix = "yb_run";
    std::string format = "csv";
    long stride = 1;
    evolve->add_option("--config", config, "lattice JSON config")->required();
    evolve->add_option("--steps", steps, "transfer steps");
    evolve->add_option("--out", out_prefix, "output path prefix");
    evolve->add_option("--format", format, "trajectory format: csv|json");
    evolve->add_option("--invariant-stride", stride,
                       "log invariants every k-th step (1 = every step)");

    auto* monodromy = app.add_subcommand("monodromy", "print monodromy invariant vectors");
    std::string mconfig;
    monodromy->add_option("--config", mconfig, "lattice JSON config")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(suite, samples, seed, out_path, corrupt);
        if (evolve->parsed()) return cmd_evolve(config, steps, out_prefix, format, stride);
        if (monodromy->parsed()) return cmd_monodromy(mconfig);
    } catch (const yb::BitLimitExceeded& e) {
        std::cerr << "yb: " << e.what() << "\n";
        return 3;
    } catch (const yb::ConfigError& e) {
        std::cerr << "yb: " << e.what() << "\n";
        return 2;
    } catch (const yb::DomainError& e) {
        std::cerr << "yb: " << e.what() << "\n";
        return 1;
    } catch (const yb::Error& e) {
        std::cerr << "yb: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
