// Copyright 2026 The floqmbl Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "floqmbl/run_config.hpp"
#include "floqmbl/runner.hpp"

using namespace floqmbl;
using Catch::Matchers::ContainsSubstring;
namespace fs = std::filesystem;

namespace {

std::string message_of(const std::string &text) {
    try {
        parse_config(text, "cfg.json");
    } catch (const ConfigError &e) {
        return e.what();
    }
    return {};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / "floqmbl_test_run_config" / name;
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("Minimal config takes documented defaults", "[config]") {
    const RunConfig cfg =
        parse_config(R"({"mode": "dynamics", "circuit": {"L": 6}})");
    CHECK(cfg.mode == RunMode::Dynamics);
    CHECK(cfg.seed == 0);
    CHECK(cfg.output_dir == "out");
    CHECK(cfg.circuit.num_qubits == 6);
    CHECK(cfg.circuit.t0 == 0.2);
    CHECK(cfg.circuit.theta0 == 0.8);
    CHECK(cfg.circuit.jz == 0.1);
    CHECK(cfg.circuit.t_modulation == 0.2);
    CHECK(cfg.circuit.wavenumber == kGoldenWavenumber);
    CHECK_FALSE(cfg.circuit.phi.has_value());
    CHECK(cfg.dynamics.op == "X2 X3");
    CHECK(cfg.dynamics.n_steps == 1000);
}

TEST_CASE("Mode blocks parse", "[config]") {
    const RunConfig scan = parse_config(R"({
        "mode": "scan", "seed": 5, "circuit": {"L": 4},
        "scan": {"start": [0.1, 0.9], "end": [0.9, 0.1], "num_points": 3,
                 "n_long": 50, "n_short": 10, "num_phi": 2}
    })");
    CHECK(scan.scan.start == ParamPoint{0.1, 0.9});
    CHECK(scan.scan.num_points == 3);
    CHECK(scan.scan.num_phi == 2);
    CHECK(scan.seed == 5);

    const RunConfig rm = parse_config(R"({
        "mode": "randmeas", "circuit": {"L": 4, "phi": 0.3},
        "randmeas": {"operator": "Z1", "flip_sites": [0, 1],
                     "variant": "PAPER_LITERAL", "num_unitaries": 10}
    })");
    CHECK(rm.randmeas.variant == EstimatorVariant::PaperLiteral);
    CHECK(rm.randmeas.flip_sites == std::vector<unsigned>{0, 1});
    CHECK(rm.randmeas.n_steps == 32);
    CHECK(rm.circuit.phi == 0.3);

    const RunConfig q = parse_config(
        R"({"mode": "export-qasm", "circuit": {"L": 3}, "export_qasm": {"repetitions": 2}})");
    CHECK(q.mode == RunMode::ExportQasm);
    CHECK(q.export_qasm.repetitions == 2);
}

TEST_CASE("Missing L is reported by name", "[config][errors]") {
    const std::string msg =
        message_of("{\n  \"mode\": \"dynamics\",\n  \"circuit\": {\"t0\": 0.3}\n}");
    CHECK_THAT(msg, ContainsSubstring("missing required field 'circuit.L'"));
    CHECK_THAT(msg, ContainsSubstring("cfg.json:3"));
    CHECK_THAT(message_of(R"({"mode": "dynamics"})"),
               ContainsSubstring("'circuit'"));
}

TEST_CASE("Strict parsing rejects unknown and misplaced keys", "[config][errors]") {
    const std::string unknown = message_of(
        "{\n\"mode\": \"dynamics\",\n\"circuit\": {\"L\": 4},\n\"sed\": 3\n}");
    CHECK_THAT(unknown, ContainsSubstring("unknown field 'sed'"));
    CHECK_THAT(unknown, ContainsSubstring("cfg.json:4"));
    CHECK_THAT(message_of(R"({"mode": "dynamics", "circuit": {"L": 4, "tt": 1}})"),
               ContainsSubstring("circuit.tt"));
    CHECK_THAT(message_of(R"({"mode": "dynamics", "circuit": {"L": 4},
                              "scan": {}})"),
               ContainsSubstring("not valid for mode 'dynamics'"));
    CHECK_THAT(message_of(R"({"mode": "warp", "circuit": {"L": 4}})"),
               ContainsSubstring("unknown mode"));
}

TEST_CASE("Value validation", "[config][errors]") {
    const auto base = [](const std::string &circuit, const std::string &block) {
        return R"({"mode": "randmeas", "circuit": )" + circuit +
               (block.empty() ? "" : R"(, "randmeas": )" + block) + "}";
    };
    CHECK_THAT(message_of(base(R"({"L": 1})", "")), ContainsSubstring("circuit.L"));
    CHECK_THAT(message_of(base(R"({"L": 13})", "")), ContainsSubstring("circuit.L"));
    CHECK_THAT(message_of(base(R"({"L": "4"})", "")),
               ContainsSubstring("nonnegative integer"));
    CHECK_THAT(message_of(base(R"({"L": 4, "t0": "x"})", "")),
               ContainsSubstring("circuit.t0"));
    CHECK_THAT(message_of(base(R"({"L": 4})", R"({"operator": "X9"})")),
               ContainsSubstring("randmeas.operator"));
    CHECK_THAT(message_of(base(R"({"L": 4})", R"({"operator": "Q1"})")),
               ContainsSubstring("randmeas.operator"));
    CHECK_THAT(message_of(base(R"({"L": 4})", R"({"variant": "BOTH"})")),
               ContainsSubstring("randmeas.variant"));
    CHECK_THAT(message_of(base(R"({"L": 4})", R"({"flip_sites": [0, 0]})")),
               ContainsSubstring("randmeas.flip_sites"));
    CHECK_THAT(message_of(base(R"({"L": 4})", R"({"num_unitaries": 0})")),
               ContainsSubstring("randmeas.num_unitaries"));
    CHECK_THAT(message_of(R"({"mode": "validate", "circuit": {"L": 7}})"),
               ContainsSubstring("L <= 6"));
    CHECK_THAT(message_of(R"({"mode": "scan", "circuit": {"L": 4},
                              "scan": {"n_short": 3}})"),
               ContainsSubstring("scan.n_short"));
}

TEST_CASE("Malformed JSON reports a line", "[config][errors]") {
    const std::string msg =
        message_of("{\n  \"mode\": \"dynamics\",\n  \"circuit\": {\"L\": 4,}\n}");
    CHECK_THAT(msg, ContainsSubstring("cfg.json:3"));
    CHECK_THAT(msg, ContainsSubstring("parse error"));
    CHECK_THAT(message_of("[1, 2]"), ContainsSubstring("object"));
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("Resolved config round-trips through JSON", "[config]") {
    for (const char *text :
         {R"({"mode": "dynamics", "seed": 9, "circuit": {"L": 5}})",
          R"({"mode": "scan", "circuit": {"L": 4}, "scan": {"num_phi": 3}})",
          R"({"mode": "randmeas", "circuit": {"L": 3}})",
          R"({"mode": "randmeas", "circuit": {"L": 3}, "randmeas": {"flip_sites": [2]}})",
          R"({"mode": "validate", "circuit": {"L": 4}})",
          R"({"mode": "export-qasm", "circuit": {"L": 2}})"}) {
        RunConfig cfg = parse_config(text);
        cfg.resolve();
        REQUIRE(cfg.circuit.phi.has_value());
        const auto j = cfg.to_json();
        RunConfig back = parse_config(j.dump());
        CHECK(back.to_json() == j);
        CHECK(*back.circuit.phi == *cfg.circuit.phi);
    }
    // A manifest document is accepted as a config.
    RunConfig cfg = parse_config(R"({"mode": "dynamics", "circuit": {"L": 5}})");
    cfg.resolve();
    nlohmann::json manifest{{"config", cfg.to_json()},
                            {"library_version", kLibraryVersion},
                            {"wall_clock_seconds", 0.1}};
    CHECK(parse_config(manifest.dump()).to_json() == cfg.to_json());
}

TEST_CASE("Phase drawn from the seed", "[config]") {
    RunConfig a = parse_config(R"({"mode": "dynamics", "seed": 1, "circuit": {"L": 4}})");
    RunConfig b = a;
    RunConfig c = parse_config(R"({"mode": "dynamics", "seed": 2, "circuit": {"L": 4}})");
    a.resolve();
    b.resolve();
    c.resolve();
    CHECK(*a.circuit.phi == *b.circuit.phi);
    CHECK(*a.circuit.phi != *c.circuit.phi);
}

TEST_CASE("execute writes results and a manifest", "[runner]") {
    const fs::path dir = scratch("dynamics");
    RunConfig cfg = parse_config(
        R"({"mode": "dynamics", "circuit": {"L": 4}, "dynamics": {"n_steps": 20}})");
    RunOptions opts;
    opts.output_dir = dir.string();
    const RunSummary s = execute(cfg, opts);
    CHECK(s.result_files == std::vector<std::string>{"norm_series.csv"});
    const std::string csv = slurp(dir / "norm_series.csv");
    CHECK(csv.rfind("step,size_sq\n1,", 0) == 0);
    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["library_version"] == kLibraryVersion);
    CHECK(manifest["config"]["output_dir"] == dir.string());
    CHECK(manifest["config"]["dynamics"]["n_steps"] == 20);
    CHECK(manifest["config"]["circuit"].contains("phi"));
    CHECK(manifest["result_files"].size() == 1);
    CHECK(manifest.contains("wall_clock_seconds"));
    // No temporary files remain.
    for (const auto &e : fs::directory_iterator(dir)) {
        CHECK(e.path().filename().string().front() != '.');
    }

    // Re-running from the manifest reproduces the result.
    const fs::path again = scratch("dynamics_again");
    RunOptions rerun;
    rerun.output_dir = again.string();
    execute(load_config((dir / "manifest.json").string()), rerun);
    CHECK(slurp(again / "norm_series.csv") == csv);
}

TEST_CASE("execute covers every mode", "[runner]") {
    struct Case {
        const char *text;
        const char *file;
    };
    for (const Case &c : {
             Case{R"({"mode": "scan", "circuit": {"L": 4},
                      "scan": {"num_points": 2, "n_long": 12, "n_short": 6, "num_phi": 2}})",
                  "scan.csv"},
             Case{R"({"mode": "randmeas", "circuit": {"L": 3},
                      "randmeas": {"num_unitaries": 8, "n_steps": 3}})",
                  "estimator.json"},
             Case{R"({"mode": "validate", "circuit": {"L": 3},
                      "validate": {"num_unitaries": 20, "n_steps": 4}})",
                  "validation_report.json"},
             Case{R"({"mode": "export-qasm", "circuit": {"L": 3}})", "circuit.qasm"},
         }) {
        const fs::path dir = scratch(c.file);
        RunOptions opts;
        opts.output_dir = dir.string();
        opts.threads = 2;
        execute(parse_config(c.text), opts);
        INFO(c.file);
        CHECK(fs::exists(dir / c.file));
        CHECK(fs::exists(dir / "manifest.json"));
    }
    const auto report = nlohmann::json::parse(
        slurp(scratch("unused").parent_path() / "validation_report.json" /
              "validation_report.json"));
    CHECK(report["L"] == 3);
    CHECK(report["variants"].size() == 2);
    CHECK(report["all_swapped_limit"]["pass"] == true);
    CHECK(report["doubled_space_vs_partial_trace"]["relative_error"].get<double>() <=
          1e-10);
}

TEST_CASE("Seed override changes the stochastic output", "[runner]") {
    const char *text = R"({"mode": "randmeas", "circuit": {"L": 3, "phi": 0.5},
                           "randmeas": {"num_unitaries": 8, "n_steps": 2}})";
    RunOptions a, b;
    a.output_dir = scratch("seed_a").string();
    b.output_dir = scratch("seed_b").string();
    b.seed = 77;
    execute(parse_config(text), a);
    execute(parse_config(text), b);
    const auto ja = nlohmann::json::parse(slurp(fs::path(*a.output_dir) / "estimator.json"));
    const auto jb = nlohmann::json::parse(slurp(fs::path(*b.output_dir) / "estimator.json"));
    CHECK(ja["seed"] == 0);
    CHECK(jb["seed"] == 77);
    CHECK(ja["estimate"] != jb["estimate"]);
}
