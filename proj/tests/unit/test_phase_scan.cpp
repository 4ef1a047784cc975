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

#include <cmath>
#include <numbers>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "fit_cases.hpp"
#include "floqmbl/phase_scan.hpp"
#include "floqmbl/quantum_ops.hpp"

using namespace floqmbl;
using Catch::Matchers::WithinAbs;

namespace {

ScanTrajectory small_trajectory(int points) {
    ScanTrajectory traj;
    traj.num_qubits = 4;
    traj.num_points = points;
    return traj;
}

ScanSettings small_settings(int num_phi, std::uint64_t seed = 7) {
    ScanSettings s;
    s.n_long = 40;
    s.n_short = 10;
    s.num_phi = num_phi;
    s.seed = seed;
    return s;
}

} // namespace

TEST_CASE("Power-law fit recovers noiseless data", "[fit]") {
    const fit_cases::Case k{0.6, 0.5, 0.3};
    const FitResult f = fit_cases::fit(k);
    CHECK_THAT(f.a, WithinAbs(0.6, 1e-3));
    CHECK_THAT(f.b, WithinAbs(0.5, 1e-3));
    CHECK_THAT(f.c, WithinAbs(0.3, 1e-3));
    CHECK(f.residual <= 1e-9);
    CHECK_THAT(f.model(4.0), WithinAbs(0.6 / 2.0 + 0.3, 1e-6));

    const FitResult decay = fit_cases::fit({1.0, 1.0, 0.0});
    CHECK_THAT(decay.c, WithinAbs(0.0, 1e-3));
    CHECK_THAT(decay.b, WithinAbs(1.0, 1e-3));
    CHECK(decay.c >= 0.0);
}

TEST_CASE("Randomized fit suite", "[fit][property]") {
    for (const auto &k : fit_cases::suite(50, 2024)) {
        const FitResult f = fit_cases::fit(k);
        INFO("a=" << k.a << " b=" << k.b << " c=" << k.c << " -> " << f.a << ' '
                  << f.b << ' ' << f.c);
        REQUIRE(fit_cases::recovered(k, f));
    }
}

TEST_CASE("Constant series", "[fit]") {
    const std::vector<int> steps{1, 2, 3, 4, 5};
    const std::vector<double> sizes(5, 0.4);
    const FitResult f = fit_power_law(steps, sizes);
    CHECK(f.a == 0.0);
    CHECK(f.b == kFitExponentMin);
    CHECK(f.c == 0.4);
    CHECK(f.residual == 0.0);
}

TEST_CASE("Growing data clamps the offset at zero", "[fit]") {
    std::vector<int> steps;
    std::vector<double> sizes;
    for (int n = 1; n <= 10; ++n) {
        steps.push_back(n);
        sizes.push_back(1.0 - std::pow(n, -0.5));
    }
    const FitResult f = fit_power_law(steps, sizes);
    CHECK(f.c >= 0.0);
    CHECK(std::isfinite(f.a));
}

TEST_CASE("Fit argument checks", "[fit]") {
    const std::vector<double> four{1.0, 0.5, 0.4, 0.3};
    CHECK_THROWS_AS(fit_power_law(std::vector<int>{1, 2, 3},
                                  std::vector<double>{1.0, 0.5, 0.4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(std::vector<int>{1, 2, 3, 4},
                                  std::vector<double>{1.0, 0.5, 0.4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(std::vector<int>{1, 3, 2, 4}, four),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(std::vector<int>{0, 1, 2, 3}, four),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(std::vector<int>{1, 2, 3, 4},
                                  std::vector<double>{1.0, -0.5, 0.4, 0.3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(std::vector<int>{1, 2, 3, 4},
                                  std::vector<double>{1.0, NAN, 0.4, 0.3}),
                    std::invalid_argument);
}

TEST_CASE("Trajectory points", "[scan]") {
    ScanTrajectory traj;
    const auto pts = traj.points();
    REQUIRE(pts.size() == 13);
    CHECK(pts.front() == ParamPoint{0.2, 0.8});
    CHECK(pts.back() == ParamPoint{0.8, 0.2});
    CHECK_THAT(pts[6].t0, WithinAbs(0.5, 1e-15));
    CHECK_THAT(pts[6].theta0, WithinAbs(0.5, 1e-15));

    traj.num_points = 2;
    CHECK(traj.points() == std::vector<ParamPoint>{{0.2, 0.8}, {0.8, 0.2}});
    traj.num_points = 1;
    CHECK_THROWS_AS(traj.validate(), std::invalid_argument);
    traj.num_points = 5;
    traj.jz = INFINITY;
    CHECK_THROWS_AS(traj.validate(), std::invalid_argument);
}

TEST_CASE("Trajectory circuits", "[scan]") {
    ScanTrajectory traj;
    const CircuitConfig cfg = traj.circuit({0.5, 0.4}, 1.25);
    CHECK(cfg.num_qubits == 8);
    CHECK(cfg.t.base == 0.5);
    CHECK(cfg.t.amplitude == 0.2 * 0.5);
    CHECK(cfg.theta.amplitude == 0.2 * 0.4);
    CHECK(cfg.t.phase == 1.25);
    CHECK(cfg.theta.phase == 1.25);
    CHECK(cfg.jz == 0.1);
    CHECK(cfg.t.wavenumber == kGoldenWavenumber);
}

TEST_CASE("Central bond operator and disorder phases", "[scan]") {
    CHECK(central_bond_xx(8).to_string() == PauliString::parse("X3 X4").to_string());
    CHECK(central_bond_xx(5).to_string() == PauliString::parse("X1 X2").to_string());
    CHECK_THROWS_AS(central_bond_xx(1), std::invalid_argument);
    const auto phis = disorder_phases(3, 100);
    REQUIRE(phis.size() == 100);
    for (double p : phis) {
        REQUIRE(p >= 0.0);
        REQUIRE(p < 2.0 * std::numbers::pi);
    }
    CHECK(disorder_phases(3, 100) == phis);
    CHECK(disorder_phases(4, 100) != phis);
    // A prefix is stable when more phases are requested.
    const auto more = disorder_phases(3, 150);
    CHECK(std::equal(phis.begin(), phis.end(), more.begin()));
}

TEST_CASE("Two-point scan yields the endpoints", "[scan]") {
    const auto records = run_scan(small_trajectory(2), small_settings(2));
    REQUIRE(records.size() == 2);
    CHECK(records[0].t == 0.2);
    CHECK(records[0].theta == 0.8);
    CHECK(records[1].t == 0.8);
    CHECK(records[1].theta == 0.2);
    for (const auto &r : records) {
        CHECK(r.n_long == 40);
        CHECK(r.n_short == 10);
        CHECK(r.per_realization.size() == 2);
    }
}

TEST_CASE("Single realization means are that realization", "[scan]") {
    const auto records = run_scan(small_trajectory(3), small_settings(1));
    for (const auto &r : records) {
        REQUIRE(r.per_realization.size() == 1);
        const Realization &one = r.per_realization[0];
        CHECK(r.size_long == one.series.size_at(40));
        CHECK(r.size_short == one.series.size_at(10));
        CHECK(r.extrapolated_c == one.fit.c);
    }
}

TEST_CASE("Scan aggregates are arithmetic means", "[scan]") {
    const auto records = run_scan(small_trajectory(3), small_settings(3));
    const auto phis = disorder_phases(7, 3);
    for (const auto &r : records) {
        double sum_long = 0.0, sum_short = 0.0, sum_c = 0.0;
        for (std::size_t k = 0; k < r.per_realization.size(); ++k) {
            const Realization &x = r.per_realization[k];
            CHECK(x.phi == phis[k]);
            sum_long += x.series.size_at(40);
            sum_short += x.series.size_at(10);
            sum_c += x.fit.c;
            // Each realization is the plain evolution of its own circuit.
            const ScanTrajectory traj = small_trajectory(3);
            const FloquetPeriod period =
                build_period(traj.circuit({r.t, r.theta}, x.phi));
            const auto direct = evolve_heisenberg(
                pauli_to_dense(central_bond_xx(4), 4), period, 40, {10, 40});
            CHECK(direct.sizes[0] == x.series.size_at(10));
            CHECK(direct.sizes[1] == x.series.size_at(40));
        }
        CHECK_THAT(r.size_long, WithinAbs(sum_long / 3.0, 1e-15));
        CHECK_THAT(r.size_short, WithinAbs(sum_short / 3.0, 1e-15));
        CHECK_THAT(r.extrapolated_c, WithinAbs(sum_c / 3.0, 1e-15));
    }
}

TEST_CASE("Scan output is deterministic", "[scan][determinism]") {
    ScanSettings serial = small_settings(2, 11);
    ScanSettings threaded = serial;
    threaded.threads = 3;
    const auto a = run_scan(small_trajectory(3), serial);
    const auto b = run_scan(small_trajectory(3), threaded);
    std::ostringstream sa, sb, ra, rb;
    write_scan_csv(sa, a);
    write_scan_csv(sb, b);
    write_realizations_csv(ra, a);
    write_realizations_csv(rb, b);
    CHECK(sa.str() == sb.str());
    CHECK(ra.str() == rb.str());
}

TEST_CASE("Scan CSV layout", "[scan][io]") {
    const auto records = run_scan(small_trajectory(2), small_settings(1));
    std::ostringstream out, per;
    write_scan_csv(out, records);
    write_realizations_csv(per, records);
    std::istringstream lines(out.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "t,theta,size_n40,size_n10,extrapolated_c,n_realizations");
    CHECK(first.rfind("0.20000000000000001,0.80000000000000004,", 0) == 0);
    CHECK(first.substr(first.size() - 2) == ",1");
    CHECK(per.str().rfind("t,theta,phi,step,size_sq\n", 0) == 0);
    const auto steps = records[0].per_realization[0].series.steps.size();
    const std::string text = per.str();
    CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) ==
          1 + 2 * steps);
}

TEST_CASE("Scan argument checks", "[scan]") {
    ScanSettings s = small_settings(0);
    CHECK_THROWS_AS(run_scan(small_trajectory(2), s), std::invalid_argument);
    s = small_settings(1);
    s.n_short = 50;
    CHECK_THROWS_AS(run_scan(small_trajectory(2), s), std::invalid_argument);
    s = small_settings(1);
    s.op = PauliString::parse("X7");
    CHECK_THROWS_AS(run_scan(small_trajectory(2), s), std::invalid_argument);
    CHECK_THROWS_AS(run_scan(small_trajectory(1), small_settings(1)),
                    std::invalid_argument);
}
