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

#include "floqmbl/dynamics.hpp"
#include "floqmbl/quantum_ops.hpp"
#include "oracle.hpp"

using namespace floqmbl;
using Catch::Matchers::WithinAbs;

namespace {

CircuitConfig clean(unsigned n, double t0, double theta0, double jz) {
    return CircuitConfig::with_defaults(n, t0, theta0, 0.0, jz, 0.0);
}

/// Series by explicit matrix products: O(jT) = (U^dag)^j O U^j.
std::vector<double> oracle_series(const FloquetPeriod &period,
                                  const oracle::Mat &seed,
                                  const std::vector<int> &steps) {
    const oracle::Mat u = oracle::period_unitary(period);
    const double d = static_cast<double>(seed.rows());
    oracle::Mat op = seed;
    oracle::Mat sum = oracle::Mat::Zero(seed.rows(), seed.cols());
    std::vector<double> out;
    auto next = steps.begin();
    for (int j = 1; next != steps.end(); ++j) {
        op = u.adjoint() * op * u;
        sum += op;
        if (*next == j) {
            const oracle::Mat avg = sum / static_cast<double>(j);
            out.push_back((avg * avg).trace().real() / d);
            ++next;
        }
    }
    return out;
}

DenseOperator parity(unsigned n) {
    std::vector<PauliFactor> f;
    for (unsigned q = 0; q < n; ++q) {
        f.push_back({q, PauliAxis::Z});
    }
    return pauli_to_dense(PauliString(f), n);
}

} // namespace

TEST_CASE("standard_schedule", "[dynamics]") {
    CHECK(standard_schedule(1) == std::vector<int>{1});
    CHECK(standard_schedule(4) == std::vector<int>{1, 2, 3, 4});
    const auto s = standard_schedule(1000);
    CHECK(s.size() == 30 + 5 + 1); // 32..512 and 1000 beyond the first 30
    CHECK(s.back() == 1000);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
}

TEST_CASE("Identity period keeps every Pauli seed at unit size", "[dynamics]") {
    const FloquetPeriod period = build_period(clean(3, 0.0, 0.0, 0.0));
    for (const char *text : {"X0", "Y1 Z2", "X0 X1 X2", "Z1"}) {
        const auto series =
            evolve_heisenberg(pauli_to_dense(PauliString::parse(text), 3), period,
                              40, standard_schedule(40), text);
        for (double s : series.sizes) {
            REQUIRE_THAT(s, WithinAbs(1.0, 1e-12));
        }
        CHECK(series.op_label == text);
    }
}

TEST_CASE("Z seed under a pure rotation layer", "[dynamics]") {
    const FloquetPeriod period =
        build_period(CircuitConfig::with_defaults(4, 0.0, 0.9, 1.1, 0.0));
    const auto series = evolve_heisenberg(
        pauli_to_dense(PauliString::parse("Z2"), 4), period, 100,
        standard_schedule(100));
    for (double s : series.sizes) {
        REQUIRE_THAT(s, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("Evolution matches the full-matrix oracle", "[dynamics][oracle]") {
    const FloquetPeriod period =
        build_period(CircuitConfig::with_defaults(4, 0.2, 0.8, 0.7));
    const PauliString seed = PauliString::parse("X1 X2");
    const auto steps = standard_schedule(64);
    const auto series =
        evolve_heisenberg(pauli_to_dense(seed, 4), period, 64, steps);
    const auto want = oracle_series(period, oracle::pauli_dense(seed, 4), steps);
    REQUIRE(series.steps == steps);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        INFO("step " << steps[i]);
        REQUIRE_THAT(series.sizes[i], WithinAbs(want[i], 1e-9));
    }

    // First recorded size is the size of the one-step operator.
    DenseOperator one = pauli_to_dense(seed, 4);
    for (auto g = period.gates().rbegin(); g != period.gates().rend(); ++g) {
        conjugate_operator(one, *g);
    }
    CHECK(series.sizes[0] == operator_size_sq(one));
}

TEST_CASE("time_averaged_operator agrees with the oracle", "[dynamics][oracle]") {
    const FloquetPeriod period =
        build_period(CircuitConfig::with_defaults(3, 0.5, 0.3, 2.0, 0.2));
    const PauliString seed = PauliString::parse("Y0 X1");
    const oracle::Mat u = oracle::period_unitary(period);
    oracle::Mat op = oracle::pauli_dense(seed, 3);
    oracle::Mat sum = oracle::Mat::Zero(8, 8);
    for (int j = 1; j <= 17; ++j) {
        op = u.adjoint() * op * u;
        sum += op;
    }
    const DenseOperator avg =
        time_averaged_operator(pauli_to_dense(seed, 3), period, 17);
    CHECK(oracle::max_abs_diff(oracle::to_eigen(avg), sum / 17.0) <= 1e-12);
}

TEST_CASE("running_average_size", "[dynamics]") {
    const unsigned n = 3;
    const DenseOperator p = pauli_to_dense(PauliString::parse("X0 Z2"), n);
    DenseOperator five = p;
    five *= 5.0;
    CHECK_THAT(running_average_size(five, 5), WithinAbs(1.0, 1e-15));
    CHECK(running_average_size(DenseOperator(n), 3) == 0.0);

    DenseOperator pair = p;
    pair += pauli_to_dense(PauliString::parse("Y1"), n);
    const DenseOperator before = pair;
    CHECK_THAT(running_average_size(pair, 2), WithinAbs(0.5, 1e-15));
    CHECK(pair == before);
    CHECK_THROWS_AS(running_average_size(pair, 0), std::invalid_argument);
}

TEST_CASE("Time averaging contracts the size", "[dynamics][property]") {
    for (double phi : {0.0, 1.3, 4.0}) {
        const FloquetPeriod period =
            build_period(CircuitConfig::with_defaults(5, 0.6, 0.4, phi, 0.15));
        for (const char *text : {"X2 X3", "Z0", "Y1 Z4"}) {
            const auto series =
                evolve_heisenberg(pauli_to_dense(PauliString::parse(text), 5),
                                  period, 200, standard_schedule(200));
            for (double s : series.sizes) {
                REQUIRE(s >= 0.0);
                REQUIRE(s <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("Seeds commuting with the period stay at unit size",
          "[dynamics][property]") {
    // The Z parity commutes with Z rotations, XX and ZZ bonds alike.
    for (unsigned n : {2U, 4U, 5U}) {
        const FloquetPeriod period =
            build_period(CircuitConfig::with_defaults(n, 0.2, 0.8, 0.9));
        const auto series = evolve_heisenberg(parity(n), period, 300,
                                              standard_schedule(300));
        for (double s : series.sizes) {
            REQUIRE_THAT(s, WithinAbs(1.0, 1e-9));
        }
    }
}

TEST_CASE("X seed under pure rotations averages out", "[dynamics][oracle]") {
    // X(jT) = cos(2 theta j) X + sin(2 theta j) Y, so the running average has
    // size sin^2(n theta) / (n sin theta)^2.
    const double theta = std::sqrt(2.0) * std::numbers::pi / 5.0;
    const FloquetPeriod period = build_period(clean(3, 0.0, theta, 0.0));
    const std::vector<int> steps{1, 2, 10, 64, 1000};
    const auto series = evolve_heisenberg(
        pauli_to_dense(PauliString::parse("X0"), 3), period, 1000, steps);
    const auto want = oracle_series(
        period, oracle::pauli_dense(PauliString::parse("X0"), 3), steps);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const double n = steps[i];
        const double closed = std::pow(std::sin(n * theta), 2) /
                              std::pow(n * std::sin(theta), 2);
        REQUIRE_THAT(series.sizes[i], WithinAbs(closed, 1e-10));
        REQUIRE_THAT(series.sizes[i], WithinAbs(want[i], 1e-9));
    }
    CHECK(series.size_at(1000) < 1e-5);
}

TEST_CASE("Heisenberg sizes agree with Schroedinger expectations",
          "[dynamics][duality]") {
    // <psi|O(jT)|psi> equals <U^j psi|O|U^j psi> at every step.
    std::mt19937_64 rng(8);
    const FloquetPeriod period =
        build_period(CircuitConfig::with_defaults(4, 0.3, 0.7, 0.2));
    const PauliString p = PauliString::parse("X1 X2");
    DenseOperator op = pauli_to_dense(p, 4);
    const StateVector psi0 = oracle::random_state(4, rng);
    StateVector psi = psi0;
    for (int j = 1; j <= 30; ++j) {
        for (auto g = period.gates().rbegin(); g != period.gates().rend(); ++g) {
            conjugate_operator(op, *g);
        }
        for (const Gate &g : period.gates()) {
            apply_gate(psi, g);
        }
        REQUIRE_THAT(expectation(psi0, op), WithinAbs(expectation(psi, p), 1e-10));
    }
}

TEST_CASE("evolve_heisenberg argument checks", "[dynamics]") {
    const FloquetPeriod period = build_period(clean(3, 0.1, 0.2, 0.1));
    const DenseOperator op = pauli_to_dense(PauliString::parse("Z0"), 3);
    CHECK_THROWS_AS(evolve_heisenberg(DenseOperator(4), period, 5, {1}),
                    DimensionMismatch);
    CHECK_THROWS_AS(evolve_heisenberg(op, period, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(evolve_heisenberg(op, period, 5, {3, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve_heisenberg(op, period, 5, {0, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve_heisenberg(op, period, 5, {6}), std::invalid_argument);
    const auto s = evolve_heisenberg(op, period, 5, {2, 5});
    CHECK_THROWS_AS(s.size_at(3), std::out_of_range);
    CHECK_THROWS_AS(time_averaged_operator(DenseOperator(2), period, 1),
                    DimensionMismatch);
}

TEST_CASE("NormSeries CSV", "[dynamics][io]") {
    NormSeries s;
    s.steps = {1, 2};
    s.sizes = {1.0, 0.1};
    std::ostringstream out;
    write_csv(out, s);
    CHECK(out.str() == "step,size_sq\n1,1\n2,0.10000000000000001\n");
}
