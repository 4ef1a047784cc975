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

#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "floqmbl/gate.hpp"

namespace floqmbl {

/// Inverse golden ratio, (sqrt(5) - 1) / 2.
inline constexpr double kGoldenWavenumber = 0.61803398874989484820458683436564;

/// Site-dependent parameter base + amplitude * cos(2 pi k i + phase).
struct QuasiPeriodicParams {
    double base = 0.0;
    double amplitude = 0.0;
    double wavenumber = kGoldenWavenumber;
    double phase = 0.0;

    /// Value at site or bond `i`. With amplitude == 0 this is exactly `base`.
    [[nodiscard]] double value(unsigned i) const;
};

inline double quasi_periodic_value(const QuasiPeriodicParams &p, unsigned i) {
    return p.value(i);
}

struct CircuitConfig {
    unsigned num_qubits = 0;
    QuasiPeriodicParams theta; // rotation layer
    QuasiPeriodicParams t;     // coupling layers
    double jz = 0.1;

    /// Throws std::invalid_argument when L < 2, L exceeds kMaxQubits, or a
    /// parameter is not finite.
    void validate() const;

    /// Default modulation: amplitudes 0.2 * base on both layers, a shared
    /// disorder phase `phi`.
    static CircuitConfig with_defaults(unsigned num_qubits, double t0,
                                       double theta0, double phi,
                                       double jz = 0.1,
                                       double modulation = 0.2);
};

/// One driving period: the L single-qubit rotations exp(-i theta_i Z), the
/// even-bond couplings exp(-i (t_i XX + jz ZZ)) on (0,1), (2,3), ..., then
/// the odd bonds (1,2), (3,4), ... Open boundary.
class FloquetPeriod {
  public:
    [[nodiscard]] unsigned num_qubits() const { return config_.num_qubits; }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    [[nodiscard]] const CircuitConfig &config() const { return config_; }

    friend FloquetPeriod build_period(const CircuitConfig &cfg);

  private:
    CircuitConfig config_;
    std::vector<Gate> gates_;
};

FloquetPeriod build_period(const CircuitConfig &cfg);

/// OpenQASM 3 program running `repetitions` periods. Single-qubit rotations
/// are emitted as rz, each bond gate as cx; rx; rz; cx. Throws
/// std::invalid_argument for repetitions < 1.
std::string export_qasm(const FloquetPeriod &period, int repetitions);

} // namespace floqmbl
