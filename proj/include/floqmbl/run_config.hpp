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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "floqmbl/phase_scan.hpp"
#include "floqmbl/random_measurement.hpp"

#include "json.hpp"

namespace floqmbl {

/// Malformed or invalid configuration. The message names the offending field
/// and, where it can be located, the line of the config file.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class RunMode { Dynamics, Scan, RandMeas, Validate, ExportQasm };

std::string to_string(RunMode mode);

struct CircuitSection {
    unsigned num_qubits = 0; // required
    double t0 = 0.2;
    double theta0 = 0.8;
    double t_modulation = 0.2;
    double theta_modulation = 0.2;
    double wavenumber = kGoldenWavenumber;
    double jz = 0.1;
    std::optional<double> phi; // drawn from the seed when absent

    [[nodiscard]] CircuitConfig circuit(double phi_value) const;
};

struct DynamicsSection {
    std::string op; // central bond XX when empty
    int n_steps = 1000;
};

struct ScanSection {
    ParamPoint start{0.2, 0.8};
    ParamPoint end{0.8, 0.2};
    int num_points = 13;
    int n_long = 1000;
    int n_short = 30;
    int num_phi = 8;
    std::string op;
};

struct RandMeasSection {
    std::string op;
    std::optional<std::vector<unsigned>> flip_sites; // all sites when absent
    int num_unitaries = 2000;
    int n_steps = 32;
    EstimatorVariant variant = EstimatorVariant::CrossCorrelation;
};

struct ValidateSection {
    std::string op;
    int num_unitaries = 2000;
    int n_steps = 32;
};

struct ExportSection {
    int repetitions = 1;
};

struct RunConfig {
    RunMode mode = RunMode::Dynamics;
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    CircuitSection circuit;
    DynamicsSection dynamics;
    ScanSection scan;
    RandMeasSection randmeas;
    ValidateSection validate;
    ExportSection export_qasm;

    /// Fills seed-dependent defaults (phi) so the config fully determines the
    /// run.
    void resolve();

    /// JSON with every field materialized; only the active mode's block is
    /// emitted. parse_config(to_json()) reproduces the config.
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Parses a config document. A manifest written by a previous run (an object
/// with "config" and "library_version") is accepted and its "config" used.
/// `source_name` prefixes error messages. Throws ConfigError.
RunConfig parse_config(const std::string &text,
                       const std::string &source_name = "config");

/// Reads and parses a file. Throws ConfigError when unreadable.
RunConfig load_config(const std::string &path);

} // namespace floqmbl
