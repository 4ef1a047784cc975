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
#include <iosfwd>
#include <span>
#include <vector>

#include "floqmbl/dynamics.hpp"
#include "floqmbl/pauli.hpp"

namespace floqmbl {

struct ParamPoint {
    double t0 = 0.0;
    double theta0 = 0.0;

    friend bool operator==(const ParamPoint &, const ParamPoint &) = default;
};

/// Evenly spaced points on the segment start -> end, endpoints included.
struct ScanTrajectory {
    ParamPoint start{0.2, 0.8};
    ParamPoint end{0.8, 0.2};
    int num_points = 13;

    unsigned num_qubits = 8;
    double jz = 0.1;
    double t_modulation = 0.2;     // t1 = t_modulation * t0
    double theta_modulation = 0.2; // theta1 = theta_modulation * theta0
    double wavenumber = kGoldenWavenumber;

    void validate() const;
    [[nodiscard]] std::vector<ParamPoint> points() const;
    /// Circuit at `p` for disorder phase `phi`.
    [[nodiscard]] CircuitConfig circuit(const ParamPoint &p, double phi) const;
};

/// sizes ~ a * n^-b + c
struct FitResult {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double residual = 0.0; // root mean square misfit

    [[nodiscard]] double model(double n) const;
};

inline constexpr double kFitExponentMin = 0.05;
inline constexpr double kFitExponentMax = 3.0;
inline constexpr int kFitGridPoints = 200;

/// Power-law fit with c >= 0. The exponent is scanned on a logarithmic grid
/// over [kFitExponentMin, kFitExponentMax]; for each exponent (a, c) solve a
/// linear least-squares problem. The best grid cell is then refined by a
/// golden-section search over its neighbours. Deterministic.
///
/// Throws std::invalid_argument for fewer than 4 points, non-increasing
/// steps, steps < 1 or negative sizes.
FitResult fit_power_law(std::span<const int> steps,
                        std::span<const double> sizes);

struct Realization {
    double phi = 0.0;
    NormSeries series;
    FitResult fit;
};

struct ScanRecord {
    double t = 0.0;
    double theta = 0.0;
    int n_long = 0;
    int n_short = 0;
    double size_long = 0.0;
    double size_short = 0.0;
    double extrapolated_c = 0.0;
    std::vector<Realization> per_realization;
};

struct ScanSettings {
    int n_long = 1000;
    int n_short = 30;
    int num_phi = 8;
    std::uint64_t seed = 0;
    PauliString op; // defaults to X on the two central sites when empty
    unsigned threads = 1;
};

/// X on sites L/2 - 1 and L/2.
PauliString central_bond_xx(unsigned num_qubits);

/// Disorder phases for a scan, uniform on [0, 2 pi), shared by every point.
std::vector<double> disorder_phases(std::uint64_t seed, int count);

/// Runs every (point, phi) task, fitting steps 1..n_short of each series.
std::vector<ScanRecord> run_scan(const ScanTrajectory &traj,
                                 const ScanSettings &settings);

/// `t,theta,size_n<long>,size_n<short>,extrapolated_c,n_realizations`
void write_scan_csv(std::ostream &out, const std::vector<ScanRecord> &records);

/// `t,theta,phi,step,size_sq`
void write_realizations_csv(std::ostream &out,
                            const std::vector<ScanRecord> &records);

} // namespace floqmbl
