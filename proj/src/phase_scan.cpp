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

#include "floqmbl/phase_scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "floqmbl/csv.hpp"
#include "floqmbl/parallel.hpp"
#include "floqmbl/quantum_ops.hpp"
#include "floqmbl/rng.hpp"

namespace floqmbl {

void ScanTrajectory::validate() const {
    if (num_points < 2) {
        throw std::invalid_argument("ScanTrajectory: num_points must be >= 2");
    }
    if (num_qubits < 2 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("ScanTrajectory: bad qubit count");
    }
    const double values[] = {start.t0, start.theta0, end.t0, end.theta0, jz,
                             t_modulation, theta_modulation, wavenumber};
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("ScanTrajectory: non-finite parameter");
        }
    }
}

std::vector<ParamPoint> ScanTrajectory::points() const {
    std::vector<ParamPoint> out;
    out.reserve(static_cast<std::size_t>(num_points));
    for (int i = 0; i < num_points; ++i) {
        if (i == num_points - 1) {
            out.push_back(end);
            continue;
        }
        const double f = static_cast<double>(i) / (num_points - 1);
        out.push_back({start.t0 + f * (end.t0 - start.t0),
                       start.theta0 + f * (end.theta0 - start.theta0)});
    }
    return out;
}

CircuitConfig ScanTrajectory::circuit(const ParamPoint &p, double phi) const {
    CircuitConfig cfg;
    cfg.num_qubits = num_qubits;
    cfg.t = {p.t0, t_modulation * p.t0, wavenumber, phi};
    cfg.theta = {p.theta0, theta_modulation * p.theta0, wavenumber, phi};
    cfg.jz = jz;
    return cfg;
}

double FitResult::model(double n) const { return a * std::pow(n, -b) + c; }

namespace {

struct LinearFit {
    double a;
    double c;
    double rms;
};

LinearFit solve_for_exponent(std::span<const int> steps,
                             std::span<const double> sizes, double b) {
    const std::size_t count = steps.size();
    std::vector<double> x(count);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        x[i] = std::pow(static_cast<double>(steps[i]), -b);
        sx += x[i];
        sy += sizes[i];
        sxx += x[i] * x[i];
        sxy += x[i] * sizes[i];
    }
    const double nn = static_cast<double>(count);
    const double det = sxx * nn - sx * sx;
    double a = 0.0;
    double c = 0.0;
    if (det > 0.0) {
        a = (sxy * nn - sx * sy) / det;
        c = (sxx * sy - sx * sxy) / det;
    }
    if (!(det > 0.0) || c < 0.0) {
        c = 0.0;
        a = sxx > 0.0 ? sxy / sxx : 0.0;
    }
    double ss = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = a * x[i] + c - sizes[i];
        ss += r * r;
    }
    return {a, c, std::sqrt(ss / nn)};
}

double grid_exponent(int k) {
    const double span = std::log(kFitExponentMax / kFitExponentMin);
    return kFitExponentMin *
           std::exp(span * static_cast<double>(k) / (kFitGridPoints - 1));
}

} // namespace

FitResult fit_power_law(std::span<const int> steps,
                        std::span<const double> sizes) {
    if (steps.size() != sizes.size()) {
        throw std::invalid_argument("fit_power_law: length mismatch");
    }
    if (steps.size() < 4) {
        throw std::invalid_argument("fit_power_law: need at least 4 points");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] < 1 || (i > 0 && steps[i] <= steps[i - 1])) {
            throw std::invalid_argument(
                "fit_power_law: steps must be strictly increasing and >= 1");
        }
        if (!(sizes[i] >= 0.0)) {
            throw std::invalid_argument(
                "fit_power_law: sizes must be nonnegative");
        }
    }
    if (std::all_of(sizes.begin(), sizes.end(),
                    [&](double s) { return s == sizes[0]; })) {
        return {0.0, kFitExponentMin, sizes[0], 0.0};
    }

    int best_k = 0;
    LinearFit best = solve_for_exponent(steps, sizes, grid_exponent(0));
    for (int k = 1; k < kFitGridPoints; ++k) {
        const LinearFit f = solve_for_exponent(steps, sizes, grid_exponent(k));
        if (f.rms < best.rms) {
            best = f;
            best_k = k;
        }
    }
    FitResult result{best.a, grid_exponent(best_k), best.c, best.rms};

    // Golden-section refinement in log(b) between the neighbouring nodes.
    double lo = std::log(grid_exponent(std::max(best_k - 1, 0)));
    double hi = std::log(grid_exponent(std::min(best_k + 1, kFitGridPoints - 1)));
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    auto rms_at = [&](double log_b) {
        return solve_for_exponent(steps, sizes, std::exp(log_b)).rms;
    };
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = rms_at(x1);
    double f2 = rms_at(x2);
    for (int iter = 0; iter < 100 && hi - lo > 1e-13; ++iter) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = rms_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = rms_at(x2);
        }
    }
    const double b = std::exp(f1 <= f2 ? x1 : x2);
    const LinearFit refined = solve_for_exponent(steps, sizes, b);
    if (refined.rms < result.residual) {
        result = {refined.a, b, refined.c, refined.rms};
    }
    return result;
}

PauliString central_bond_xx(unsigned num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("central_bond_xx: need at least 2 qubits");
    }
    const unsigned right = num_qubits / 2;
    return PauliString({{right - 1, PauliAxis::X}, {right, PauliAxis::X}});
}

std::vector<double> disorder_phases(std::uint64_t seed, int count) {
    Engine engine = make_engine(seed, 0x5ca1ab1eULL);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        out.push_back(uniform(engine));
    }
    return out;
}

std::vector<ScanRecord> run_scan(const ScanTrajectory &traj,
                                 const ScanSettings &settings) {
    traj.validate();
    if (settings.num_phi < 1) {
        throw std::invalid_argument("run_scan: num_phi must be >= 1");
    }
    if (settings.n_short < 4 || settings.n_short > settings.n_long) {
        throw std::invalid_argument(
            "run_scan: need 4 <= n_short <= n_long");
    }
    const PauliString op = settings.op.factors().empty()
                               ? central_bond_xx(traj.num_qubits)
                               : settings.op;
    if (op.min_qubits() > traj.num_qubits) {
        throw std::invalid_argument("run_scan: operator exceeds register");
    }
    const auto points = traj.points();
    const auto phis = disorder_phases(settings.seed, settings.num_phi);
    std::vector<int> schedule = standard_schedule(settings.n_long);
    schedule.push_back(settings.n_short);
    std::sort(schedule.begin(), schedule.end());
    schedule.erase(std::unique(schedule.begin(), schedule.end()),
                   schedule.end());

    const std::size_t per_point = phis.size();
    std::vector<Realization> tasks(points.size() * per_point);
    const DenseOperator seed_op = pauli_to_dense(op, traj.num_qubits);
    const std::string label = op.to_string();

    parallel_for(tasks.size(), settings.threads, [&](std::size_t task) {
        const ParamPoint &p = points[task / per_point];
        const double phi = phis[task % per_point];
        const FloquetPeriod period = build_period(traj.circuit(p, phi));
        Realization r;
        r.phi = phi;
        r.series = evolve_heisenberg(seed_op, period, settings.n_long,
                                     schedule, label);
        std::vector<int> fit_steps;
        std::vector<double> fit_sizes;
        for (int n = 1; n <= settings.n_short; ++n) {
            fit_steps.push_back(n);
            fit_sizes.push_back(r.series.size_at(n));
        }
        r.fit = fit_power_law(fit_steps, fit_sizes);
        tasks[task] = std::move(r);
    });

    std::vector<ScanRecord> records;
    records.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        ScanRecord rec;
        rec.t = points[i].t0;
        rec.theta = points[i].theta0;
        rec.n_long = settings.n_long;
        rec.n_short = settings.n_short;
        double sum_long = 0.0, sum_short = 0.0, sum_c = 0.0;
        for (std::size_t k = 0; k < per_point; ++k) {
            Realization &r = tasks[i * per_point + k];
            sum_long += r.series.size_at(settings.n_long);
            sum_short += r.series.size_at(settings.n_short);
            sum_c += r.fit.c;
            rec.per_realization.push_back(std::move(r));
        }
        const double count = static_cast<double>(per_point);
        rec.size_long = sum_long / count;
        rec.size_short = sum_short / count;
        rec.extrapolated_c = sum_c / count;
        records.push_back(std::move(rec));
    }
    return records;
}

void write_scan_csv(std::ostream &out, const std::vector<ScanRecord> &records) {
    const int n_long = records.empty() ? 1000 : records.front().n_long;
    const int n_short = records.empty() ? 30 : records.front().n_short;
    out << "t,theta,size_n" << n_long << ",size_n" << n_short
        << ",extrapolated_c,n_realizations\n";
    for (const auto &r : records) {
        out << csv::real(r.t) << ',' << csv::real(r.theta) << ','
            << csv::real(r.size_long) << ',' << csv::real(r.size_short) << ','
            << csv::real(r.extrapolated_c) << ',' << r.per_realization.size()
            << '\n';
    }
}

void write_realizations_csv(std::ostream &out,
                            const std::vector<ScanRecord> &records) {
    out << "t,theta,phi,step,size_sq\n";
    for (const auto &r : records) {
        for (const auto &real : r.per_realization) {
            for (std::size_t i = 0; i < real.series.steps.size(); ++i) {
                out << csv::real(r.t) << ',' << csv::real(r.theta) << ','
                    << csv::real(real.phi) << ',' << real.series.steps[i]
                    << ',' << csv::real(real.series.sizes[i]) << '\n';
            }
        }
    }
}

} // namespace floqmbl
