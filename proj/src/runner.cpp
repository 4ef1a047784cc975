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

#include "floqmbl/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "floqmbl/dynamics.hpp"
#include "floqmbl/kernels.hpp"
#include "floqmbl/quantum_ops.hpp"

namespace floqmbl {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class OutputDir {
  public:
    explicit OutputDir(fs::path root) : root_(std::move(root)) {
        fs::create_directories(root_);
    }

    // Writes `name` (a bare file name) atomically.
    void write(const std::string &name, const std::string &content) {
        if (fs::path(name).has_parent_path()) {
            throw std::logic_error("output file names must be bare: " + name);
        }
        const fs::path target = root_ / name;
        const fs::path temp = root_ / ("." + name + ".tmp");
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw std::runtime_error("cannot write " + temp.string());
            }
            out << content;
            out.flush();
            if (!out) {
                throw std::runtime_error("short write to " + temp.string());
            }
        }
        fs::rename(temp, target);
        files_.push_back(name);
    }

    [[nodiscard]] const fs::path &root() const { return root_; }
    [[nodiscard]] const std::vector<std::string> &files() const {
        return files_;
    }

  private:
    fs::path root_;
    std::vector<std::string> files_;
};

std::vector<unsigned> all_sites(unsigned n) {
    std::vector<unsigned> out(n);
    for (unsigned q = 0; q < n; ++q) {
        out[q] = q;
    }
    return out;
}

} // namespace

json validation_report(const CircuitConfig &circuit, const PauliString &op,
                       int n_steps, int num_unitaries, std::uint64_t seed,
                       unsigned threads) {
    const unsigned n = circuit.num_qubits;
    const FloquetPeriod period = build_period(circuit);
    const DenseOperator averaged =
        time_averaged_operator(pauli_to_dense(op, n), period, n_steps);
    const double exact = operator_size_sq(averaged);
    const auto sites = all_sites(n);

    json report;
    report["L"] = n;
    report["m"] = n;
    report["operator"] = op.to_string();
    report["n_steps"] = n_steps;
    report["num_unitaries"] = num_unitaries;
    report["seed"] = seed;
    report["exact_value"] = exact;

    json variants = json::array();
    std::string best;
    double best_offset = INFINITY;
    for (EstimatorVariant v : {EstimatorVariant::PaperLiteral,
                               EstimatorVariant::CrossCorrelation}) {
        RandomMeasConfig cfg{n, sites, num_unitaries, n_steps, seed, v};
        const EstimatorResult r =
            estimate_time_averaged_size(op, period, cfg, threads);
        json entry = to_json(r);
        const double predicted_mean = expected_estimate(averaged, sites, v);
        entry["predicted_mean"] = predicted_mean;
        bool pass = false;
        if (std::isfinite(r.calibration) && r.calibration != 0.0) {
            const double calibrated = r.calibrated();
            const double calibrated_se = r.std_error / std::abs(r.calibration);
            const double z = calibrated_se > 0.0
                                 ? (calibrated - exact) / calibrated_se
                                 : (calibrated == exact ? 0.0 : INFINITY);
            pass = std::abs(z) <= 3.0;
            entry["calibrated_estimate"] = calibrated;
            entry["calibrated_std_error"] = calibrated_se;
            entry["z_score"] = z;
        }
        entry["within_3_std_errors"] = pass;
        if (pass && std::abs(r.calibration - 1.0) < best_offset) {
            best_offset = std::abs(r.calibration - 1.0);
            best = std::string(to_string(v));
        }
        variants.push_back(entry);
    }
    report["variants"] = variants;

    // All sites swapped: the right-hand side reduces to 4^-L Tr(O^2).
    const double rhs = exact_rhs_small_L(averaged, n, sites);
    const double trace_sq = exact * static_cast<double>(dim_of(n));
    const double expected_ratio = std::pow(0.25, n);
    const double ratio = trace_sq != 0.0 ? rhs / trace_sq : NAN;
    const double rel = std::abs(ratio / expected_ratio - 1.0);
    report["all_swapped_limit"] = {{"rhs", rhs},
                                   {"trace_O_sq", trace_sq},
                                   {"ratio", ratio},
                                   {"expected_ratio", expected_ratio},
                                   {"relative_error", rel},
                                   {"pass", rel <= 1e-10}};

    const double cross = expected_estimate(
        averaged, sites, EstimatorVariant::CrossCorrelation);
    const double doubled = std::ldexp(rhs, static_cast<int>(n));
    report["doubled_space_vs_partial_trace"] = {
        {"two_pow_m_times_rhs", doubled},
        {"cross_correlation_mean", cross},
        {"relative_error", std::abs(doubled - cross) /
                               std::max(std::abs(cross), 1e-300)}};
    report["default_variant"] = best.empty() ? json(nullptr) : json(best);
    return report;
}

RunSummary execute(RunConfig cfg, const RunOptions &options) {
    const auto started = std::chrono::steady_clock::now();
    if (options.output_dir) {
        cfg.output_dir = *options.output_dir;
    }
    if (options.seed) {
        cfg.seed = *options.seed;
    }
    cfg.resolve();
    const unsigned threads = std::max(1u, options.threads);
    OutputDir out{fs::path(cfg.output_dir)};
    const CircuitConfig circuit = cfg.circuit.circuit(*cfg.circuit.phi);

    switch (cfg.mode) {
    case RunMode::Dynamics: {
        const PauliString op = PauliString::parse(cfg.dynamics.op);
        const FloquetPeriod period = build_period(circuit);
        const NormSeries series = evolve_heisenberg(
            pauli_to_dense(op, circuit.num_qubits), period,
            cfg.dynamics.n_steps, standard_schedule(cfg.dynamics.n_steps),
            op.to_string());
        std::ostringstream csv;
        write_csv(csv, series);
        out.write("norm_series.csv", csv.str());
        break;
    }
    case RunMode::Scan: {
        ScanTrajectory traj;
        traj.start = cfg.scan.start;
        traj.end = cfg.scan.end;
        traj.num_points = cfg.scan.num_points;
        traj.num_qubits = cfg.circuit.num_qubits;
        traj.jz = cfg.circuit.jz;
        traj.t_modulation = cfg.circuit.t_modulation;
        traj.theta_modulation = cfg.circuit.theta_modulation;
        traj.wavenumber = cfg.circuit.wavenumber;
        ScanSettings settings;
        settings.n_long = cfg.scan.n_long;
        settings.n_short = cfg.scan.n_short;
        settings.num_phi = cfg.scan.num_phi;
        settings.seed = cfg.seed;
        settings.op = PauliString::parse(cfg.scan.op);
        settings.threads = threads;
        const auto records = run_scan(traj, settings);
        std::ostringstream scan_csv, real_csv;
        write_scan_csv(scan_csv, records);
        write_realizations_csv(real_csv, records);
        out.write("scan.csv", scan_csv.str());
        out.write("scan_realizations.csv", real_csv.str());
        break;
    }
    case RunMode::RandMeas: {
        const PauliString op = PauliString::parse(cfg.randmeas.op);
        RandomMeasConfig rm{circuit.num_qubits,
                            cfg.randmeas.flip_sites.value_or(
                                all_sites(circuit.num_qubits)),
                            cfg.randmeas.num_unitaries, cfg.randmeas.n_steps,
                            cfg.seed, cfg.randmeas.variant};
        const EstimatorResult r = estimate_time_averaged_size(
            op, build_period(circuit), rm, threads);
        out.write("estimator.json", to_json(r).dump(2) + "\n");
        break;
    }
    case RunMode::Validate: {
        const json report = validation_report(
            circuit, PauliString::parse(cfg.validate.op),
            cfg.validate.n_steps, cfg.validate.num_unitaries, cfg.seed,
            threads);
        out.write("validation_report.json", report.dump(2) + "\n");
        break;
    }
    case RunMode::ExportQasm:
        out.write("circuit.qasm", export_qasm(build_period(circuit),
                                              cfg.export_qasm.repetitions));
        break;
    }

    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    json manifest;
    manifest["config"] = cfg.to_json();
    manifest["library_version"] = kLibraryVersion;
    manifest["wall_clock_seconds"] = seconds;
    manifest["threads"] = threads;
    manifest["kernel"] = std::string(kernels::active().name);
    manifest["result_files"] = out.files();
    out.write("manifest.json", manifest.dump(2) + "\n");

    RunSummary summary;
    summary.output_dir = out.root();
    summary.result_files = out.files();
    summary.result_files.pop_back(); // manifest
    return summary;
}

} // namespace floqmbl
