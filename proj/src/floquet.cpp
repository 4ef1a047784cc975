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

#include "floqmbl/floquet.hpp"

#include <cstdio>
#include <sstream>

namespace floqmbl {

double QuasiPeriodicParams::value(unsigned i) const {
    if (amplitude == 0.0) {
        return base;
    }
    return base + amplitude * std::cos(2.0 * std::numbers::pi * wavenumber *
                                           static_cast<double>(i) +
                                       phase);
}

void CircuitConfig::validate() const {
    if (num_qubits < 2 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("CircuitConfig: L must be in [2, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(num_qubits));
    }
    const double values[] = {theta.base, theta.amplitude, theta.wavenumber,
                             theta.phase, t.base, t.amplitude,
                             t.wavenumber, t.phase, jz};
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(
                "CircuitConfig: parameters must be finite");
        }
    }
}

CircuitConfig CircuitConfig::with_defaults(unsigned num_qubits, double t0,
                                           double theta0, double phi,
                                           double jz, double modulation) {
    CircuitConfig cfg;
    cfg.num_qubits = num_qubits;
    cfg.t = {t0, modulation * t0, kGoldenWavenumber, phi};
    cfg.theta = {theta0, modulation * theta0, kGoldenWavenumber, phi};
    cfg.jz = jz;
    return cfg;
}

FloquetPeriod build_period(const CircuitConfig &cfg) {
    cfg.validate();
    FloquetPeriod period;
    period.config_ = cfg;
    const unsigned n = cfg.num_qubits;
    auto &gates = period.gates_;
    gates.reserve(n + (n - 1));
    for (unsigned i = 0; i < n; ++i) {
        gates.push_back(Gate::single(i, z_rotation(cfg.theta.value(i)),
                                     "rot" + std::to_string(i)));
    }
    for (unsigned parity = 0; parity < 2; ++parity) {
        for (unsigned i = parity; i + 1 < n; i += 2) {
            gates.push_back(Gate::two(i, i + 1,
                                      xx_zz_rotation(cfg.t.value(i), cfg.jz),
                                      "bond" + std::to_string(i)));
        }
    }
    return period;
}

namespace {

std::string angle(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string export_qasm(const FloquetPeriod &period, int repetitions) {
    if (repetitions < 1) {
        throw std::invalid_argument("export_qasm: repetitions must be >= 1");
    }
    const CircuitConfig &cfg = period.config();
    std::ostringstream out;
    out << "OPENQASM 3.0;\n";
    out << "include \"stdgates.inc\";\n";
    out << "qubit[" << cfg.num_qubits << "] q;\n";
    for (int rep = 0; rep < repetitions; ++rep) {
        out << "// period " << rep + 1 << '\n';
        for (const Gate &g : period.gates()) {
            const auto tg = g.targets();
            if (g.arity() == 1) {
                // rz(a) = exp(-i a Z / 2)
                out << "rz(" << angle(2.0 * cfg.theta.value(tg[0])) << ") q["
                    << tg[0] << "];\n";
                continue;
            }
            // CX (exp(-i a X_c) exp(-i b Z_t)) CX = exp(-i (a XX + b ZZ))
            const std::string c = "q[" + std::to_string(tg[0]) + "]";
            const std::string t = "q[" + std::to_string(tg[1]) + "]";
            out << "cx " << c << ", " << t << ";\n";
            out << "rx(" << angle(2.0 * cfg.t.value(tg[0])) << ") " << c
                << ";\n";
            out << "rz(" << angle(2.0 * cfg.jz) << ") " << t << ";\n";
            out << "cx " << c << ", " << t << ";\n";
        }
    }
    return out.str();
}

} // namespace floqmbl
