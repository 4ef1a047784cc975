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

#include "floqmbl/dynamics.hpp"

#include <algorithm>
#include <ostream>

#include "floqmbl/csv.hpp"
#include "floqmbl/kernels.hpp"
#include "floqmbl/quantum_ops.hpp"

namespace floqmbl {

double NormSeries::size_at(int n) const {
    const auto it = std::lower_bound(steps.begin(), steps.end(), n);
    if (it == steps.end() || *it != n) {
        throw std::out_of_range("NormSeries: step " + std::to_string(n) +
                                " was not recorded");
    }
    return sizes[static_cast<std::size_t>(it - steps.begin())];
}

std::vector<int> standard_schedule(int n) {
    std::vector<int> out;
    for (int j = 1; j <= std::min(30, n); ++j) {
        out.push_back(j);
    }
    for (long long p = 1; p <= n; p *= 2) {
        out.push_back(static_cast<int>(p));
    }
    if (n >= 1) {
        out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double running_average_size(const DenseOperator &accumulator, int j) {
    if (j < 1) {
        throw std::invalid_argument("running_average_size: j must be >= 1");
    }
    const double scale = 1.0 / static_cast<double>(j);
    return operator_size_sq(accumulator) * scale * scale;
}

NormSeries evolve_heisenberg(DenseOperator op, const FloquetPeriod &period,
                             int n, const std::vector<int> &record_at,
                             std::string op_label) {
    if (op.num_qubits() != period.num_qubits()) {
        throw DimensionMismatch("evolve_heisenberg: operator has " +
                                std::to_string(op.num_qubits()) +
                                " qubits, period has " +
                                std::to_string(period.num_qubits()));
    }
    if (n < 1) {
        throw std::invalid_argument("evolve_heisenberg: n must be >= 1");
    }
    if (!std::is_sorted(record_at.begin(), record_at.end()) ||
        (!record_at.empty() && (record_at.front() < 1 || record_at.back() > n))) {
        throw std::invalid_argument(
            "evolve_heisenberg: record_at must be sorted within [1, n]");
    }

    NormSeries series;
    series.op_label = std::move(op_label);
    series.config = period.config();

    const auto &gates = period.gates();
    DenseOperator accumulator(op.num_qubits());
    auto next = record_at.begin();
    for (int j = 1; j <= n; ++j) {
        // U = G_last ... G_1, so U^dag O U peels the last gate first.
        for (auto g = gates.rbegin(); g != gates.rend(); ++g) {
            conjugate_operator(op, *g);
        }
        kernels::active().accumulate(accumulator.data(), op.data());
        while (next != record_at.end() && *next == j) {
            series.steps.push_back(j);
            series.sizes.push_back(running_average_size(accumulator, j));
            ++next;
        }
    }
    return series;
}

DenseOperator time_averaged_operator(DenseOperator op,
                                     const FloquetPeriod &period, int n) {
    if (op.num_qubits() != period.num_qubits()) {
        throw DimensionMismatch("time_averaged_operator: qubit counts differ");
    }
    if (n < 1) {
        throw std::invalid_argument("time_averaged_operator: n must be >= 1");
    }
    DenseOperator accumulator(op.num_qubits());
    for (int j = 1; j <= n; ++j) {
        for (auto g = period.gates().rbegin(); g != period.gates().rend(); ++g) {
            conjugate_operator(op, *g);
        }
        kernels::active().accumulate(accumulator.data(), op.data());
    }
    accumulator *= 1.0 / static_cast<double>(n);
    return accumulator;
}

void write_csv(std::ostream &out, const NormSeries &series) {
    out << "step,size_sq\n";
    for (std::size_t i = 0; i < series.steps.size(); ++i) {
        out << series.steps[i] << ',' << csv::real(series.sizes[i]) << '\n';
    }
}

} // namespace floqmbl
