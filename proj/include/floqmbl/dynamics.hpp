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

#include <iosfwd>
#include <string>
#include <vector>

#include "floqmbl/floquet.hpp"
#include "floqmbl/state.hpp"

namespace floqmbl {

/// Size of the time-averaged operator, Tr(O_avg(nT)^2) / 2^L, at a set of
/// recorded step counts n.
struct NormSeries {
    std::vector<int> steps;
    std::vector<double> sizes;
    std::string op_label;
    CircuitConfig config;

    /// Size recorded at step `n`; throws std::out_of_range if not recorded.
    [[nodiscard]] double size_at(int n) const;
};

/// 1..min(30, n), the powers of two up to n, and n itself, sorted and unique.
std::vector<int> standard_schedule(int n);

/// Heisenberg evolution O(jT) = (U^dag)^j O U^j for j = 1..n where U is the
/// period unitary, keeping the unscaled running sum S_j = sum O(jT). At each
/// step listed in `record_at` the size of S_j / j is appended to the series.
///
/// `record_at` must be sorted with entries in [1, n].
NormSeries evolve_heisenberg(DenseOperator op, const FloquetPeriod &period,
                             int n, const std::vector<int> &record_at,
                             std::string op_label = {});

/// O_avg(nT) = (1/n) sum_{j=1..n} O(jT).
DenseOperator time_averaged_operator(DenseOperator op,
                                     const FloquetPeriod &period, int n);

/// Tr((S / j)^2) / 2^L without modifying S. Throws std::invalid_argument for
/// j < 1.
double running_average_size(const DenseOperator &accumulator, int j);

/// Writes `step,size_sq` rows with a header, 17 significant digits.
void write_csv(std::ostream &out, const NormSeries &series);

} // namespace floqmbl
