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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace floqmbl {

using complex_t = std::complex<double>;
using index_t = std::uint64_t;

inline constexpr const char *kLibraryVersion = "0.1.0";

// Largest register the dense representations accept. A 12-qubit operator is
// 16M amplitudes (256 MiB).
inline constexpr unsigned kMaxQubits = 12;

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kResidueTol = 1e-10;

inline constexpr index_t dim_of(unsigned num_qubits) {
    return index_t{1} << num_qubits;
}

/// Thrown when sizes of operands (qubit counts) do not agree.
class DimensionMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace floqmbl
