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

#include <array>
#include <span>
#include <string_view>

#include "floqmbl/common.hpp"

/**
 * @file
 * Bit-indexed amplitude kernels. Every routine acts in place on a flat array
 * of 2^n complex amplitudes, qubit 0 being the least significant index bit.
 *
 * Two implementations exist: a portable scalar reference and an AVX2 variant.
 * Both evaluate the same arithmetic in the same order without contraction, so
 * they produce bit-identical results. The active set is picked once at
 * startup from the CPU's capabilities and may be forced with the
 * FLOQMBL_KERNEL environment variable ("scalar" or "avx2").
 */

namespace floqmbl::kernels {

using Mat2 = std::array<complex_t, 4>;  // row-major 2x2
using Mat4 = std::array<complex_t, 16>; // row-major 4x4

struct KernelSet {
    std::string_view name;

    // data <- M data on qubit q.
    void (*apply_1q)(std::span<complex_t> data, unsigned num_qubits,
                     unsigned q, const Mat2 &m);

    // data <- diag(d0, d1) data on qubit q.
    void (*apply_diag_1q)(std::span<complex_t> data, unsigned num_qubits,
                          unsigned q, complex_t d0, complex_t d1);

    // data <- M data on qubits (q0, q1). The local index of M is
    // bit(q0) + 2 * bit(q1).
    void (*apply_2q)(std::span<complex_t> data, unsigned num_qubits,
                     unsigned q0, unsigned q1, const Mat4 &m);

    // acc <- acc + x
    void (*accumulate)(std::span<complex_t> acc, std::span<const complex_t> x);
};

const KernelSet &scalar_kernels();

/// Returns nullptr when the binary was built without AVX2 support or the CPU
/// lacks it.
const KernelSet *avx2_kernels();

/// The set selected for this process.
const KernelSet &active();

/// Overrides the active set (tests and benchmarks).
void set_active(const KernelSet &set);

} // namespace floqmbl::kernels
