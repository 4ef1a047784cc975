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

#include <cassert>

#include "floqmbl/kernels.hpp"
#include "kernel_math.hpp"

namespace floqmbl::kernels {

namespace {

void apply_1q(std::span<complex_t> data, [[maybe_unused]] unsigned num_qubits, unsigned q,
              const Mat2 &m) {
    assert(data.size() == dim_of(num_qubits) && q < num_qubits);
    const index_t stride = index_t{1} << q;
    const index_t dim = data.size();
    for (index_t block = 0; block < dim; block += 2 * stride) {
        for (index_t i = block; i < block + stride; ++i) {
            const complex_t a0 = data[i];
            const complex_t a1 = data[i + stride];
            data[i] = cadd(cmul(m[0], a0), cmul(m[1], a1));
            data[i + stride] = cadd(cmul(m[2], a0), cmul(m[3], a1));
        }
    }
}

void apply_diag_1q(std::span<complex_t> data, [[maybe_unused]] unsigned num_qubits, unsigned q,
                   complex_t d0, complex_t d1) {
    assert(data.size() == dim_of(num_qubits) && q < num_qubits);
    const index_t stride = index_t{1} << q;
    const index_t dim = data.size();
    for (index_t block = 0; block < dim; block += 2 * stride) {
        for (index_t i = block; i < block + stride; ++i) {
            data[i] = cmul(d0, data[i]);
            data[i + stride] = cmul(d1, data[i + stride]);
        }
    }
}

void apply_2q(std::span<complex_t> data, [[maybe_unused]] unsigned num_qubits, unsigned q0,
              unsigned q1, const Mat4 &m) {
    assert(data.size() == dim_of(num_qubits));
    assert(q0 < num_qubits && q1 < num_qubits && q0 != q1);
    const index_t s0 = index_t{1} << q0;
    const index_t s1 = index_t{1} << q1;
    const index_t lo = s0 < s1 ? s0 : s1;
    const index_t hi = s0 < s1 ? s1 : s0;
    const index_t dim = data.size();
    for (index_t outer = 0; outer < dim; outer += 2 * hi) {
        for (index_t mid = outer; mid < outer + hi; mid += 2 * lo) {
            for (index_t i = mid; i < mid + lo; ++i) {
                const index_t idx[4] = {i, i + s0, i + s1, i + s0 + s1};
                const complex_t a[4] = {data[idx[0]], data[idx[1]],
                                        data[idx[2]], data[idx[3]]};
                for (int r = 0; r < 4; ++r) {
                    complex_t acc = cmul(m[4 * r], a[0]);
                    acc = cadd(acc, cmul(m[4 * r + 1], a[1]));
                    acc = cadd(acc, cmul(m[4 * r + 2], a[2]));
                    acc = cadd(acc, cmul(m[4 * r + 3], a[3]));
                    data[idx[r]] = acc;
                }
            }
        }
    }
}

void accumulate(std::span<complex_t> acc, std::span<const complex_t> x) {
    assert(acc.size() == x.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i] = cadd(acc[i], x[i]);
    }
}

} // namespace

const KernelSet &scalar_kernels() {
    static const KernelSet set{"scalar", &apply_1q, &apply_diag_1q, &apply_2q,
                               &accumulate};
    return set;
}

} // namespace floqmbl::kernels
