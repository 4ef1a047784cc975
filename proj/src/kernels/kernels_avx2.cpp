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

#include "floqmbl/kernels.hpp"

#if defined(FLOQMBL_HAVE_AVX2)

#include <cassert>
#include <immintrin.h>

namespace floqmbl::kernels {

namespace {

// A __m256d holds two complex doubles: (re0, im0, re1, im1).

struct Bcast {
    __m256d re;
    __m256d im;
};

inline Bcast broadcast(complex_t c) {
    return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())};
}

// Per-lane complex product c * v with the same operation order as cmul().
inline __m256d mul(const Bcast &c, __m256d v) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(c.re, v),
                            _mm256_mul_pd(c.im, swapped));
}

// Lane-wise product where c carries a different complex number per lane.
inline __m256d mul_lanes(__m256d c, __m256d v) {
    const __m256d c_re = _mm256_movedup_pd(c);
    const __m256d c_im = _mm256_permute_pd(c, 0b1111);
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(c_re, v), _mm256_mul_pd(c_im, swapped));
}

inline __m256d load(const complex_t *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store(complex_t *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d pack(complex_t lo, complex_t hi) {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

void apply_1q(std::span<complex_t> data, [[maybe_unused]] unsigned num_qubits, unsigned q,
              const Mat2 &m) {
    assert(data.size() == dim_of(num_qubits) && q < num_qubits);
    complex_t *ptr = data.data();
    const index_t dim = data.size();
    if (q == 0) {
        const __m256d first = pack(m[0], m[2]);
        const __m256d second = pack(m[1], m[3]);
        for (index_t i = 0; i < dim; i += 2) {
            const __m256d v = load(ptr + i);
            const __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
            store(ptr + i, _mm256_add_pd(mul_lanes(first, a0),
                                         mul_lanes(second, a1)));
        }
        return;
    }
    const Bcast m00 = broadcast(m[0]), m01 = broadcast(m[1]);
    const Bcast m10 = broadcast(m[2]), m11 = broadcast(m[3]);
    const index_t stride = index_t{1} << q;
    for (index_t block = 0; block < dim; block += 2 * stride) {
        for (index_t i = block; i < block + stride; i += 2) {
            const __m256d a0 = load(ptr + i);
            const __m256d a1 = load(ptr + i + stride);
            store(ptr + i, _mm256_add_pd(mul(m00, a0), mul(m01, a1)));
            store(ptr + i + stride, _mm256_add_pd(mul(m10, a0), mul(m11, a1)));
        }
    }
}

void apply_diag_1q(std::span<complex_t> data, [[maybe_unused]] unsigned num_qubits, unsigned q,
                   complex_t d0, complex_t d1) {
    assert(data.size() == dim_of(num_qubits) && q < num_qubits);
    complex_t *ptr = data.data();
    const index_t dim = data.size();
    if (q == 0) {
        const __m256d d = pack(d0, d1);
        for (index_t i = 0; i < dim; i += 2) {
            store(ptr + i, mul_lanes(d, load(ptr + i)));
        }
        return;
    }
    const Bcast b0 = broadcast(d0), b1 = broadcast(d1);
    const index_t stride = index_t{1} << q;
    for (index_t block = 0; block < dim; block += 2 * stride) {
        for (index_t i = block; i < block + stride; i += 2) {
            store(ptr + i, mul(b0, load(ptr + i)));
            store(ptr + i + stride, mul(b1, load(ptr + i + stride)));
        }
    }
}

void apply_2q(std::span<complex_t> data, [[maybe_unused]] unsigned num_qubits, unsigned q0,
              unsigned q1, const Mat4 &m) {
    assert(data.size() == dim_of(num_qubits));
    assert(q0 < num_qubits && q1 < num_qubits && q0 != q1);
    if (q0 == 0 || q1 == 0) {
        // Adjacent-amplitude pairing gains nothing from lane packing here.
        scalar_kernels().apply_2q(data, num_qubits, q0, q1, m);
        return;
    }
    Bcast b[16];
    for (int k = 0; k < 16; ++k) {
        b[k] = broadcast(m[k]);
    }
    complex_t *ptr = data.data();
    const index_t s0 = index_t{1} << q0;
    const index_t s1 = index_t{1} << q1;
    const index_t lo = s0 < s1 ? s0 : s1;
    const index_t hi = s0 < s1 ? s1 : s0;
    const index_t dim = data.size();
    for (index_t outer = 0; outer < dim; outer += 2 * hi) {
        for (index_t mid = outer; mid < outer + hi; mid += 2 * lo) {
            for (index_t i = mid; i < mid + lo; i += 2) {
                complex_t *p[4] = {ptr + i, ptr + i + s0, ptr + i + s1,
                                   ptr + i + s0 + s1};
                const __m256d a0 = load(p[0]);
                const __m256d a1 = load(p[1]);
                const __m256d a2 = load(p[2]);
                const __m256d a3 = load(p[3]);
                for (int r = 0; r < 4; ++r) {
                    __m256d acc = mul(b[4 * r], a0);
                    acc = _mm256_add_pd(acc, mul(b[4 * r + 1], a1));
                    acc = _mm256_add_pd(acc, mul(b[4 * r + 2], a2));
                    acc = _mm256_add_pd(acc, mul(b[4 * r + 3], a3));
                    store(p[r], acc);
                }
            }
        }
    }
}

void accumulate(std::span<complex_t> acc, std::span<const complex_t> x) {
    assert(acc.size() == x.size());
    double *a = reinterpret_cast<double *>(acc.data());
    const double *b = reinterpret_cast<const double *>(x.data());
    const std::size_t n = 2 * acc.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(a + i, _mm256_add_pd(_mm256_loadu_pd(a + i),
                                              _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) {
        a[i] += b[i];
    }
}

} // namespace

const KernelSet *avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2");
    static const KernelSet set{"avx2", &apply_1q, &apply_diag_1q, &apply_2q,
                               &accumulate};
    return supported ? &set : nullptr;
}

} // namespace floqmbl::kernels

#else

namespace floqmbl::kernels {
const KernelSet *avx2_kernels() { return nullptr; }
} // namespace floqmbl::kernels

#endif
