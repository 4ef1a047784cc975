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

#include "floqmbl/gate.hpp"

#include <algorithm>
#include <cmath>

namespace floqmbl {

namespace {

std::size_t side_of(std::size_t entries) { return entries == 4 ? 2 : 4; }

void require_unitary(std::span<const complex_t> m, const std::string &label) {
    const std::size_t n = side_of(m.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            complex_t sum{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                sum += std::conj(m[k * n + r]) * m[k * n + c];
            }
            const complex_t expected = r == c ? 1.0 : 0.0;
            if (std::abs(sum - expected) > kUnitarityTol) {
                throw std::invalid_argument("Gate '" + label +
                                            "': matrix is not unitary");
            }
        }
    }
}

} // namespace

Gate::Gate(std::vector<unsigned> targets, std::vector<complex_t> matrix,
           std::string label)
    : targets_(std::move(targets)), matrix_(std::move(matrix)),
      label_(std::move(label)) {
    require_unitary(matrix_, label_);
    const std::size_t n = side_of(matrix_.size());
    diagonal_ = true;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r != c && matrix_[r * n + c] != complex_t{0.0, 0.0}) {
                diagonal_ = false;
            }
        }
    }
}

Gate Gate::single(unsigned target, const kernels::Mat2 &m, std::string label) {
    return Gate({target}, {m.begin(), m.end()}, std::move(label));
}

Gate Gate::two(unsigned target0, unsigned target1, const kernels::Mat4 &m,
               std::string label) {
    if (target0 == target1) {
        throw std::invalid_argument("Gate '" + label +
                                    "': two-qubit targets must be distinct");
    }
    return Gate({target0, target1}, {m.begin(), m.end()}, std::move(label));
}

Gate Gate::adjoint() const {
    const std::size_t n = side_of(matrix_.size());
    std::vector<complex_t> out(matrix_.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out[r * n + c] = std::conj(matrix_[c * n + r]);
        }
    }
    return Gate(targets_, std::move(out), label_ + "^dag");
}

Gate Gate::transpose() const {
    const std::size_t n = side_of(matrix_.size());
    std::vector<complex_t> out(matrix_.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out[r * n + c] = matrix_[c * n + r];
        }
    }
    return Gate(targets_, std::move(out), label_ + "^T");
}

unsigned Gate::min_qubits() const {
    return *std::max_element(targets_.begin(), targets_.end()) + 1;
}

kernels::Mat2 z_rotation(double angle) {
    return {std::polar(1.0, -angle), 0.0, 0.0, std::polar(1.0, angle)};
}

kernels::Mat4 xx_zz_rotation(double xx, double zz) {
    // X(x)X and Z(x)Z commute, so the exponential factorizes. In the local
    // basis |b1 b0>, ZZ is diag(1,-1,-1,1) and XX is the anti-diagonal.
    const complex_t i{0.0, 1.0};
    const double c = std::cos(xx);
    const double s = std::sin(xx);
    const complex_t even = std::polar(1.0, -zz); // ZZ eigenvalue +1
    const complex_t odd = std::polar(1.0, zz);   // ZZ eigenvalue -1
    kernels::Mat4 m{};
    m[0 * 4 + 0] = c * even;
    m[3 * 4 + 3] = c * even;
    m[0 * 4 + 3] = -i * s * even;
    m[3 * 4 + 0] = -i * s * even;
    m[1 * 4 + 1] = c * odd;
    m[2 * 4 + 2] = c * odd;
    m[1 * 4 + 2] = -i * s * odd;
    m[2 * 4 + 1] = -i * s * odd;
    return m;
}

} // namespace floqmbl
