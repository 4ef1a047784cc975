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

#include "floqmbl/state.hpp"

#include <bit>
#include <cmath>

namespace floqmbl {

StateVector::StateVector(unsigned num_qubits)
    : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    amplitudes_.assign(dim_of(num_qubits), complex_t{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::vector<complex_t> amplitudes)
    : num_qubits_(0), amplitudes_(std::move(amplitudes)) {
    const auto n = amplitudes_.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument(
            "StateVector: amplitude count must be a power of two >= 2");
    }
    num_qubits_ = static_cast<unsigned>(std::countr_zero(n));
    if (num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("StateVector: too many qubits");
    }
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

DenseOperator::DenseOperator(unsigned num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument(
            "DenseOperator: qubit count must be in [1, " +
            std::to_string(kMaxQubits) + "]");
    }
    const index_t d = dim_of(num_qubits);
    entries_.assign(d * d, complex_t{0.0, 0.0});
}

DenseOperator DenseOperator::identity(unsigned num_qubits) {
    DenseOperator op(num_qubits);
    for (index_t i = 0; i < op.dim(); ++i) {
        op(i, i) = 1.0;
    }
    return op;
}

complex_t DenseOperator::trace() const {
    complex_t total{0.0, 0.0};
    for (index_t i = 0; i < dim(); ++i) {
        total += (*this)(i, i);
    }
    return total;
}

double DenseOperator::hermiticity_defect() const {
    double worst = 0.0;
    for (index_t r = 0; r < dim(); ++r) {
        for (index_t c = r; c < dim(); ++c) {
            worst = std::max(worst,
                             std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

DenseOperator &DenseOperator::operator+=(const DenseOperator &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw DimensionMismatch("DenseOperator::operator+=: qubit counts differ");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

DenseOperator &DenseOperator::operator*=(complex_t scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

} // namespace floqmbl
