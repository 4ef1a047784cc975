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

#include <span>
#include <vector>

#include "floqmbl/common.hpp"

namespace floqmbl {

/// Pure state of an L-qubit register. Basis index bit q is qubit q.
class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(unsigned num_qubits);

    /// Takes ownership of explicit amplitudes; the length must be a power of
    /// two of at least 2.
    explicit StateVector(std::vector<complex_t> amplitudes);

    [[nodiscard]] unsigned num_qubits() const { return num_qubits_; }
    [[nodiscard]] index_t dim() const { return amplitudes_.size(); }

    [[nodiscard]] std::span<complex_t> data() { return amplitudes_; }
    [[nodiscard]] std::span<const complex_t> data() const {
        return amplitudes_;
    }

    complex_t &operator[](index_t i) { return amplitudes_[i]; }
    const complex_t &operator[](index_t i) const { return amplitudes_[i]; }

    /// Sum of squared amplitude moduli.
    [[nodiscard]] double norm_sq() const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    unsigned num_qubits_;
    std::vector<complex_t> amplitudes_;
};

/// Dense 2^L x 2^L operator, row-major, rows and columns indexed like
/// StateVector. Flattened, entry (r, c) sits at r * 2^L + c, which makes the
/// storage a 2L-qubit amplitude array whose upper L bits address rows.
class DenseOperator {
  public:
    /// Zero operator.
    explicit DenseOperator(unsigned num_qubits);

    static DenseOperator identity(unsigned num_qubits);

    [[nodiscard]] unsigned num_qubits() const { return num_qubits_; }
    [[nodiscard]] index_t dim() const { return dim_of(num_qubits_); }

    [[nodiscard]] std::span<complex_t> data() { return entries_; }
    [[nodiscard]] std::span<const complex_t> data() const { return entries_; }

    complex_t &operator()(index_t row, index_t col) {
        return entries_[row * dim() + col];
    }
    const complex_t &operator()(index_t row, index_t col) const {
        return entries_[row * dim() + col];
    }

    [[nodiscard]] complex_t trace() const;

    /// Largest entry of |O - O^dagger|.
    [[nodiscard]] double hermiticity_defect() const;

    DenseOperator &operator+=(const DenseOperator &other);
    DenseOperator &operator*=(complex_t scale);

    friend bool operator==(const DenseOperator &,
                           const DenseOperator &) = default;

  private:
    unsigned num_qubits_;
    std::vector<complex_t> entries_;
};

} // namespace floqmbl
