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
#include <string>
#include <vector>

#include "floqmbl/common.hpp"
#include "floqmbl/kernels.hpp"

namespace floqmbl {

/// Unitary acting on one or two qubits. Immutable once built.
///
/// Two-qubit matrices use the local basis index bit(targets[0]) +
/// 2 * bit(targets[1]).
class Gate {
  public:
    /// Throws std::invalid_argument if `m` is not unitary to kUnitarityTol per
    /// entry.
    static Gate single(unsigned target, const kernels::Mat2 &m,
                       std::string label);
    static Gate two(unsigned target0, unsigned target1, const kernels::Mat4 &m,
                    std::string label);

    [[nodiscard]] std::span<const unsigned> targets() const { return targets_; }
    [[nodiscard]] unsigned arity() const {
        return static_cast<unsigned>(targets_.size());
    }
    [[nodiscard]] const std::string &label() const { return label_; }

    /// Row-major matrix, 4 or 16 entries.
    [[nodiscard]] std::span<const complex_t> matrix() const { return matrix_; }
    [[nodiscard]] bool is_diagonal() const { return diagonal_; }

    [[nodiscard]] Gate adjoint() const;
    [[nodiscard]] Gate transpose() const;

    /// Largest target index + 1.
    [[nodiscard]] unsigned min_qubits() const;

  private:
    Gate(std::vector<unsigned> targets, std::vector<complex_t> matrix,
         std::string label);

    std::vector<unsigned> targets_;
    std::vector<complex_t> matrix_;
    std::string label_;
    bool diagonal_ = false;
};

/// exp(-i angle Z).
kernels::Mat2 z_rotation(double angle);

/// exp(-i (xx * X(x)X + zz * Z(x)Z)).
kernels::Mat4 xx_zz_rotation(double xx, double zz);

} // namespace floqmbl
