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

#include "floqmbl/gate.hpp"
#include "floqmbl/pauli.hpp"
#include "floqmbl/state.hpp"

namespace floqmbl {

/// state <- G state. Throws std::out_of_range for a target outside the
/// register.
void apply_gate(StateVector &state, const Gate &gate);

/// op <- G^dagger op G, done as a row pass with G^dagger and a column pass with
/// G^T on the flattened operator. No 2^L x 2^L gate matrix is formed.
void conjugate_operator(DenseOperator &op, const Gate &gate);

/// Dense form of `p` on `num_qubits` qubits.
DenseOperator pauli_to_dense(const PauliString &p, unsigned num_qubits);

/// Tr(op op) / 2^L, evaluated as sum_ij op_ij op_ji / 2^L. Throws
/// std::domain_error if the imaginary residue exceeds kResidueTol.
double operator_size_sq(const DenseOperator &op);

/// <psi|op|psi>. Throws std::domain_error for an imaginary residue above
/// kResidueTol and DimensionMismatch for unequal registers.
double expectation(const StateVector &state, const DenseOperator &op);

/// <psi|P|psi> for a Pauli string, without forming the dense matrix.
double expectation(const StateVector &state, const PauliString &p);

} // namespace floqmbl
