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

#include "floqmbl/quantum_ops.hpp"

#include <bit>
#include <cmath>

namespace floqmbl {

namespace {

void require_in_range(const Gate &gate, unsigned num_qubits,
                      const char *where) {
    if (gate.min_qubits() > num_qubits) {
        throw std::out_of_range(std::string(where) + ": gate '" +
                                gate.label() + "' targets qubit " +
                                std::to_string(gate.min_qubits() - 1) +
                                " of a " + std::to_string(num_qubits) +
                                "-qubit register");
    }
}

// Applies `m` (row-major, matching `gate`'s arity) to the flat array at qubit
// offset `shift`.
void apply_matrix(std::span<complex_t> data, unsigned flat_qubits,
                  const Gate &gate, std::span<const complex_t> m,
                  unsigned shift) {
    const auto &k = kernels::active();
    const auto targets = gate.targets();
    if (gate.arity() == 1) {
        const unsigned q = targets[0] + shift;
        if (gate.is_diagonal()) {
            k.apply_diag_1q(data, flat_qubits, q, m[0], m[3]);
        } else {
            k.apply_1q(data, flat_qubits, q, {m[0], m[1], m[2], m[3]});
        }
        return;
    }
    kernels::Mat4 mat;
    std::copy(m.begin(), m.end(), mat.begin());
    k.apply_2q(data, flat_qubits, targets[0] + shift, targets[1] + shift, mat);
}

// Phase of P|c> = phase * |c ^ flip_mask>.
struct PauliMasks {
    index_t flip = 0;  // X or Y
    index_t sign = 0;  // Y or Z: contributes (-1)^bit
    unsigned num_y = 0;
};

PauliMasks masks_of(const PauliString &p) {
    PauliMasks out;
    for (const auto &f : p.factors()) {
        const index_t bit = index_t{1} << f.site;
        switch (f.axis) {
        case PauliAxis::X:
            out.flip |= bit;
            break;
        case PauliAxis::Y:
            out.flip |= bit;
            out.sign |= bit;
            ++out.num_y;
            break;
        case PauliAxis::Z:
            out.sign |= bit;
            break;
        }
    }
    return out;
}

complex_t pauli_phase(const PauliMasks &m, index_t column) {
    static const complex_t i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    complex_t phase = i_pow[m.num_y % 4];
    if (std::popcount(column & m.sign) % 2 == 1) {
        phase = -phase;
    }
    return phase;
}

void require_residue(complex_t value, const char *where) {
    if (std::abs(value.imag()) > kResidueTol * std::max(1.0, std::abs(value.real()))) {
        throw std::domain_error(std::string(where) +
                                ": imaginary residue " +
                                std::to_string(value.imag()) +
                                " exceeds tolerance");
    }
}

} // namespace

void apply_gate(StateVector &state, const Gate &gate) {
    require_in_range(gate, state.num_qubits(), "apply_gate");
    apply_matrix(state.data(), state.num_qubits(), gate, gate.matrix(), 0);
}

void conjugate_operator(DenseOperator &op, const Gate &gate) {
    const unsigned n = op.num_qubits();
    require_in_range(gate, n, "conjugate_operator");
    if (2 * n > 2 * kMaxQubits) {
        throw std::invalid_argument("conjugate_operator: register too large");
    }
    // Rows live on flat qubits [n, 2n), columns on [0, n).
    const Gate left = gate.adjoint();
    const Gate right = gate.transpose();
    apply_matrix(op.data(), 2 * n, left, left.matrix(), n);
    apply_matrix(op.data(), 2 * n, right, right.matrix(), 0);
}

DenseOperator pauli_to_dense(const PauliString &p, unsigned num_qubits) {
    if (p.min_qubits() > num_qubits) {
        throw std::out_of_range("pauli_to_dense: site " +
                                std::to_string(p.min_qubits() - 1) +
                                " outside a " + std::to_string(num_qubits) +
                                "-qubit register");
    }
    DenseOperator op(num_qubits);
    const PauliMasks m = masks_of(p);
    for (index_t c = 0; c < op.dim(); ++c) {
        op(c ^ m.flip, c) = pauli_phase(m, c);
    }
    return op;
}

double operator_size_sq(const DenseOperator &op) {
    const index_t d = op.dim();
    complex_t total{0.0, 0.0};
    for (index_t r = 0; r < d; ++r) {
        complex_t row{0.0, 0.0};
        for (index_t c = 0; c < d; ++c) {
            row += op(r, c) * op(c, r);
        }
        total += row;
    }
    total /= static_cast<double>(d);
    require_residue(total, "operator_size_sq");
    return total.real();
}

double expectation(const StateVector &state, const DenseOperator &op) {
    if (state.num_qubits() != op.num_qubits()) {
        throw DimensionMismatch("expectation: state has " +
                                std::to_string(state.num_qubits()) +
                                " qubits, operator has " +
                                std::to_string(op.num_qubits()));
    }
    const index_t d = op.dim();
    complex_t total{0.0, 0.0};
    for (index_t r = 0; r < d; ++r) {
        complex_t row{0.0, 0.0};
        for (index_t c = 0; c < d; ++c) {
            row += op(r, c) * state[c];
        }
        total += std::conj(state[r]) * row;
    }
    require_residue(total, "expectation");
    return total.real();
}

double expectation(const StateVector &state, const PauliString &p) {
    if (p.min_qubits() > state.num_qubits()) {
        throw std::out_of_range("expectation: Pauli string exceeds register");
    }
    const PauliMasks m = masks_of(p);
    complex_t total{0.0, 0.0};
    for (index_t c = 0; c < state.dim(); ++c) {
        total += std::conj(state[c ^ m.flip]) * pauli_phase(m, c) * state[c];
    }
    require_residue(total, "expectation");
    return total.real();
}

} // namespace floqmbl
