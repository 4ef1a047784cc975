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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floqmbl/floquet.hpp"
#include "floqmbl/kernels.hpp"
#include "floqmbl/pauli.hpp"
#include "floqmbl/rng.hpp"
#include "floqmbl/state.hpp"

#include "json.hpp"

namespace floqmbl {

/// How the 2^m time-averaged expectations of one unitary instance combine.
///
/// PaperLiteral: sum_s (-1/2)^{|s|} A(s)^2.
/// CrossCorrelation: sum_{s,s'} (-2)^{-|s xor s'|} A(s) A(s').
enum class EstimatorVariant { PaperLiteral, CrossCorrelation };

std::string_view to_string(EstimatorVariant v);
/// Accepts "PAPER_LITERAL" and "CROSS_CORRELATION".
EstimatorVariant parse_variant(std::string_view name);

struct RandomMeasConfig {
    unsigned num_qubits = 0;
    std::vector<unsigned> flip_sites;
    int num_unitaries = 0;
    int n_steps = 0;
    std::uint64_t seed = 0;
    EstimatorVariant variant = EstimatorVariant::CrossCorrelation;

    [[nodiscard]] unsigned m() const {
        return static_cast<unsigned>(flip_sites.size());
    }

    /// Throws std::invalid_argument on a malformed config.
    void validate() const;
};

struct EstimatorResult {
    EstimatorVariant variant = EstimatorVariant::CrossCorrelation;
    unsigned num_qubits = 0;
    unsigned m = 0;
    int n_steps = 0;
    int num_unitaries = 0;
    std::uint64_t seed = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    /// Ratio of the estimator's mean to Tr(O_avg^2)/2^L. NaN when unknown.
    double calibration = 0.0;
    /// Tr(O_avg^2)/2^L from the dense evolution, when L is small enough.
    std::optional<double> exact_value;

    [[nodiscard]] double calibrated() const { return estimate / calibration; }
};

nlohmann::json to_json(const EstimatorResult &r);

/// Single-qubit unitary from the Haar measure (Gram-Schmidt on a complex
/// Ginibre matrix).
kernels::Mat2 haar_unitary_2x2(Engine &engine);

struct LocalRandomState {
    StateVector state;
    std::vector<kernels::Mat2> unitaries; // one per qubit
};

/// u|0...0> with u a product of independent Haar single-qubit unitaries.
LocalRandomState sample_local_random_state(unsigned num_qubits,
                                           Engine &engine);

/// u|k_s>, where |k_s> sets the bits of `flip_sites` selected by
/// `flip_mask` (bit b of the mask flips flip_sites[b]). Throws
/// std::out_of_range for mask >= 2^m.
StateVector ensemble_member(const std::vector<kernels::Mat2> &unitaries,
                            const std::vector<unsigned> &flip_sites,
                            index_t flip_mask);

/// (-1/2)^{popcount(mask)}.
double flip_weight(index_t flip_mask);

/// Samples `cfg.num_unitaries` instances, evolves every ensemble member for
/// cfg.n_steps periods recording <O> after each period, and combines the
/// time averages per cfg.variant. Instances run in parallel on `threads`
/// workers with per-instance RNG streams; the result does not depend on the
/// thread count.
///
/// For L <= kMaxExactQubits the exact value and calibration come from a dense
/// evolution of O.
EstimatorResult estimate_time_averaged_size(const PauliString &op,
                                            const FloquetPeriod &period,
                                            const RandomMeasConfig &cfg,
                                            unsigned threads = 1);

inline constexpr unsigned kMaxExactQubits = 8;
inline constexpr unsigned kMaxDoubledQubits = 6;

/// Analytic right-hand side for the reference-state protocol:
///   3^-L (3/4)^s (1/2)^(L-s) Tr( prod_{j in swapped} Swap_j (O(x)O)
///                                prod_{k not swapped} (1 + Swap_k)(O(x)O) )
/// with s = |swapped_sites|, evaluated entry by entry on the doubled space.
/// Throws std::invalid_argument when L > kMaxDoubledQubits.
double exact_rhs_small_L(const DenseOperator &op, unsigned m,
                         const std::vector<unsigned> &swapped_sites);

/// Mean of the estimator `variant` for a (time-averaged) operator, from the
/// single-qubit Haar second moment E[(u P u^dag)^{(x)2}] expanded over site
/// subsets with partial traces.
double expected_estimate(const DenseOperator &op,
                         const std::vector<unsigned> &flip_sites,
                         EstimatorVariant variant);

} // namespace floqmbl
