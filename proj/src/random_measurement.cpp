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

#include "floqmbl/random_measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

#include "floqmbl/dynamics.hpp"
#include "floqmbl/parallel.hpp"
#include "floqmbl/quantum_ops.hpp"

namespace floqmbl {

namespace {

// Neumaier compensated sum.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const { return sum_ + carry_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void require_sites(const std::vector<unsigned> &sites, unsigned num_qubits,
                   const char *where) {
    std::set<unsigned> seen;
    for (unsigned s : sites) {
        if (s >= num_qubits) {
            throw std::invalid_argument(std::string(where) + ": site " +
                                        std::to_string(s) +
                                        " outside the register");
        }
        if (!seen.insert(s).second) {
            throw std::invalid_argument(std::string(where) +
                                        ": duplicate site " +
                                        std::to_string(s));
        }
    }
}

double combine(const std::vector<double> &averages, EstimatorVariant variant) {
    const std::size_t count = averages.size();
    double total = 0.0;
    if (variant == EstimatorVariant::PaperLiteral) {
        for (std::size_t s = 0; s < count; ++s) {
            total += flip_weight(s) * averages[s] * averages[s];
        }
        return total;
    }
    for (std::size_t s = 0; s < count; ++s) {
        double row = 0.0;
        for (std::size_t t = 0; t < count; ++t) {
            row += flip_weight(s ^ t) * averages[t];
        }
        total += averages[s] * row;
    }
    // flip_weight carries (-1/2)^h; the pair weight is (-2)^-h = (-1/2)^h.
    return total;
}

// Per-site coefficients (alpha, beta) of E[rho (x) rho] = alpha 1 + beta Swap
// after the variant's weighted sum over that site's basis states.
struct SiteMoment {
    double alpha;
    double beta;
};

SiteMoment site_moment(bool flipped, EstimatorVariant variant) {
    if (!flipped) {
        return {1.0 / 6.0, 1.0 / 6.0};
    }
    if (variant == EstimatorVariant::PaperLiteral) {
        return {1.0 / 12.0, 1.0 / 12.0};
    }
    return {0.0, 0.5};
}

// Tr(P^2) for P = partial trace of `op` over the sites outside `keep`.
double reduced_purity(const DenseOperator &op, index_t keep) {
    const unsigned n = op.num_qubits();
    const index_t d = op.dim();
    const unsigned k = static_cast<unsigned>(std::popcount(keep));
    const index_t dk = dim_of(k);
    std::vector<index_t> compress(d);
    for (index_t x = 0; x < d; ++x) {
        index_t out = 0;
        unsigned pos = 0;
        for (unsigned q = 0; q < n; ++q) {
            if ((keep >> q) & 1U) {
                out |= ((x >> q) & 1U) << pos;
                ++pos;
            }
        }
        compress[x] = out;
    }
    std::vector<complex_t> reduced(dk * dk, complex_t{0.0, 0.0});
    for (index_t r = 0; r < d; ++r) {
        const index_t outside = r & ~keep;
        const index_t rk = compress[r];
        // Enumerate column indices agreeing with r outside `keep`.
        index_t sub = 0;
        do {
            const index_t c = outside | sub;
            reduced[rk * dk + compress[c]] += op(r, c);
            sub = (sub - keep) & keep;
        } while (sub != 0);
    }
    complex_t total{0.0, 0.0};
    for (index_t a = 0; a < dk; ++a) {
        for (index_t b = 0; b < dk; ++b) {
            total += reduced[a * dk + b] * reduced[b * dk + a];
        }
    }
    return total.real();
}

} // namespace

std::string_view to_string(EstimatorVariant v) {
    return v == EstimatorVariant::PaperLiteral ? "PAPER_LITERAL"
                                               : "CROSS_CORRELATION";
}

EstimatorVariant parse_variant(std::string_view name) {
    if (name == "PAPER_LITERAL") {
        return EstimatorVariant::PaperLiteral;
    }
    if (name == "CROSS_CORRELATION") {
        return EstimatorVariant::CrossCorrelation;
    }
    throw std::invalid_argument("unknown estimator variant '" +
                                std::string(name) + "'");
}

void RandomMeasConfig::validate() const {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("RandomMeasConfig: bad qubit count");
    }
    if (flip_sites.empty() || flip_sites.size() > num_qubits) {
        throw std::invalid_argument(
            "RandomMeasConfig: m must satisfy 1 <= m <= L");
    }
    require_sites(flip_sites, num_qubits, "RandomMeasConfig");
    if (num_unitaries < 1) {
        throw std::invalid_argument(
            "RandomMeasConfig: num_unitaries must be >= 1");
    }
    if (n_steps < 1) {
        throw std::invalid_argument("RandomMeasConfig: n_steps must be >= 1");
    }
}

nlohmann::json to_json(const EstimatorResult &r) {
    nlohmann::json j;
    j["variant"] = std::string(to_string(r.variant));
    j["L"] = r.num_qubits;
    j["m"] = r.m;
    j["n_steps"] = r.n_steps;
    j["num_unitaries"] = r.num_unitaries;
    j["seed"] = r.seed;
    j["estimate"] = r.estimate;
    j["std_error"] = r.std_error;
    j["calibration"] = std::isfinite(r.calibration)
                           ? nlohmann::json(r.calibration)
                           : nlohmann::json(nullptr);
    j["exact_value"] = r.exact_value ? nlohmann::json(*r.exact_value)
                                     : nlohmann::json(nullptr);
    return j;
}

kernels::Mat2 haar_unitary_2x2(Engine &engine) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    complex_t col0[2], col1[2];
    for (auto &z : col0) {
        const double re = gauss(engine);
        z = {re, gauss(engine)};
    }
    for (auto &z : col1) {
        const double re = gauss(engine);
        z = {re, gauss(engine)};
    }
    const double n0 = std::sqrt(std::norm(col0[0]) + std::norm(col0[1]));
    col0[0] /= n0;
    col0[1] /= n0;
    const complex_t overlap =
        std::conj(col0[0]) * col1[0] + std::conj(col0[1]) * col1[1];
    col1[0] -= overlap * col0[0];
    col1[1] -= overlap * col0[1];
    const double n1 = std::sqrt(std::norm(col1[0]) + std::norm(col1[1]));
    col1[0] /= n1;
    col1[1] /= n1;
    return {col0[0], col1[0], col0[1], col1[1]};
}

LocalRandomState sample_local_random_state(unsigned num_qubits,
                                           Engine &engine) {
    std::vector<kernels::Mat2> unitaries;
    unitaries.reserve(num_qubits);
    for (unsigned q = 0; q < num_qubits; ++q) {
        unitaries.push_back(haar_unitary_2x2(engine));
    }
    StateVector state = ensemble_member(unitaries, {}, 0);
    return {std::move(state), std::move(unitaries)};
}

StateVector ensemble_member(const std::vector<kernels::Mat2> &unitaries,
                            const std::vector<unsigned> &flip_sites,
                            index_t flip_mask) {
    const auto n = static_cast<unsigned>(unitaries.size());
    if (flip_mask >= dim_of(static_cast<unsigned>(flip_sites.size()))) {
        throw std::out_of_range("ensemble_member: flip mask out of range");
    }
    require_sites(flip_sites, n, "ensemble_member");
    index_t reference = 0;
    for (std::size_t b = 0; b < flip_sites.size(); ++b) {
        if ((flip_mask >> b) & 1U) {
            reference |= index_t{1} << flip_sites[b];
        }
    }
    StateVector state(n);
    for (index_t x = 0; x < state.dim(); ++x) {
        complex_t amp{1.0, 0.0};
        for (unsigned q = 0; q < n; ++q) {
            const index_t row = (x >> q) & 1U;
            const index_t col = (reference >> q) & 1U;
            amp *= unitaries[q][2 * row + col];
        }
        state[x] = amp;
    }
    return state;
}

double flip_weight(index_t flip_mask) {
    const int flips = std::popcount(flip_mask);
    double w = 1.0;
    for (int i = 0; i < flips; ++i) {
        w *= -0.5;
    }
    return w;
}

EstimatorResult estimate_time_averaged_size(const PauliString &op,
                                            const FloquetPeriod &period,
                                            const RandomMeasConfig &cfg,
                                            unsigned threads) {
    cfg.validate();
    if (cfg.num_qubits != period.num_qubits()) {
        throw DimensionMismatch(
            "estimate_time_averaged_size: config and period disagree on L");
    }
    if (op.min_qubits() > cfg.num_qubits) {
        throw std::out_of_range(
            "estimate_time_averaged_size: operator exceeds register");
    }
    const index_t members = dim_of(cfg.m());
    std::vector<double> per_instance(static_cast<std::size_t>(cfg.num_unitaries));

    parallel_for(per_instance.size(), threads, [&](std::size_t u) {
        Engine engine = make_engine(cfg.seed, u);
        std::vector<kernels::Mat2> unitaries;
        unitaries.reserve(cfg.num_qubits);
        for (unsigned q = 0; q < cfg.num_qubits; ++q) {
            unitaries.push_back(haar_unitary_2x2(engine));
        }
        std::vector<double> averages(members);
        for (index_t s = 0; s < members; ++s) {
            StateVector state = ensemble_member(unitaries, cfg.flip_sites, s);
            double sum = 0.0;
            for (int j = 1; j <= cfg.n_steps; ++j) {
                for (const Gate &g : period.gates()) {
                    apply_gate(state, g);
                }
                sum += expectation(state, op);
            }
            averages[s] = sum / cfg.n_steps;
        }
        per_instance[u] = combine(averages, cfg.variant);
    });

    CompensatedSum sum;
    for (double v : per_instance) {
        sum.add(v);
    }
    const double count = static_cast<double>(per_instance.size());
    const double mean = sum.value() / count;
    CompensatedSum sq;
    for (double v : per_instance) {
        sq.add((v - mean) * (v - mean));
    }
    EstimatorResult out;
    out.variant = cfg.variant;
    out.num_qubits = cfg.num_qubits;
    out.m = cfg.m();
    out.n_steps = cfg.n_steps;
    out.num_unitaries = cfg.num_unitaries;
    out.seed = cfg.seed;
    out.estimate = mean;
    out.std_error =
        per_instance.size() > 1 ? std::sqrt(sq.value() / (count - 1.0) / count)
                                : 0.0;
    out.calibration = std::numeric_limits<double>::quiet_NaN();

    if (cfg.num_qubits <= kMaxExactQubits) {
        const DenseOperator averaged = time_averaged_operator(
            pauli_to_dense(op, cfg.num_qubits), period, cfg.n_steps);
        const double exact = operator_size_sq(averaged);
        out.exact_value = exact;
        if (exact > 1e-12) {
            out.calibration =
                expected_estimate(averaged, cfg.flip_sites, cfg.variant) / exact;
        }
    } else if (cfg.variant == EstimatorVariant::CrossCorrelation &&
               cfg.m() == cfg.num_qubits) {
        // Every site flipped: the mean is exactly Tr(O_avg^2)/2^L.
        out.calibration = 1.0;
    }
    return out;
}

double exact_rhs_small_L(const DenseOperator &op, unsigned m,
                         const std::vector<unsigned> &swapped_sites) {
    const unsigned n = op.num_qubits();
    if (n > kMaxDoubledQubits) {
        throw std::invalid_argument("exact_rhs_small_L: L = " +
                                    std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxDoubledQubits));
    }
    if (m != swapped_sites.size() || m > n) {
        throw std::invalid_argument(
            "exact_rhs_small_L: m must equal the number of swapped sites");
    }
    require_sites(swapped_sites, n, "exact_rhs_small_L");
    index_t swapped = 0;
    for (unsigned s : swapped_sites) {
        swapped |= index_t{1} << s;
    }
    std::vector<unsigned> free_sites;
    for (unsigned q = 0; q < n; ++q) {
        if (!((swapped >> q) & 1U)) {
            free_sites.push_back(q);
        }
    }
    const index_t d = op.dim();
    const index_t doubled = d * d;
    const index_t choices = dim_of(static_cast<unsigned>(free_sites.size()));

    // Doubled index a = a_lo + 2^L a_hi: copy one on the low L bits, copy two
    // on the high L bits. Swap_q exchanges bits q and q + L.
    auto swap_bits = [n](index_t a, unsigned q) {
        const index_t lo = (a >> q) & 1U;
        const index_t hi = (a >> (q + n)) & 1U;
        if (lo == hi) {
            return a;
        }
        return a ^ ((index_t{1} << q) | (index_t{1} << (q + n)));
    };

    complex_t total{0.0, 0.0};
    for (index_t a = 0; a < doubled; ++a) {
        index_t base = a;
        for (unsigned q : swapped_sites) {
            base = swap_bits(base, q);
        }
        // Each free site contributes 1 + Swap: pick identity or swap.
        for (index_t pick = 0; pick < choices; ++pick) {
            index_t b = base;
            for (std::size_t k = 0; k < free_sites.size(); ++k) {
                if ((pick >> k) & 1U) {
                    b = swap_bits(b, free_sites[k]);
                }
            }
            // M[a, b] = 1; accumulate M[a, b] (O (x) O)[b, a].
            total += op(b & (d - 1), a & (d - 1)) * op(b >> n, a >> n);
        }
    }
    const double s = static_cast<double>(m);
    const double prefactor = std::pow(1.0 / 3.0, n) * std::pow(0.75, s) *
                             std::pow(0.5, static_cast<double>(n) - s);
    return prefactor * total.real();
}

double expected_estimate(const DenseOperator &op,
                         const std::vector<unsigned> &flip_sites,
                         EstimatorVariant variant) {
    const unsigned n = op.num_qubits();
    if (n > kMaxExactQubits) {
        throw std::invalid_argument("expected_estimate: register too large");
    }
    require_sites(flip_sites, n, "expected_estimate");
    index_t flipped = 0;
    for (unsigned s : flip_sites) {
        flipped |= index_t{1} << s;
    }
    std::vector<SiteMoment> moments;
    for (unsigned q = 0; q < n; ++q) {
        moments.push_back(site_moment((flipped >> q) & 1U, variant));
    }
    double total = 0.0;
    for (index_t keep = 0; keep < op.dim(); ++keep) {
        double coef = 1.0;
        for (unsigned q = 0; q < n; ++q) {
            coef *= ((keep >> q) & 1U) ? moments[q].beta : moments[q].alpha;
        }
        if (coef == 0.0) {
            continue;
        }
        total += coef * reduced_purity(op, keep);
    }
    return total;
}

} // namespace floqmbl
