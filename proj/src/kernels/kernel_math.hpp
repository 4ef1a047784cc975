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

#include "floqmbl/common.hpp"

namespace floqmbl::kernels {

// Plain complex arithmetic. std::complex multiplication goes through the
// Annex G NaN recovery path, which the vector kernels cannot reproduce, so
// both kernel sets spell the product out the same way.
inline complex_t cmul(complex_t a, complex_t b) {
    const double re = a.real() * b.real() - a.imag() * b.imag();
    const double im = a.real() * b.imag() + a.imag() * b.real();
    return {re, im};
}

inline complex_t cadd(complex_t a, complex_t b) {
    return {a.real() + b.real(), a.imag() + b.imag()};
}

} // namespace floqmbl::kernels
