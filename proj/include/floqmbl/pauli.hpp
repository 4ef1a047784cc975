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

#include <string>
#include <string_view>
#include <vector>

#include "floqmbl/common.hpp"

namespace floqmbl {

enum class PauliAxis { X, Y, Z };

struct PauliFactor {
    unsigned site;
    PauliAxis axis;

    friend bool operator==(const PauliFactor &, const PauliFactor &) = default;
};

/// Product of single-site Pauli matrices on distinct sites. The empty string
/// is the identity.
class PauliString {
  public:
    PauliString() = default;

    /// Throws std::invalid_argument on a repeated site.
    explicit PauliString(std::vector<PauliFactor> factors);

    /// Parses whitespace separated tokens such as "X3 X4" or "Z0". "I" or an
    /// empty string give the identity.
    static PauliString parse(std::string_view text);

    [[nodiscard]] const std::vector<PauliFactor> &factors() const {
        return factors_;
    }

    /// Bit q set when the factor on q is X or Y.
    [[nodiscard]] index_t flip_mask() const;

    /// Largest site + 1, 0 for the identity.
    [[nodiscard]] unsigned min_qubits() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::vector<PauliFactor> factors_;
};

} // namespace floqmbl
