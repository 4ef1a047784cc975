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

#include "floqmbl/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace floqmbl {

PauliString::PauliString(std::vector<PauliFactor> factors)
    : factors_(std::move(factors)) {
    std::vector<unsigned> sites;
    sites.reserve(factors_.size());
    for (const auto &f : factors_) {
        sites.push_back(f.site);
    }
    std::sort(sites.begin(), sites.end());
    if (std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
        throw std::invalid_argument("PauliString: duplicate site");
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<PauliFactor> factors;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "I") {
            continue;
        }
        PauliAxis axis;
        switch (token[0]) {
        case 'X':
            axis = PauliAxis::X;
            break;
        case 'Y':
            axis = PauliAxis::Y;
            break;
        case 'Z':
            axis = PauliAxis::Z;
            break;
        default:
            throw std::invalid_argument("PauliString: bad token '" + token +
                                        "'");
        }
        unsigned site = 0;
        const char *first = token.data() + 1;
        const char *last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, site);
        if (first == last || ec != std::errc{} || ptr != last) {
            throw std::invalid_argument("PauliString: bad token '" + token +
                                        "'");
        }
        factors.push_back({site, axis});
    }
    return PauliString(std::move(factors));
}

index_t PauliString::flip_mask() const {
    index_t mask = 0;
    for (const auto &f : factors_) {
        if (f.axis != PauliAxis::Z) {
            mask |= index_t{1} << f.site;
        }
    }
    return mask;
}

unsigned PauliString::min_qubits() const {
    unsigned n = 0;
    for (const auto &f : factors_) {
        n = std::max(n, f.site + 1);
    }
    return n;
}

std::string PauliString::to_string() const {
    if (factors_.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &f : factors_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += f.axis == PauliAxis::X ? 'X' : f.axis == PauliAxis::Y ? 'Y' : 'Z';
        out += std::to_string(f.site);
    }
    return out;
}

} // namespace floqmbl
