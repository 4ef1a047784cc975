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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "floqmbl/kernels.hpp"

namespace floqmbl::kernels {

namespace {

const KernelSet *select_default() {
    const char *forced = std::getenv("FLOQMBL_KERNEL");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
        return &scalar_kernels();
    }
    if (const KernelSet *fast = avx2_kernels()) {
        return fast;
    }
    return &scalar_kernels();
}

std::atomic<const KernelSet *> &slot() {
    static std::atomic<const KernelSet *> current{select_default()};
    return current;
}

} // namespace

const KernelSet &active() { return *slot().load(std::memory_order_acquire); }

void set_active(const KernelSet &set) {
    slot().store(&set, std::memory_order_release);
}

} // namespace floqmbl::kernels
