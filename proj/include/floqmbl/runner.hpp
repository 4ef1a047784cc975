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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "floqmbl/run_config.hpp"

namespace floqmbl {

struct RunOptions {
    std::optional<std::string> output_dir;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

struct RunSummary {
    std::filesystem::path output_dir;
    std::vector<std::string> result_files; // names inside output_dir
};

/// Executes the configured mode and writes its result files plus
/// manifest.json into the output directory. Every file is written to a
/// temporary name inside that directory and renamed into place.
RunSummary execute(RunConfig cfg, const RunOptions &options);

/// Estimator-vs-oracle comparison emitted by the validate mode.
nlohmann::json validation_report(const CircuitConfig &circuit,
                                 const PauliString &op, int n_steps,
                                 int num_unitaries, std::uint64_t seed,
                                 unsigned threads);

} // namespace floqmbl
