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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "floqmbl/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

unsigned threads_from_env() {
    const char *env = std::getenv("FLOQMBL_THREADS");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    try {
        const long v = std::stol(env);
        return v > 0 ? static_cast<unsigned>(v) : 1;
    } catch (const std::exception &) {
        std::cerr << "warning: ignoring malformed FLOQMBL_THREADS='" << env
                  << "'\n";
        return 1;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Floquet MBL order-parameter dynamics and randomized "
                 "measurement simulator"};
    std::string config_path;
    std::string output_dir;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    app.add_option("--config", config_path, "JSON run configuration")
        ->required();
    auto *out_opt =
        app.add_option("--output-dir", output_dir, "Override output_dir");
    auto *seed_opt = app.add_option("--seed", seed, "Override seed");
    auto *threads_opt = app.add_option(
        "--threads", threads,
        "Worker threads (default $FLOQMBL_THREADS, else 1)")
                            ->check(CLI::PositiveNumber);
    app.set_version_flag("--version", floqmbl::kLibraryVersion);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    floqmbl::RunConfig cfg;
    try {
        cfg = floqmbl::load_config(config_path);
    } catch (const floqmbl::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    floqmbl::RunOptions options;
    if (*out_opt) {
        options.output_dir = output_dir;
    }
    if (*seed_opt) {
        options.seed = seed;
    }
    options.threads = *threads_opt ? threads : threads_from_env();

    try {
        const auto summary = floqmbl::execute(cfg, options);
        for (const auto &name : summary.result_files) {
            std::cout << (summary.output_dir / name).string() << '\n';
        }
        std::cout << (summary.output_dir / "manifest.json").string() << '\n';
    } catch (const std::exception &e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
