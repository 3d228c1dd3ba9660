/*
 * Copyright 2026 The levysee Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "levysee/config.hpp"

namespace levysee {

struct OutputFile {
    std::string name;
    std::string contents;
};

struct ExperimentResult {
    /// 0 when every asserted inequality holds, 2 otherwise.
    int exit_code = 0;
    std::string summary_json;
    /// summary.json first, then the experiment's CSV files.
    std::vector<OutputFile> files;
};

/// Runs one experiment in memory. Solver failures propagate as Error.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes every file of `result` into `dir`, creating it if needed.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace levysee
