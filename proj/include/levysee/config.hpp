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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levysee/system.hpp"

namespace levysee {

enum class ExperimentKind { Simulate, Picard, Stability, ItoCheck, BjCheck, BurkholderCheck, Validate };

std::string_view kind_name(ExperimentKind kind) noexcept;
std::optional<ExperimentKind> parse_kind(std::string_view name) noexcept;
std::vector<std::string> kind_names();

/// Sections of an INI file, keys as written.
using ConfigDocument = std::map<std::string, std::map<std::string, std::string>>;

ConfigDocument parse_ini(std::string_view text);
ConfigDocument load_ini(const std::filesystem::path& file);
/// "section.key" = value; throws on a key without a section.
void set_value(ConfigDocument& doc, std::string_view dotted_key, std::string value);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Simulate;
    std::uint64_t seed = 1;
    std::string out_dir = "levysee-out";

    std::string system = "linear-ou-jump";
    /// Every [system] key except name (p, T, dimension, eigenvalues, ...).
    ParameterMap overrides;
    double p = 2.0;
    double horizon = 1.0;

    std::size_t grid_points = 512;
    std::size_t n_paths = 1000;
    std::size_t n_iters = 8;
    double stop_tolerance = 0.0;
    std::uint64_t start_seed = 0;

    double tolerance = 1e-14;
    int max_iter = 200;
    int max_halvings = 20;

    /// stability: second initial law (defaults to the origin)
    std::string y0 = "0";
    double y0_halfwidth = 0.0;

    /// validate
    std::size_t n_samples = 10000;
    double radius = 10.0;

    SystemSpec build_system() const;
};

/// Checks ranges and builds the system once; failures throw Error(Config)
/// with a message that starts with the offending field.
ExperimentConfig resolve_config(const ConfigDocument& doc);

}  // namespace levysee
