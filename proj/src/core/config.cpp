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

#include "levysee/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "levysee/error.hpp"

namespace levysee {

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 7> kKinds{{
    {ExperimentKind::Simulate, "simulate"},
    {ExperimentKind::Picard, "picard"},
    {ExperimentKind::Stability, "stability"},
    {ExperimentKind::ItoCheck, "ito-check"},
    {ExperimentKind::BjCheck, "bj-check"},
    {ExperimentKind::BurkholderCheck, "burkholder-check"},
    {ExperimentKind::Validate, "validate"},
}};

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"experiment", {"kind", "seed", "out"}},
        {"monte_carlo", {"n_paths", "n_iters", "grid", "stop_tolerance", "start_seed"}},
        {"solver", {"tol", "max_iter", "max_halvings"}},
        {"stability", {"y0", "y0_halfwidth"}},
        {"validate", {"n_samples", "radius"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& field, const std::string& raw) {
    const std::string s = trim(raw);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        fail(ErrorCode::Config, field + ": expected a finite number, got '" + raw + "'");
    return v;
}

std::uint64_t to_count(const std::string& field, const std::string& raw) {
    const std::string s = trim(raw);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        fail(ErrorCode::Config, field + ": expected a nonnegative integer, got '" + raw + "'");
    return v;
}

}  // namespace

std::string_view kind_name(ExperimentKind kind) noexcept {
    for (const auto& [k, n] : kKinds)
        if (k == kind) return n;
    return "unknown";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) noexcept {
    for (const auto& [k, n] : kKinds)
        if (n == name) return k;
    return std::nullopt;
}

std::vector<std::string> kind_names() {
    std::vector<std::string> out;
    for (const auto& kv : kKinds) out.emplace_back(kv.second);
    return out;
}

ConfigDocument parse_ini(std::string_view text) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    std::istringstream in{std::string(text)};
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        fail(ErrorCode::Config, std::string("config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    ConfigDocument doc;
    for (const auto& [section, body] : tree) {
        if (!body.data().empty())
            fail(ErrorCode::Config, "config: key '" + section + "' outside of a section");
        auto& out = doc[section];
        for (const auto& [key, value] : body) out[key] = trim(value.data());
    }
    return doc;
}

ConfigDocument load_ini(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail(ErrorCode::Config, "config: cannot read '" + file.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ini(ss.str());
}

void set_value(ConfigDocument& doc, std::string_view dotted_key, std::string value) {
    const auto dot = dotted_key.find('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == dotted_key.size())
        fail(ErrorCode::Config, "config: expected section.key, got '" + std::string(dotted_key) + "'");
    doc[std::string(dotted_key.substr(0, dot))][std::string(dotted_key.substr(dot + 1))] = trim(value);
}

SystemSpec ExperimentConfig::build_system() const { return builtin_system(system, overrides); }

ExperimentConfig resolve_config(const ConfigDocument& doc) {
    for (const auto& [section, body] : doc) {
        if (section == "system") continue;
        auto it = known_keys().find(section);
        if (it == known_keys().end()) fail(ErrorCode::Config, "config: unknown section [" + section + "]");
        for (const auto& kv : body)
            if (!it->second.count(kv.first))
                fail(ErrorCode::Config, section + "." + kv.first + ": unknown key");
    }
    auto get = [&](const std::string& section, const std::string& key) -> const std::string* {
        auto s = doc.find(section);
        if (s == doc.end()) return nullptr;
        auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    };

    ExperimentConfig cfg;
    const std::string* kind = get("experiment", "kind");
    if (!kind) fail(ErrorCode::Config, "experiment.kind: missing");
    auto k = parse_kind(*kind);
    if (!k) fail(ErrorCode::Config, "experiment.kind: unknown experiment kind '" + *kind + "'");
    cfg.kind = *k;
    if (auto v = get("experiment", "seed")) cfg.seed = to_count("experiment.seed", *v);
    if (auto v = get("experiment", "out")) cfg.out_dir = *v;
    if (cfg.out_dir.empty()) fail(ErrorCode::Config, "experiment.out: empty output directory");

    if (auto s = doc.find("system"); s != doc.end()) {
        for (const auto& [key, value] : s->second) {
            if (key == "name")
                cfg.system = value;
            else
                cfg.overrides[key] = value;
        }
    }
    if (auto v = get("system", "p")) cfg.p = to_double("p", *v);
    if (auto v = get("system", "T")) cfg.horizon = to_double("T", *v);
    const double p_min = cfg.kind == ExperimentKind::BjCheck ? 1.0 : 2.0;
    if (!(cfg.p >= p_min)) {
        std::ostringstream msg;
        msg << "p: must be >= " << p_min << " for kind '" << kind_name(cfg.kind) << "' (got " << cfg.p << ")";
        fail(ErrorCode::Config, msg.str());
    }
    if (!(cfg.horizon > 0.0)) fail(ErrorCode::Config, "T: must be positive");

    if (auto v = get("monte_carlo", "n_paths")) cfg.n_paths = to_count("monte_carlo.n_paths", *v);
    if (auto v = get("monte_carlo", "n_iters")) cfg.n_iters = to_count("monte_carlo.n_iters", *v);
    if (auto v = get("monte_carlo", "grid")) cfg.grid_points = to_count("monte_carlo.grid", *v);
    if (auto v = get("monte_carlo", "stop_tolerance"))
        cfg.stop_tolerance = to_double("monte_carlo.stop_tolerance", *v);
    if (auto v = get("monte_carlo", "start_seed")) cfg.start_seed = to_count("monte_carlo.start_seed", *v);
    if (cfg.n_paths < 1) fail(ErrorCode::Config, "monte_carlo.n_paths: must be >= 1");
    if (cfg.n_paths > 10'000'000) fail(ErrorCode::Config, "monte_carlo.n_paths: must be <= 1e7");
    if (cfg.n_iters < 1 || cfg.n_iters > 60) fail(ErrorCode::Config, "monte_carlo.n_iters: must be in [1, 60]");
    if (cfg.grid_points < 1 || cfg.grid_points > 1'000'000)
        fail(ErrorCode::Config, "monte_carlo.grid: must be in [1, 1e6]");
    if (cfg.stop_tolerance < 0.0) fail(ErrorCode::Config, "monte_carlo.stop_tolerance: must be nonnegative");

    if (auto v = get("solver", "tol")) cfg.tolerance = to_double("solver.tol", *v);
    if (auto v = get("solver", "max_iter")) cfg.max_iter = int(to_count("solver.max_iter", *v));
    if (auto v = get("solver", "max_halvings")) cfg.max_halvings = int(to_count("solver.max_halvings", *v));
    if (!(cfg.tolerance > 0.0)) fail(ErrorCode::Config, "solver.tol: must be positive");
    if (cfg.max_iter < 1) fail(ErrorCode::Config, "solver.max_iter: must be >= 1");
    if (cfg.max_halvings > 40) fail(ErrorCode::Config, "solver.max_halvings: must be <= 40");

    if (auto v = get("stability", "y0")) cfg.y0 = *v;
    if (auto v = get("stability", "y0_halfwidth")) cfg.y0_halfwidth = to_double("stability.y0_halfwidth", *v);
    if (cfg.y0_halfwidth < 0.0) fail(ErrorCode::Config, "stability.y0_halfwidth: must be nonnegative");

    if (auto v = get("validate", "n_samples")) cfg.n_samples = to_count("validate.n_samples", *v);
    if (auto v = get("validate", "radius")) cfg.radius = to_double("validate.radius", *v);
    if (cfg.n_samples < 1) fail(ErrorCode::Config, "validate.n_samples: must be >= 1");
    if (!(cfg.radius > 0.0)) fail(ErrorCode::Config, "validate.radius: must be positive");

    (void)cfg.build_system();
    return cfg;
}

}  // namespace levysee
