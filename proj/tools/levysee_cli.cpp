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

// levysee command-line driver: one subcommand per experiment kind.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "levysee/levysee.h"

namespace {

const char* const kKinds[] = {"simulate", "picard", "stability", "ito-check", "bj-check", "burkholder-check",
                              "validate"};

struct ConfigDeleter {
    void operator()(lsee_config_t* c) const { lsee_config_free(c); }
};
struct ResultDeleter {
    void operator()(lsee_result_t* r) const { lsee_result_free(r); }
};

int report_error(lsee_status s) {
    std::cerr << "levysee: error: " << lsee_last_error() << '\n';
    return (s == LSEE_ERR_NOT_CONVERGED || s == LSEE_ERR_DIVERGED) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"levysee: Monte Carlo lab for semilinear evolution equations with Poisson jump noise"};
    app.set_version_flag("--version", std::string(lsee_version()));
    app.require_subcommand(1);

    std::string config_path, out_dir, seed;
    std::vector<std::string> sets;
    bool quiet = false;
    std::map<std::string, CLI::App*> subs;
    for (const char* kind : kKinds) {
        CLI::App* sub = app.add_subcommand(kind, std::string("run a ") + kind + " experiment");
        sub->add_option("--config,-c", config_path, "INI experiment configuration")->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "override experiment.seed");
        sub->add_option("--out,-o", out_dir, "override experiment.out");
        sub->add_option("--set", sets, "override any key: section.key=value")->take_all();
        sub->add_flag("--quiet,-q", quiet, "print nothing on success");
        subs[kind] = sub;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    std::string kind;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) kind = name;

    lsee_config_t* raw = nullptr;
    lsee_status s = config_path.empty() ? lsee_config_new(&raw) : lsee_config_load(config_path.c_str(), &raw);
    if (s != LSEE_OK) return report_error(s);
    std::unique_ptr<lsee_config_t, ConfigDeleter> cfg(raw);

    std::vector<std::pair<std::string, std::string>> overrides{{"experiment.kind", kind}};
    if (!seed.empty()) overrides.emplace_back("experiment.seed", seed);
    if (!out_dir.empty()) overrides.emplace_back("experiment.out", out_dir);
    for (const auto& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "levysee: error: --set expects section.key=value, got '" << kv << "'\n";
            return 1;
        }
        overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    for (const auto& [k, v] : overrides)
        if ((s = lsee_config_set(cfg.get(), k.c_str(), v.c_str())) != LSEE_OK) return report_error(s);

    lsee_result_t* rraw = nullptr;
    if ((s = lsee_experiment_run(cfg.get(), &rraw)) != LSEE_OK) return report_error(s);
    std::unique_ptr<lsee_result_t, ResultDeleter> result(rraw);
    if ((s = lsee_result_write(result.get(), nullptr)) != LSEE_OK) return report_error(s);

    const int rc = lsee_result_exit_code(result.get());
    const auto summary = nlohmann::json::parse(lsee_result_summary_json(result.get()));
    if (!quiet || rc != 0) {
        for (const auto& c : summary["checks"])
            std::printf("%-6s %s\n", c["passed"].get<bool>() ? "pass" : "FAIL", c["name"].get<std::string>().c_str());
        std::printf("%s: %s -> %s\n", kind.c_str(), rc == 0 ? "all checks passed" : "assertion failure",
                    lsee_result_output_dir(result.get()));
    }
    return rc;
}
