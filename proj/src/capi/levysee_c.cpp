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

#include "levysee/levysee.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "levysee/config.hpp"
#include "levysee/error.hpp"
#include "levysee/experiment.hpp"
#include "levysee/inequalities.hpp"
#include "levysee/semigroup.hpp"
#include "levysee/stability.hpp"

struct lsee_config {
    levysee::ConfigDocument doc;
};

struct lsee_result {
    levysee::ExperimentResult result;
    std::string out_dir;
};

namespace {

thread_local std::string g_last_error;

lsee_status status_of(levysee::ErrorCode code) {
    switch (code) {
        case levysee::ErrorCode::InvalidArgument: return LSEE_ERR_INVALID_ARGUMENT;
        case levysee::ErrorCode::Config: return LSEE_ERR_CONFIG;
        case levysee::ErrorCode::NotConverged: return LSEE_ERR_NOT_CONVERGED;
        case levysee::ErrorCode::Diverged: return LSEE_ERR_DIVERGED;
        case levysee::ErrorCode::Io: return LSEE_ERR_IO;
    }
    return LSEE_ERR_INTERNAL;
}

template <typename F>
lsee_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return LSEE_OK;
    } catch (const levysee::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
    } catch (const std::exception& e) {
        g_last_error = e.what();
    } catch (...) {
        g_last_error = "unknown error";
    }
    return LSEE_ERR_INTERNAL;
}

lsee_status null_argument(const char* what) {
    g_last_error = std::string(what) + ": null argument";
    return LSEE_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* lsee_version(void) { return "0.3.0"; }

const char* lsee_last_error(void) { return g_last_error.c_str(); }

lsee_status lsee_config_load(const char* path, lsee_config_t** out) {
    if (!path || !out) return null_argument("lsee_config_load");
    *out = nullptr;
    return guarded([&] { *out = new lsee_config{levysee::load_ini(path)}; });
}

lsee_status lsee_config_parse(const char* text, lsee_config_t** out) {
    if (!text || !out) return null_argument("lsee_config_parse");
    *out = nullptr;
    return guarded([&] { *out = new lsee_config{levysee::parse_ini(text)}; });
}

lsee_status lsee_config_new(lsee_config_t** out) {
    if (!out) return null_argument("lsee_config_new");
    return guarded([&] { *out = new lsee_config{}; });
}

lsee_status lsee_config_set(lsee_config_t* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return null_argument("lsee_config_set");
    return guarded([&] { levysee::set_value(cfg->doc, key, value); });
}

lsee_status lsee_config_validate(const lsee_config_t* cfg) {
    if (!cfg) return null_argument("lsee_config_validate");
    return guarded([&] { (void)levysee::resolve_config(cfg->doc); });
}

void lsee_config_free(lsee_config_t* cfg) { delete cfg; }

lsee_status lsee_experiment_run(const lsee_config_t* cfg, lsee_result_t** out) {
    if (!cfg || !out) return null_argument("lsee_experiment_run");
    *out = nullptr;
    return guarded([&] {
        const levysee::ExperimentConfig resolved = levysee::resolve_config(cfg->doc);
        *out = new lsee_result{levysee::run_experiment(resolved), resolved.out_dir};
    });
}

int lsee_result_exit_code(const lsee_result_t* result) { return result ? result->result.exit_code : 1; }

const char* lsee_result_summary_json(const lsee_result_t* result) {
    return result ? result->result.summary_json.c_str() : nullptr;
}

size_t lsee_result_file_count(const lsee_result_t* result) { return result ? result->result.files.size() : 0; }

const char* lsee_result_file_name(const lsee_result_t* result, size_t index) {
    if (!result || index >= result->result.files.size()) return nullptr;
    return result->result.files[index].name.c_str();
}

const char* lsee_result_file_contents(const lsee_result_t* result, size_t index) {
    if (!result || index >= result->result.files.size()) return nullptr;
    return result->result.files[index].contents.c_str();
}

lsee_status lsee_result_write(const lsee_result_t* result, const char* dir) {
    if (!result) return null_argument("lsee_result_write");
    return guarded([&] { levysee::write_outputs(result->result, dir ? std::string(dir) : result->out_dir); });
}

const char* lsee_result_output_dir(const lsee_result_t* result) { return result ? result->out_dir.c_str() : nullptr; }

void lsee_result_free(lsee_result_t* result) { delete result; }

lsee_status lsee_gamma_constant(double p, double alpha, double M, double C, double F, double* gamma) {
    if (!gamma) return null_argument("lsee_gamma_constant");
    return guarded([&] { *gamma = levysee::gamma_constant(p, alpha, M, C, F); });
}

lsee_status lsee_pth_power_gap_bound(const double* x, const double* y, size_t dim, double p, double* lhs,
                                     double* rhs) {
    if (!x || !y || !lhs || !rhs) return null_argument("lsee_pth_power_gap_bound");
    return guarded([&] {
        const levysee::StateVector xv(std::vector<double>(x, x + dim));
        const levysee::StateVector yv(std::vector<double>(y, y + dim));
        const levysee::GapBound g = levysee::pth_power_gap_bound(xv, yv, p);
        *lhs = g.lhs;
        *rhs = g.rhs;
    });
}

lsee_status lsee_semigroup_apply(const double* eigenvalues, size_t dim, double t, const double* x, double* out) {
    if (!eigenvalues || !x || !out) return null_argument("lsee_semigroup_apply");
    return guarded([&] {
        const levysee::SpectralSemigroup sg(std::vector<double>(eigenvalues, eigenvalues + dim));
        const levysee::StateVector y = sg.apply(t, levysee::StateVector(std::vector<double>(x, x + dim)));
        for (size_t i = 0; i < dim; ++i) out[i] = y[i];
    });
}

}  // extern "C"
