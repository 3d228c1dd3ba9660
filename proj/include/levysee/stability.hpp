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
#include <vector>

#include "levysee/estimate.hpp"
#include "levysee/solver.hpp"
#include "levysee/system.hpp"

namespace levysee {

/// γ = pα + pM + p(p-1)C/2 + p(p-1)((2^{p-2}+1)C + 2^{p-2}F)/2. Requires p >= 2, C, F >= 0.
double gamma_constant(double p, double alpha, double M, double C, double F);

/// The exponent the α = 0 argument actually produces: γ without pα and without
/// the middle p(p-1)C/2 term. Diagnostic only.
double gamma_proof(double p, double M, double C, double F);

struct HypothesisConstants {
    double p = 2.0;
    double alpha = 0.0;
    double M = 0.0;
    double C = 0.0;
    double F = 0.0;

    static HypothesisConstants of(const SystemSpec& sys);
    double gamma() const { return gamma_constant(p, alpha, M, C, F); }
    double gamma_proof() const { return levysee::gamma_proof(p, M, C, F); }
};

struct DecayCurve {
    std::vector<double> times;
    /// E‖X_t - Y_t‖^p at the uniform grid times
    std::vector<MonteCarloEstimate> moment;
    /// Least-squares slope of log moment over [T/4, T]; valid only when has_fit.
    double fitted_rate = 0.0;
    double fitted_rate_stderr = 0.0;
    bool has_fit = false;
};

/// Solves the system from X0 ~ x_law and Y0 ~ y_law with the same JumpPath on
/// every Monte Carlo path and estimates the p-th moment of the difference.
DecayCurve coupled_decay(const SystemSpec& sys, const InitialLaw& x_law, const InitialLaw& y_law,
                         std::size_t n_paths, std::uint64_t seed, const SolverSettings& settings = {});

/// OLS slope (and its standard error) of log y against t over t in [lo, hi],
/// skipping non-positive y. has_fit is false with fewer than two points.
struct LogLinearFit {
    double slope = 0.0;
    double slope_stderr = 0.0;
    bool has_fit = false;
};
LogLinearFit fit_log_rate(const std::vector<double>& t, const std::vector<double>& y, double lo, double hi);

}  // namespace levysee
