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

#include "levysee/convolution.hpp"
#include "levysee/estimate.hpp"
#include "levysee/system.hpp"

namespace levysee {

struct SolverSettings {
    std::size_t grid_points = 512;
    /// Relative tolerance of the implicit drift correction.
    double tolerance = 1e-14;
    int max_iter = 200;
    /// Direct scheme only: step halvings allowed when the correction does not contract.
    int max_halvings = 20;
};

/// Solves X_t = S_t X0 + ∫_0^t S_{t-s} f(s, X_s) ds + V(t) on V's grid with
/// the exponential trapezoidal rule in integrating-factor form
///   Y_{i+1} = S_Δ (Y_i + Δ/2 f(t_i, Y_i + V_i)) + Δ/2 f(t_{i+1}, Y_{i+1} + V_{i+1}-),
/// X = Y + V. The implicit term is resolved by fixed-point iteration.
PathGrid solve_deterministic_skeleton(const SystemSpec& sys, const PathGrid& forcing, const StateVector& x0,
                                      const SolverSettings& settings = {});

/// Max over grid steps of the discrete skeleton equation's residual norm.
double skeleton_residual(const SystemSpec& sys, const PathGrid& forcing, const StateVector& x0, const PathGrid& solution);

/// ‖X(t)‖ <= e^{max(α,0) t} ‖X0‖ + ‖V(t)‖ + ∫_0^t e^{(α+M)(t-s)} ‖f(s, S_s X0 + V(s))‖ ds
/// evaluated on the grid (trapezoidal quadrature of the integral).
struct SkeletonBoundCheck {
    std::vector<double> norm;
    std::vector<double> bound;
    double worst_excess = 0.0;  // max(norm - bound), relative to 1 + bound
    bool holds = true;
};
SkeletonBoundCheck skeleton_apriori_bound(const SystemSpec& sys, const PathGrid& forcing, const StateVector& x0,
                                          const PathGrid& solution, double tolerance = 1e-6);

/// Jump-adapted exponential trapezoidal scheme for the full equation: between
/// grid points the compensated drift f - ∫k dν is integrated like the skeleton
/// drift, and at an event X(τ) = X(τ-) + k(τ, ξ, X(τ-)).
PathGrid direct_scheme(const SystemSpec& sys, const JumpPath& path, const TimeGrid& grid, const StateVector& x0,
                       const SolverSettings& settings = {});

/// V_t = ∫_0^t ∫_E S_{t-s} k(s, ξ, X_{s-}) Ñ(ds, dξ) along `path`, with the
/// compensator integrated by the same trapezoidal rule as the skeleton.
PathGrid jump_forcing_path(const SystemSpec& sys, const JumpPath& path, const PathGrid& state);

/// Z = V + M of a solved path: dV/ds = f(t_i, X_i) - ∫k(t_i, ξ, X_i) dν on
/// [t_i, t_{i+1}), jumps k(τ, ξ, X(τ-)).
Forcing mild_decomposition(const SystemSpec& sys, const JumpPath& path, const PathGrid& solution);

struct PicardTrace {
    std::size_t n_iters = 0;
    /// h[n] = E‖X^{n+1}_T - X^n_T‖^p
    std::vector<MonteCarloEstimate> h;
    /// E sup_t ‖X^{n+1}_t - X^n_t‖^p (diagnostic only)
    std::vector<MonteCarloEstimate> h_sup;
    /// C0 C1^n T^n / n!
    std::vector<double> bound;
    double C0 = 0.0;
    double C1 = 0.0;
    double beta = 0.0;
    double gamma_lemma = 0.0;
    bool stopped_early = false;
};

struct PicardOptions {
    std::size_t n_iters = 8;
    std::size_t n_paths = 1000;
    std::uint64_t seed = 1;
    /// Stop once h[n] <= stop_tolerance * h[0]; 0 runs all iterations.
    double stop_tolerance = 0.0;
    /// Nonzero: perturb the starting iterate S_t X0 by a seeded offset.
    std::uint64_t start_seed = 0;
    bool keep_solutions = true;
    SolverSettings solver;
};

struct PicardResult {
    std::vector<JumpPath> paths;
    std::vector<StateVector> initial;
    /// Final iterate per path (when keep_solutions).
    std::vector<PathGrid> solutions;
    PicardTrace trace;
};

/// Picard iteration X^0 = S_t X0, X^n = skeleton(V^n) with V^n driven by
/// X^{n-1}. Each Monte Carlo path keeps one JumpPath for all iterates.
PicardResult picard_solve(const SystemSpec& sys, const PicardOptions& options);

/// β = pM + (p-1)(p-2)C/2, γ = (p-1)(2C + pF)/2, C1 = γ e^{βT}.
struct PicardConstants {
    double beta;
    double gamma_lemma;
    double C1;
};
PicardConstants picard_constants(const DeclaredConstants& c, double p, double horizon);

/// Per-path seeds shared by every Monte Carlo driver.
JumpPath monte_carlo_path(const SystemSpec& sys, std::uint64_t seed, std::size_t index);
StateVector monte_carlo_initial(const SystemSpec& sys, std::uint64_t seed, std::size_t index);

}  // namespace levysee
