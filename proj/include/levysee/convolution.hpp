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

#include <cstddef>
#include <functional>
#include <vector>

#include "levysee/intensity.hpp"
#include "levysee/jump_path.hpp"
#include "levysee/semigroup.hpp"
#include "levysee/state_vector.hpp"

namespace levysee {

inline constexpr std::size_t kNoEvent = static_cast<std::size_t>(-1);

/// Jump-adapted grid: t_0 = 0 < ... < t_N = T, the union of a uniform grid
/// and every event time of a JumpPath.
struct TimeGrid {
    std::vector<double> times;
    /// Index into the path's events for grid points that carry a jump, else kNoEvent.
    std::vector<std::size_t> event;
    /// Grid indices of the uniform points j T / n, j = 0..n.
    std::vector<std::size_t> uniform;

    std::size_t size() const noexcept { return times.size(); }
};

TimeGrid make_time_grid(double horizon, std::size_t n_uniform, const JumpPath& path);
TimeGrid make_time_grid(double horizon, std::size_t n_uniform, const std::vector<double>& jump_times);

/// Càdlàg trajectory on a TimeGrid: right values X(t_i) and left limits X(t_i-).
struct PathGrid {
    TimeGrid grid;
    std::vector<StateVector> values;
    std::vector<StateVector> left_values;

    const std::vector<double>& times() const noexcept { return grid.times; }
    std::size_t size() const noexcept { return grid.times.size(); }
    /// max_i max(‖X(t_i)‖, ‖X(t_i-)‖)
    double sup_norm() const;
};

struct JumpIncrement {
    double time;
    StateVector increment;
};

/// Semimartingale Z = V + M given by the density of its finite-variation part
/// (compensators included) and its jumps.
struct Forcing {
    std::size_t dimension = 0;
    /// dV/ds; empty means zero.
    std::function<StateVector(double)> drift_density;
    std::vector<JumpIncrement> jumps;
};

/// Forcing of ∫_0^t drift_path(s) ds + ∫_0^t ∫_E jump_map(s, ξ) Ñ(ds, dξ) along a realized path.
Forcing make_jump_forcing(std::size_t dimension, const JumpPath& path, const IntensityMeasure& nu,
                          const JumpIntegrand& jump_map, std::function<StateVector(double)> drift_path = {});

/// S_{b-a} x + ∫_a^b S_{b-s} v(s) ds, the integral by 16-point Gauss-Legendre.
StateVector flow(const SpectralSemigroup& sg, const StateVector& x, double a, double b,
                 const std::function<StateVector(double)>& density);

/// X(t) = S_t X0 + ∫_0^t S_{t-s} dZ(s) on the grid by the exact diagonal
/// recursion. Throws if a jump time is not a grid point.
PathGrid stochastic_convolution(const SpectralSemigroup& sg, const StateVector& x0, const Forcing& forcing,
                                const TimeGrid& grid);

PathGrid stochastic_convolution(const SpectralSemigroup& sg, const StateVector& x0,
                                const std::function<StateVector(double)>& drift_path, const JumpPath& path,
                                const IntensityMeasure& nu, const JumpIntegrand& jump_map, const TimeGrid& grid);

/// Grid index of every jump in `forcing`; throws when one is missing.
std::vector<std::size_t> locate_jumps(const Forcing& forcing, const TimeGrid& grid);

}  // namespace levysee
