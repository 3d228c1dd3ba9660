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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levysee/coefficients.hpp"
#include "levysee/intensity.hpp"
#include "levysee/rng.hpp"
#include "levysee/semigroup.hpp"

namespace levysee {

/// Uniform law on the box center ± half_width (a point mass when half_width = 0).
struct InitialLaw {
    StateVector center;
    double half_width = 0.0;

    bool is_point_mass() const noexcept { return half_width == 0.0; }
    StateVector sample(CounterRng& rng) const;
};

/// Hypothesis constants (α, M, C, D, F) of a system.
struct DeclaredConstants {
    double alpha = 0.0;
    double M = 0.0;
    double C = 0.0;
    double D = 0.0;
    double D_f = 0.0;
    double D_k = 0.0;
    double F = 0.0;
};

/// dX = AX dt + f(t, X) dt + ∫_E k(t, ξ, X_{t-}) Ñ(dt, dξ) on [0, horizon].
struct SystemSpec {
    std::string name;
    SpectralSemigroup semigroup;
    std::shared_ptr<const DriftCoefficient> drift;
    std::shared_ptr<const JumpCoefficient> jump;
    IntensityMeasure nu;
    InitialLaw initial;
    double p = 2.0;
    double horizon = 1.0;
    /// Total growth bound removed by rescale_system so far.
    double rescale_shift = 0.0;
    /// t -> E‖X_t‖², when the family has a closed form.
    std::function<double(double)> second_moment;

    std::size_t dimension() const noexcept { return semigroup.dimension(); }
    DeclaredConstants constants() const;

    /// f(t, x) - ∫_E k(t, ξ, x) ν(dξ): the finite-variation density of the
    /// compensated equation.
    StateVector compensated_drift(double t, const StateVector& x) const;
};

using ParameterMap = std::map<std::string, std::string>;

/// Builtin families: linear-ou-jump, cubic-dissipative, saturating-drift.
SystemSpec builtin_system(std::string_view name, const ParameterMap& overrides = {});
std::vector<std::string> builtin_system_names();

/// Exponential change of variables S̃_t = e^{-αt} S_t, f̃ = e^{-αt} f(t, e^{αt} x),
/// k̃ = e^{-αt} k(t, ξ, e^{αt} x), X̃_t = e^{-αt} X_t. The result has growth bound 0.
SystemSpec rescale_system(const SystemSpec& sys);

}  // namespace levysee
