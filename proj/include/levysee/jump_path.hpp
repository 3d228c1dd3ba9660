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
#include <functional>
#include <span>
#include <vector>

#include "levysee/intensity.hpp"
#include "levysee/state_vector.hpp"

namespace levysee {

struct JumpEvent {
    double time;
    std::vector<double> mark;

    friend bool operator==(const JumpEvent&, const JumpEvent&) = default;
};

/// Realized Poisson random measure on (0, horizon] x E.
class JumpPath {
public:
    JumpPath(double horizon, std::vector<JumpEvent> events, std::uint64_t seed);

    double horizon() const noexcept { return horizon_; }
    const std::vector<JumpEvent>& events() const noexcept { return events_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t count() const noexcept { return events_.size(); }

    /// Superposition of two independent realizations on the same horizon.
    static JumpPath merge(const JumpPath& a, const JumpPath& b);

    friend bool operator==(const JumpPath&, const JumpPath&) = default;

private:
    double horizon_;
    std::vector<JumpEvent> events_;
    std::uint64_t seed_;
};

/// Arrival times by exponential spacings, marks from nu's sampler on a
/// separate counter.
JumpPath sample_jump_path(const IntensityMeasure& nu, double horizon, std::uint64_t seed);

using JumpIntegrand = std::function<StateVector(double t, std::span<const double> mark)>;

/// Σ_{τ_i <= t_end} g(τ_i, ξ_i) - ∫_0^{t_end} ∫_E g(s, ξ) nu(dξ) ds.
StateVector compensated_integral(const JumpPath& path, const IntensityMeasure& nu,
                                 const JumpIntegrand& integrand, double t_end);

/// [M](t_end) = Σ_{τ_i <= t_end} ‖g(τ_i, ξ_i)‖² for the pure-jump integral of g.
double quadratic_variation(const JumpPath& path, const JumpIntegrand& integrand, double t_end);

/// [M]^c(t_end): identically zero for pure-jump integrals.
double continuous_quadratic_variation(const JumpPath& path, const JumpIntegrand& integrand,
                                      double t_end);

}  // namespace levysee
