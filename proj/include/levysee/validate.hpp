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

#include "levysee/system.hpp"

namespace levysee {

/// Empirical hypothesis constants (sample maxima of the defining ratios) next
/// to the declared ones.
struct ValidationReport {
    DeclaredConstants declared;
    DeclaredConstants empirical;  // alpha is copied from the semigroup
    bool M_ok = false;
    bool C_ok = false;
    bool D_ok = false;
    bool F_ok = false;
    std::size_t n_samples = 0;
    double radius = 0.0;
    std::uint64_t seed = 0;

    bool passed() const noexcept { return M_ok && C_ok && D_ok && F_ok; }
};

/// Samples (t, x, y) with ‖x‖, ‖y‖ <= radius. ν-integrals use the jump
/// coefficient's closed forms, so the outcome is deterministic in `seed`.
ValidationReport validate_hypothesis(const SystemSpec& sys, std::size_t n_samples, double radius, std::uint64_t seed);

}  // namespace levysee
