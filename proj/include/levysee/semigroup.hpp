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

#include <vector>

#include "levysee/state_vector.hpp"

namespace levysee {

/// S_t = e^{tA} for a generator A that is diagonal in the Galerkin basis.
/// The growth bound is the largest eigenvalue, so ‖S_t‖ = e^{alpha t} exactly.
class SpectralSemigroup {
public:
    explicit SpectralSemigroup(std::vector<double> eigenvalues);

    std::size_t dimension() const noexcept { return eigenvalues_.size(); }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
    double growth_bound() const noexcept { return alpha_; }
    bool is_contraction() const noexcept { return alpha_ <= 0.0; }

    /// S_t x. Throws for t < 0 or a dimension mismatch.
    StateVector apply(double t, const StateVector& x) const;
    void apply_in_place(double t, StateVector& x) const;

    /// Semigroup of A - shift I.
    SpectralSemigroup shifted(double shift) const;

private:
    std::vector<double> eigenvalues_;
    double alpha_;
};

}  // namespace levysee
