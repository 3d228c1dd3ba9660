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
#include <span>
#include <variant>
#include <vector>

#include "levysee/state_vector.hpp"

namespace levysee {

/// Finitely many marks with probabilities (normalized at construction).
struct AtomMarks {
    std::vector<std::vector<double>> atoms;
    std::vector<double> weights;
};

/// Scalar mark uniform on [lower, upper].
struct UniformMarks {
    double lower = 0.0;
    double upper = 1.0;
};

/// Scalar centered Gaussian with scale sigma, truncated to [-cutoff, cutoff].
struct TruncatedGaussianMarks {
    double sigma = 1.0;
    double cutoff = 3.0;
};

using MarkLaw = std::variant<AtomMarks, UniformMarks, TruncatedGaussianMarks>;

using MarkFunction = std::function<StateVector(std::span<const double> mark)>;
using ScalarMarkFunction = std::function<double(std::span<const double> mark)>;

/// Finite intensity measure nu = total_mass * (mark law) on the mark space E.
class IntensityMeasure {
public:
    IntensityMeasure(double total_mass, MarkLaw law);

    double total_mass() const noexcept { return total_mass_; }
    std::size_t mark_dimension() const noexcept { return mark_dim_; }
    const MarkLaw& law() const noexcept { return law_; }

    /// Maps u in (0,1) to a mark by inverse-CDF (atoms, uniform, truncated Gaussian).
    std::vector<double> sample_mark(double u) const;

    /// ∫_E ‖ξ‖^q nu(dξ), in closed form.
    double moment(double q) const;
    /// ∫_E ξ nu(dξ).
    std::vector<double> mean_integral() const;

    /// ∫_E g(ξ) nu(dξ): exact for atoms, 64-point Gauss-Legendre (split at 0)
    /// for continuous scalar laws.
    StateVector integrate(const MarkFunction& g) const;
    double integrate_scalar(const ScalarMarkFunction& g) const;

private:
    double total_mass_;
    MarkLaw law_;
    std::size_t mark_dim_ = 1;
};

}  // namespace levysee
