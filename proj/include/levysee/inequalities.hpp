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

namespace levysee {

struct GapBound {
    double lhs;
    double rhs;
};

/// lhs = ‖x+y‖^p - ‖x‖^p - p‖x‖^{p-2}<x, y>,
/// rhs = p(p-1)/2 (‖x‖^{p-2} + ‖x+y‖^{p-2}) ‖y‖², with ‖0‖^0 = 1. Requires p >= 2.
GapBound pth_power_gap_bound(const StateVector& x, const StateVector& y, double p);

/// Pathwise right-hand side minus left-hand side of the p-th power Itô
/// inequality for a stochastic convolution.
struct ResidualSeries {
    std::vector<double> times;
    std::vector<double> lhs;       // ‖X(t)‖^p
    std::vector<double> rhs;
    std::vector<double> residual;  // rhs - lhs
    /// Change of the residual across each grid point's jump (0 where no jump).
    std::vector<double> jump_contribution;
    /// 1 + sup_t ‖X(t)‖^p
    double scale = 1.0;

    double min_residual() const;
    double max_abs_jump_contribution() const;
};

/// Evaluates every term of the inequality on the grid of `path`, which must
/// come from stochastic_convolution with the same forcing. The continuous
/// quadratic-variation term is identically zero for pure-jump forcing.
ResidualSeries ito_pth_residual(const SpectralSemigroup& sg, const PathGrid& path, const Forcing& forcing, double p);

struct BurkholderResult {
    MonteCarloEstimate lhs;  // E sup_t ‖∫_0^t S_{t-s} dM_s‖^p
    MonteCarloEstimate rhs;  // E [M]_T^{p/2}
    double ratio = 0.0;      // lhs.mean / rhs.mean, 0 when both vanish
};

/// M_t = ∫_0^t ∫_E jump_map(s, ξ) Ñ(ds, dξ) convolved with a contraction semigroup.
BurkholderResult burkholder_ratio(const SpectralSemigroup& sg, const IntensityMeasure& nu,
                                  const JumpIntegrand& jump_map, double horizon, double p, std::size_t n_paths,
                                  std::uint64_t seed, std::size_t grid_points = 512);

struct BichtelerJacodResult {
    MonteCarloEstimate lhs;  // E sup_t |∫∫ k dÑ|^p
    double term1 = 0.0;      // (∫_0^T ∫_E |k| dν ds)^p
    double term2 = 0.0;      // ∫_0^T ∫_E |k|^p dν ds
    double implied_constant = 0.0;  // lhs.mean / (term1 + term2)
    double basis_constant = 0.0;    // lhs.mean / term2, the p < 2 form
    double isometry = 0.0;          // ∫_0^T ∫_E |k|² dν ds
    double doob_bound = 0.0;        // 4 * isometry
    MonteCarloEstimate rhs() const;
};

/// For a state-free integrand k(s, ξ). Requires p >= 1.
BichtelerJacodResult bichteler_jacod_check(const JumpIntegrand& k, std::size_t dimension,
                                           const IntensityMeasure& nu, double horizon, double p,
                                           std::size_t n_paths, std::uint64_t seed,
                                           std::size_t grid_points = 512);

}  // namespace levysee
