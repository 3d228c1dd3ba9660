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

#include "levysee/inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "levysee/error.hpp"
#include "levysee/quadrature.hpp"
#include "levysee/rng.hpp"

namespace levysee {

namespace {

// (1 + u)^q - 1 - q u without cancellation for small |u|.
double binomial_remainder(double u, double q) {
    if (std::abs(u) >= 0.1) return std::pow(1.0 + u, q) - 1.0 - q * u;
    double term = q * u, sum = 0.0;
    for (int k = 2; k < 200; ++k) {
        term *= (q - (k - 1)) * u / k;
        sum += term;
        if (term == 0.0 || std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

GapBound pth_power_gap_bound(const StateVector& x, const StateVector& y, double p) {
    require(p >= 2.0, "pth_power_gap_bound: p must be >= 2");
    require(x.size() == y.size(), "pth_power_gap_bound: dimension mismatch");
    const double nx = x.norm();
    const double nxy = (x + y).norm();
    const double ny2 = y.squared_norm();
    const double nx_pm2 = norm_pow(nx, p - 2.0);
    GapBound g;
    // ‖x+y‖^p - ‖x‖^p - p‖x‖^{p-2}<x,y> = ‖x‖^p R(u) + (p/2)‖x‖^{p-2}‖y‖²,
    // u = (2<x,y> + ‖y‖²)/‖x‖², which keeps the small-y regime exact.
    if (nx == 0.0) {
        g.lhs = norm_pow(std::sqrt(ny2), p);
    } else {
        const double b = nx * nx;
        const double q = 0.5 * p;
        const double u = (2.0 * x.dot(y) + ny2) / b;
        const double r = q == 1.0 ? 0.0 : binomial_remainder(u, q);
        g.lhs = norm_pow(nx, p) * r + q * nx_pm2 * ny2;
    }
    g.rhs = 0.5 * p * (p - 1.0) * (nx_pm2 + norm_pow(nxy, p - 2.0)) * ny2;
    return g;
}

double ResidualSeries::min_residual() const {
    return residual.empty() ? 0.0 : *std::min_element(residual.begin(), residual.end());
}

double ResidualSeries::max_abs_jump_contribution() const {
    double m = 0.0;
    for (double c : jump_contribution) m = std::max(m, std::abs(c));
    return m;
}

ResidualSeries ito_pth_residual(const SpectralSemigroup& sg, const PathGrid& path, const Forcing& forcing, double p) {
    require(p >= 2.0, "ito_pth_residual: p must be >= 2");
    const TimeGrid& grid = path.grid;
    if (path.values.size() != grid.size() || path.left_values.size() != grid.size() || grid.size() == 0)
        fail(ErrorCode::InvalidArgument, "ito_pth_residual: path values do not match its grid");
    require(forcing.dimension == sg.dimension(), "ito_pth_residual: dimension mismatch");
    const auto jump_idx = locate_jumps(forcing, grid);
    std::vector<const StateVector*> jump_at(grid.size(), nullptr);
    for (std::size_t k = 0; k < jump_idx.size(); ++k) jump_at[jump_idx[k]] = &forcing.jumps[k].increment;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (!jump_at[i] && path.values[i] != path.left_values[i])
            fail(ErrorCode::InvalidArgument, "ito_pth_residual: path jumps where the forcing does not (mismatched grids)");

    const double alpha = sg.growth_bound();
    const double x0p = norm_pow(path.values[0].norm(), p);
    const GaussRule rule = gauss16();

    ResidualSeries rs;
    const std::size_t n = grid.size();
    rs.times = grid.times;
    rs.lhs.resize(n);
    rs.rhs.resize(n);
    rs.residual.resize(n);
    rs.jump_contribution.assign(n, 0.0);

    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        rs.lhs[i] = norm_pow(path.values[i].norm(), p);
        sup = std::max({sup, rs.lhs[i], norm_pow(path.left_values[i].norm(), p)});
    }
    rs.scale = 1.0 + sup;

    double drift_part = 0.0;  // p ∫ e^{pα(t-s)} ‖X‖^{p-2} <X, dV>
    double jump_part = 0.0;   // jump share of the stochastic integral plus the jump corrections
    rs.rhs[0] = x0p;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = grid.times[i];
        const double b = grid.times[i + 1];
        const double w = std::exp(p * alpha * (b - a));
        double local = 0.0;
        if (forcing.drift_density) {
            local = integrate(rule, a, b, [&](double s) {
                const StateVector xs = flow(sg, path.values[i], a, s, forcing.drift_density);
                const StateVector vs = forcing.drift_density(s);
                return std::exp(p * alpha * (b - s)) * norm_pow(xs.norm(), p - 2.0) * xs.dot(vs);
            });
            local *= p;
        }
        drift_part = w * drift_part + local;

        double jump_local = 0.0;
        if (jump_at[i + 1]) {
            const StateVector& xm = path.left_values[i + 1];
            const StateVector& dz = *jump_at[i + 1];
            const double nxm = xm.norm();
            const double after = norm_pow(path.values[i + 1].norm(), p);
            const double before = norm_pow(nxm, p);
            const double martingale = p * norm_pow(nxm, p - 2.0) * xm.dot(dz);
            const double correction = after - before - martingale;
            jump_local = martingale + correction;
            rs.jump_contribution[i + 1] = jump_local - (after - before);
        }
        jump_part = w * jump_part + jump_local;
        rs.rhs[i + 1] = std::exp(p * alpha * b) * x0p + drift_part + jump_part;
    }
    for (std::size_t i = 0; i < n; ++i) rs.residual[i] = rs.rhs[i] - rs.lhs[i];
    return rs;
}

namespace {

double sup_pow(const PathGrid& pg, double p) {
    double s = 0.0;
    for (std::size_t i = 0; i < pg.size(); ++i)
        s = std::max({s, norm_pow(pg.values[i].norm(), p), norm_pow(pg.left_values[i].norm(), p)});
    return s;
}

}  // namespace

BurkholderResult burkholder_ratio(const SpectralSemigroup& sg, const IntensityMeasure& nu,
                                  const JumpIntegrand& jump_map, double horizon, double p, std::size_t n_paths,
                                  std::uint64_t seed, std::size_t grid_points) {
    require(sg.is_contraction(), "burkholder_ratio: semigroup must be a contraction (alpha <= 0)");
    require(p >= 2.0, "burkholder_ratio: p must be >= 2");
    require(n_paths >= 1, "burkholder_ratio: n_paths must be >= 1");
    std::vector<double> lhs(n_paths), rhs(n_paths);
    const StateVector zero(sg.dimension());
    parallel_for(n_paths, [&](std::size_t j) {
        const JumpPath path = sample_jump_path(nu, horizon, derive_seed(seed, j));
        const Forcing f = make_jump_forcing(sg.dimension(), path, nu, jump_map);
        const PathGrid pg = stochastic_convolution(sg, zero, f, make_time_grid(horizon, grid_points, path));
        lhs[j] = sup_pow(pg, p);
        double qv = 0.0;
        for (const auto& inc : f.jumps) qv += inc.increment.squared_norm();
        rhs[j] = std::pow(qv, 0.5 * p);
    });
    BurkholderResult r;
    r.lhs = canonical_reduce(lhs, seed);
    r.rhs = canonical_reduce(rhs, seed);
    r.ratio = r.rhs.mean() == 0.0 ? 0.0 : r.lhs.mean() / r.rhs.mean();
    return r;
}

MonteCarloEstimate BichtelerJacodResult::rhs() const { return MonteCarloEstimate::exact(term1 + term2, lhs.seed()); }

BichtelerJacodResult bichteler_jacod_check(const JumpIntegrand& k, std::size_t dimension, const IntensityMeasure& nu,
                                           double horizon, double p, std::size_t n_paths, std::uint64_t seed,
                                           std::size_t grid_points) {
    require(p >= 1.0, "bichteler_jacod_check: p must be >= 1");
    require(n_paths >= 1, "bichteler_jacod_check: n_paths must be >= 1");
    const SpectralSemigroup identity(std::vector<double>(dimension, 0.0));
    const StateVector zero(dimension);

    std::vector<double> lhs(n_paths);
    parallel_for(n_paths, [&](std::size_t j) {
        const JumpPath path = sample_jump_path(nu, horizon, derive_seed(seed, j));
        const Forcing f = make_jump_forcing(dimension, path, nu, k);
        const PathGrid pg = stochastic_convolution(identity, zero, f, make_time_grid(horizon, grid_points, path));
        lhs[j] = sup_pow(pg, p);
    });

    auto mark_integral = [&](double s, double q) {
        return nu.integrate_scalar([&](std::span<const double> mark) { return norm_pow(k(s, mark).norm(), q); });
    };
    const GaussRule rule = gauss16();
    double abs1 = 0.0, absp = 0.0, abs2 = 0.0;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double a = horizon * double(i) / double(grid_points);
        const double b = horizon * double(i + 1) / double(grid_points);
        abs1 += integrate(rule, a, b, [&](double s) { return mark_integral(s, 1.0); });
        absp += integrate(rule, a, b, [&](double s) { return mark_integral(s, p); });
        abs2 += integrate(rule, a, b, [&](double s) { return mark_integral(s, 2.0); });
    }

    BichtelerJacodResult r;
    r.lhs = canonical_reduce(lhs, seed);
    r.term1 = std::pow(abs1, p);
    r.term2 = absp;
    r.isometry = abs2;
    r.doob_bound = 4.0 * abs2;
    const double denom = r.term1 + r.term2;
    r.implied_constant = denom == 0.0 ? 0.0 : r.lhs.mean() / denom;
    r.basis_constant = r.term2 == 0.0 ? 0.0 : r.lhs.mean() / r.term2;
    return r;
}

}  // namespace levysee
