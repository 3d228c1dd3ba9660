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

#include "levysee/convolution.hpp"

#include <algorithm>
#include <cmath>

#include "levysee/error.hpp"
#include "levysee/quadrature.hpp"

namespace levysee {

TimeGrid make_time_grid(double horizon, std::size_t n_uniform, const std::vector<double>& jump_times) {
    require(horizon > 0.0, "make_time_grid: horizon must be positive");
    require(n_uniform >= 1, "make_time_grid: need at least one uniform interval");
    TimeGrid g;
    g.times.reserve(n_uniform + 1 + jump_times.size());
    std::size_t k = 0;
    for (std::size_t j = 0; j <= n_uniform; ++j) {
        const double u = j == n_uniform ? horizon : horizon * double(j) / double(n_uniform);
        while (k < jump_times.size() && jump_times[k] < u) {
            require(jump_times[k] > 0.0, "make_time_grid: jump time must be positive");
            g.times.push_back(jump_times[k]);
            g.event.push_back(k);
            ++k;
        }
        g.uniform.push_back(g.times.size());
        g.times.push_back(u);
        if (k < jump_times.size() && jump_times[k] == u) {
            g.event.push_back(k);
            ++k;
        } else {
            g.event.push_back(kNoEvent);
        }
    }
    require(k == jump_times.size(), "make_time_grid: jump time beyond the horizon");
    return g;
}

TimeGrid make_time_grid(double horizon, std::size_t n_uniform, const JumpPath& path) {
    require(path.horizon() == horizon, "make_time_grid: path horizon differs");
    std::vector<double> times;
    times.reserve(path.count());
    for (const auto& e : path.events()) times.push_back(e.time);
    return make_time_grid(horizon, n_uniform, times);
}

double PathGrid::sup_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) s = std::max({s, values[i].norm(), left_values[i].norm()});
    return s;
}

Forcing make_jump_forcing(std::size_t dimension, const JumpPath& path, const IntensityMeasure& nu,
                          const JumpIntegrand& jump_map, std::function<StateVector(double)> drift_path) {
    Forcing f;
    f.dimension = dimension;
    f.drift_density = [dimension, nu, jump_map, drift = std::move(drift_path)](double s) {
        StateVector v = drift ? drift(s) : StateVector(dimension);
        v -= nu.integrate([&](std::span<const double> mark) { return jump_map(s, mark); });
        return v;
    };
    for (const auto& e : path.events()) f.jumps.push_back({e.time, jump_map(e.time, e.mark)});
    return f;
}

StateVector flow(const SpectralSemigroup& sg, const StateVector& x, double a, double b,
                 const std::function<StateVector(double)>& density) {
    StateVector out = sg.apply(b - a, x);
    if (!density || b == a) return out;
    out += integrate(gauss16(), a, b, [&](double s) { return sg.apply(b - s, density(s)); });
    return out;
}

std::vector<std::size_t> locate_jumps(const Forcing& forcing, const TimeGrid& grid) {
    std::vector<std::size_t> idx;
    idx.reserve(forcing.jumps.size());
    for (const auto& j : forcing.jumps) {
        auto it = std::lower_bound(grid.times.begin(), grid.times.end(), j.time);
        if (it == grid.times.end() || *it != j.time || it == grid.times.begin())
            fail(ErrorCode::InvalidArgument, "grid is missing jump time " + std::to_string(j.time));
        require(j.increment.size() == forcing.dimension, "jump increment dimension mismatch");
        idx.push_back(static_cast<std::size_t>(it - grid.times.begin()));
    }
    return idx;
}

PathGrid stochastic_convolution(const SpectralSemigroup& sg, const StateVector& x0, const Forcing& forcing,
                                const TimeGrid& grid) {
    require(x0.size() == sg.dimension() && forcing.dimension == sg.dimension(),
            "stochastic_convolution: dimension mismatch");
    require(grid.size() >= 1 && grid.times.front() == 0.0, "stochastic_convolution: grid must start at 0");
    const auto jump_idx = locate_jumps(forcing, grid);
    std::vector<const StateVector*> jump_at(grid.size(), nullptr);
    for (std::size_t k = 0; k < jump_idx.size(); ++k) jump_at[jump_idx[k]] = &forcing.jumps[k].increment;

    PathGrid pg;
    pg.grid = grid;
    pg.values.reserve(grid.size());
    pg.left_values.reserve(grid.size());
    pg.values.push_back(x0);
    pg.left_values.push_back(x0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        StateVector x = flow(sg, pg.values[i], grid.times[i], grid.times[i + 1], forcing.drift_density);
        pg.left_values.push_back(x);
        if (jump_at[i + 1]) x += *jump_at[i + 1];
        pg.values.push_back(std::move(x));
    }
    return pg;
}

PathGrid stochastic_convolution(const SpectralSemigroup& sg, const StateVector& x0,
                                const std::function<StateVector(double)>& drift_path, const JumpPath& path,
                                const IntensityMeasure& nu, const JumpIntegrand& jump_map, const TimeGrid& grid) {
    const Forcing f = make_jump_forcing(sg.dimension(), path, nu, jump_map, drift_path);
    return stochastic_convolution(sg, x0, f, grid);
}

}  // namespace levysee
