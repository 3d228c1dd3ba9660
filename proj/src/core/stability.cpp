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

#include "levysee/stability.hpp"

#include <cmath>

#include "levysee/error.hpp"
#include "levysee/rng.hpp"

namespace levysee {

double gamma_constant(double p, double alpha, double M, double C, double F) {
    require(p >= 2.0, "gamma_constant: p must be >= 2");
    require(C >= 0.0 && F >= 0.0, "gamma_constant: C and F must be nonnegative");
    const double q = std::pow(2.0, p - 2.0);
    const double h = 0.5 * p * (p - 1.0);
    return p * alpha + p * M + h * C + h * ((q + 1.0) * C + q * F);
}

double gamma_proof(double p, double M, double C, double F) {
    require(p >= 2.0, "gamma_proof: p must be >= 2");
    require(C >= 0.0 && F >= 0.0, "gamma_proof: C and F must be nonnegative");
    const double q = std::pow(2.0, p - 2.0);
    return p * M + 0.5 * p * (p - 1.0) * ((q + 1.0) * C + q * F);
}

HypothesisConstants HypothesisConstants::of(const SystemSpec& sys) {
    const DeclaredConstants c = sys.constants();
    return {sys.p, c.alpha, c.M, c.C, c.F};
}

LogLinearFit fit_log_rate(const std::vector<double>& t, const std::vector<double>& y, double lo, double hi) {
    require(t.size() == y.size(), "fit_log_rate: size mismatch");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < lo || t[i] > hi || !(y[i] > 0.0) || !std::isfinite(y[i])) continue;
        xs.push_back(t[i]);
        ys.push_back(std::log(y[i]));
    }
    LogLinearFit fit;
    const std::size_t n = xs.size();
    if (n < 2) return fit;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) return fit;
    fit.slope = sxy / sxx;
    fit.has_fit = true;
    if (n > 2) {
        double ssr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = ys[i] - my - fit.slope * (xs[i] - mx);
            ssr += r * r;
        }
        fit.slope_stderr = std::sqrt(ssr / double(n - 2) / sxx);
    }
    return fit;
}

DecayCurve coupled_decay(const SystemSpec& sys, const InitialLaw& x_law, const InitialLaw& y_law,
                         std::size_t n_paths, std::uint64_t seed, const SolverSettings& settings) {
    require(n_paths >= 1, "coupled_decay: n_paths must be >= 1");
    require(x_law.center.size() == sys.dimension() && y_law.center.size() == sys.dimension(),
            "coupled_decay: initial law dimension mismatch");
    const double p = sys.p;
    const std::size_t n_times = settings.grid_points + 1;
    // samples[k * n_paths + j]: time k, path j
    std::vector<double> samples(n_times * n_paths);
    std::vector<double> times;

    parallel_for(n_paths, [&](std::size_t j) {
        const JumpPath path = monte_carlo_path(sys, seed, j);
        const TimeGrid grid = make_time_grid(sys.horizon, settings.grid_points, path);
        CounterRng rx(derive_seed(seed, j), static_cast<std::uint64_t>(Stream::Initial));
        CounterRng ry(derive_seed(seed, j), static_cast<std::uint64_t>(Stream::Initial) + 0x10);
        const StateVector x0 = x_law.sample(rx);
        const StateVector y0 = y_law.sample(ry);
        const PathGrid xs = direct_scheme(sys, path, grid, x0, settings);
        const PathGrid ys = direct_scheme(sys, path, grid, y0, settings);
        for (std::size_t k = 0; k < n_times; ++k) {
            const std::size_t i = grid.uniform[k];
            samples[k * n_paths + j] = norm_pow((xs.values[i] - ys.values[i]).norm(), p);
        }
    });

    DecayCurve out;
    out.times.resize(n_times);
    out.moment.reserve(n_times);
    for (std::size_t k = 0; k < n_times; ++k) {
        out.times[k] = sys.horizon * double(k) / double(settings.grid_points);
        std::span<const double> s(samples.data() + k * n_paths, n_paths);
        if (k == 0 && x_law.is_point_mass() && y_law.is_point_mass())
            out.moment.push_back(MonteCarloEstimate::exact(s[0], seed));
        else
            out.moment.push_back(canonical_reduce(s, seed));
    }
    std::vector<double> means(n_times);
    for (std::size_t k = 0; k < n_times; ++k) means[k] = out.moment[k].mean();
    const LogLinearFit fit = fit_log_rate(out.times, means, 0.25 * sys.horizon, sys.horizon);
    out.fitted_rate = fit.slope;
    out.fitted_rate_stderr = fit.slope_stderr;
    out.has_fit = fit.has_fit;
    return out;
}

}  // namespace levysee
