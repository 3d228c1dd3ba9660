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

#include "levysee/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "levysee/error.hpp"
#include "levysee/rng.hpp"

namespace levysee {

namespace {

struct Implicit {
    StateVector z;
    bool converged;
};

// z = base + half_dt * g(z) by fixed-point iteration. Reports failure when the
// updates stop shrinking or the iteration budget runs out.
template <typename G>
Implicit solve_implicit(const StateVector& base, double half_dt, G&& g, const SolverSettings& s) {
    StateVector z = base;
    z.axpy(half_dt, g(base));
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 0; k < s.max_iter; ++k) {
        StateVector next = base;
        next.axpy(half_dt, g(z));
        const double delta = (next - z).norm();
        z = std::move(next);
        if (!z.is_finite() || !std::isfinite(delta)) return {std::move(z), false};
        if (delta <= s.tolerance * (1.0 + z.norm())) return {std::move(z), true};
        if (k >= 3 && delta > previous) return {std::move(z), false};
        previous = delta;
    }
    return {std::move(z), false};
}

void check_forcing(const SystemSpec& sys, const PathGrid& pg, const char* who) {
    require(pg.values.size() == pg.size() && pg.left_values.size() == pg.size() && pg.size() >= 1,
            std::string(who) + ": path values do not match the grid");
    require(pg.values[0].size() == sys.dimension(), std::string(who) + ": dimension mismatch");
}

PathGrid constant_flow(const SystemSpec& sys, const TimeGrid& grid, const StateVector& x0) {
    PathGrid pg;
    pg.grid = grid;
    for (double t : grid.times) {
        StateVector x = sys.semigroup.apply(t, x0);
        pg.left_values.push_back(x);
        pg.values.push_back(std::move(x));
    }
    return pg;
}

}  // namespace

PathGrid solve_deterministic_skeleton(const SystemSpec& sys, const PathGrid& forcing, const StateVector& x0,
                                      const SolverSettings& settings) {
    check_forcing(sys, forcing, "solve_deterministic_skeleton");
    require(x0.size() == sys.dimension(), "solve_deterministic_skeleton: initial value dimension mismatch");
    const auto& t = forcing.times();
    PathGrid out;
    out.grid = forcing.grid;
    out.values.reserve(t.size());
    out.left_values.reserve(t.size());

    StateVector y = x0;
    out.values.push_back(y + forcing.values[0]);
    out.left_values.push_back(y + forcing.left_values[0]);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double dt = t[i + 1] - t[i];
        StateVector base = y;
        base.axpy(0.5 * dt, sys.drift->eval(t[i], y + forcing.values[i]));
        sys.semigroup.apply_in_place(dt, base);
        const StateVector& v_left = forcing.left_values[i + 1];
        Implicit r = solve_implicit(
            base, 0.5 * dt, [&](const StateVector& z) { return sys.drift->eval(t[i + 1], z + v_left); }, settings);
        if (!r.converged)
            fail(ErrorCode::NotConverged, "solve_deterministic_skeleton: drift correction did not converge at t=" +
                                              std::to_string(t[i + 1]) + " (grid too coarse for this drift)");
        y = std::move(r.z);
        out.left_values.push_back(y + v_left);
        out.values.push_back(y + forcing.values[i + 1]);
    }
    return out;
}

double skeleton_residual(const SystemSpec& sys, const PathGrid& forcing, const StateVector& x0,
                         const PathGrid& solution) {
    check_forcing(sys, forcing, "skeleton_residual");
    require(solution.size() == forcing.size(), "skeleton_residual: grids differ");
    const auto& t = forcing.times();
    double worst = (solution.values[0] - forcing.values[0] - x0).norm();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double dt = t[i + 1] - t[i];
        const StateVector y0 = solution.values[i] - forcing.values[i];
        const StateVector y1 = solution.left_values[i + 1] - forcing.left_values[i + 1];
        StateVector rhs = y0;
        rhs.axpy(0.5 * dt, sys.drift->eval(t[i], solution.values[i]));
        sys.semigroup.apply_in_place(dt, rhs);
        rhs.axpy(0.5 * dt, sys.drift->eval(t[i + 1], solution.left_values[i + 1]));
        worst = std::max(worst, (y1 - rhs).norm() / (1.0 + y1.norm()));
        const StateVector y1r = solution.values[i + 1] - forcing.values[i + 1];
        worst = std::max(worst, (y1r - y1).norm() / (1.0 + y1.norm()));
    }
    return worst;
}

SkeletonBoundCheck skeleton_apriori_bound(const SystemSpec& sys, const PathGrid& forcing, const StateVector& x0,
                                          const PathGrid& solution, double tolerance) {
    check_forcing(sys, forcing, "skeleton_apriori_bound");
    require(solution.size() == forcing.size(), "skeleton_apriori_bound: grids differ");
    const auto& t = forcing.times();
    const double alpha = sys.semigroup.growth_bound();
    const double rate = alpha + sys.drift->semimonotonicity();
    const double nx0 = x0.norm();

    auto g = [&](double s, const StateVector& v) {
        return sys.drift->eval(s, sys.semigroup.apply(s, x0) + v).norm();
    };

    SkeletonBoundCheck out;
    out.norm.resize(t.size());
    out.bound.resize(t.size());
    double integral = 0.0;
    double g_prev = g(t[0], forcing.values[0]);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) {
            const double dt = t[i] - t[i - 1];
            const double w = std::exp(rate * dt);
            integral = w * integral + 0.5 * dt * (w * g_prev + g(t[i], forcing.left_values[i]));
            g_prev = g(t[i], forcing.values[i]);
        }
        const double lead = std::exp(std::max(alpha, 0.0) * t[i]) * nx0;
        // Left limits obey the same bound with V(t-).
        const double b_right = lead + forcing.values[i].norm() + integral;
        const double b_left = lead + forcing.left_values[i].norm() + integral;
        out.norm[i] = solution.values[i].norm();
        out.bound[i] = b_right;
        const double excess = std::max((out.norm[i] - b_right) / (1.0 + b_right),
                                       (solution.left_values[i].norm() - b_left) / (1.0 + b_left));
        out.worst_excess = i == 0 ? excess : std::max(out.worst_excess, excess);
    }
    out.holds = out.worst_excess <= tolerance;
    return out;
}

namespace {

StateVector direct_step(const SystemSpec& sys, const StateVector& xa, double a, double b, const SolverSettings& s,
                        int depth) {
    const double dt = b - a;
    StateVector base = xa;
    base.axpy(0.5 * dt, sys.compensated_drift(a, xa));
    sys.semigroup.apply_in_place(dt, base);
    Implicit r = solve_implicit(
        base, 0.5 * dt, [&](const StateVector& z) { return sys.compensated_drift(b, z); }, s);
    if (r.converged) return std::move(r.z);
    if (depth >= s.max_halvings)
        fail(ErrorCode::NotConverged, "direct_scheme: step rejected after " + std::to_string(depth) +
                                          " halvings at t=" + std::to_string(a));
    const double mid = a + 0.5 * dt;
    const StateVector xm = direct_step(sys, xa, a, mid, s, depth + 1);
    return direct_step(sys, xm, mid, b, s, depth + 1);
}

}  // namespace

PathGrid direct_scheme(const SystemSpec& sys, const JumpPath& path, const TimeGrid& grid, const StateVector& x0,
                       const SolverSettings& settings) {
    require(x0.size() == sys.dimension(), "direct_scheme: initial value dimension mismatch");
    require(grid.size() >= 1 && grid.times.front() == 0.0, "direct_scheme: grid must start at 0");
    for (const auto& e : path.events()) {
        auto it = std::lower_bound(grid.times.begin(), grid.times.end(), e.time);
        if (it == grid.times.end() || *it != e.time)
            fail(ErrorCode::InvalidArgument, "direct_scheme: grid is missing jump time " + std::to_string(e.time));
    }
    PathGrid out;
    out.grid = grid;
    out.values.reserve(grid.size());
    out.left_values.reserve(grid.size());
    out.values.push_back(x0);
    out.left_values.push_back(x0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        StateVector x = direct_step(sys, out.values[i], grid.times[i], grid.times[i + 1], settings, 0);
        out.left_values.push_back(x);
        if (grid.event[i + 1] != kNoEvent) {
            const JumpEvent& e = path.events()[grid.event[i + 1]];
            x += sys.jump->eval(e.time, e.mark, out.left_values.back());
        }
        if (!x.is_finite()) fail(ErrorCode::NotConverged, "direct_scheme: non-finite state");
        out.values.push_back(std::move(x));
    }
    return out;
}

PathGrid jump_forcing_path(const SystemSpec& sys, const JumpPath& path, const PathGrid& state) {
    check_forcing(sys, state, "jump_forcing_path");
    const TimeGrid& grid = state.grid;
    const auto& t = grid.times;
    PathGrid v;
    v.grid = grid;
    v.values.reserve(t.size());
    v.left_values.reserve(t.size());
    StateVector cur(sys.dimension());
    v.values.push_back(cur);
    v.left_values.push_back(cur);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double dt = t[i + 1] - t[i];
        cur.axpy(-0.5 * dt, sys.jump->compensator(t[i], state.values[i], sys.nu));
        sys.semigroup.apply_in_place(dt, cur);
        cur.axpy(-0.5 * dt, sys.jump->compensator(t[i + 1], state.left_values[i + 1], sys.nu));
        v.left_values.push_back(cur);
        if (grid.event[i + 1] != kNoEvent) {
            const JumpEvent& e = path.events().at(grid.event[i + 1]);
            cur += sys.jump->eval(e.time, e.mark, state.left_values[i + 1]);
        }
        v.values.push_back(cur);
    }
    return v;
}

Forcing mild_decomposition(const SystemSpec& sys, const JumpPath& path, const PathGrid& solution) {
    check_forcing(sys, solution, "mild_decomposition");
    const auto& t = solution.times();
    auto densities = std::make_shared<std::vector<StateVector>>();
    densities->reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) densities->push_back(sys.compensated_drift(t[i], solution.values[i]));
    auto times = std::make_shared<std::vector<double>>(t);

    Forcing f;
    f.dimension = sys.dimension();
    f.drift_density = [densities, times](double s) {
        auto it = std::upper_bound(times->begin(), times->end(), s);
        const std::size_t i = it == times->begin() ? 0 : std::size_t(it - times->begin()) - 1;
        return (*densities)[std::min(i, densities->size() - 1)];
    };
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (solution.grid.event[i] == kNoEvent) continue;
        const JumpEvent& e = path.events().at(solution.grid.event[i]);
        f.jumps.push_back({e.time, sys.jump->eval(e.time, e.mark, solution.left_values[i])});
    }
    return f;
}

PicardConstants picard_constants(const DeclaredConstants& c, double p, double horizon) {
    PicardConstants k;
    k.beta = p * c.M + 0.5 * (p - 1.0) * (p - 2.0) * c.C;
    k.gamma_lemma = 0.5 * (p - 1.0) * (2.0 * c.C + p * c.F);
    k.C1 = k.gamma_lemma * std::exp(k.beta * horizon);
    return k;
}

JumpPath monte_carlo_path(const SystemSpec& sys, std::uint64_t seed, std::size_t index) {
    return sample_jump_path(sys.nu, sys.horizon, derive_seed(seed, index));
}

StateVector monte_carlo_initial(const SystemSpec& sys, std::uint64_t seed, std::size_t index) {
    CounterRng rng(derive_seed(seed, index), static_cast<std::uint64_t>(Stream::Initial));
    return sys.initial.sample(rng);
}

PicardResult picard_solve(const SystemSpec& sys, const PicardOptions& opt) {
    require(opt.n_paths >= 1, "picard_solve: n_paths must be >= 1");
    require(sys.p >= 2.0, "picard_solve: p must be >= 2");
    const std::size_t n_paths = opt.n_paths;
    const double p = sys.p;

    PicardResult res;
    res.paths.reserve(n_paths);
    res.initial.reserve(n_paths);
    std::vector<PathGrid> current(n_paths);
    for (std::size_t j = 0; j < n_paths; ++j) {
        res.paths.push_back(monte_carlo_path(sys, opt.seed, j));
        res.initial.push_back(monte_carlo_initial(sys, opt.seed, j));
    }
    parallel_for(n_paths, [&](std::size_t j) {
        const TimeGrid grid = make_time_grid(sys.horizon, opt.solver.grid_points, res.paths[j]);
        StateVector start = res.initial[j];
        if (opt.start_seed != 0) {
            CounterRng rng(derive_seed(opt.start_seed, j), static_cast<std::uint64_t>(Stream::PicardStart));
            for (std::size_t i = 0; i < start.size(); ++i) start[i] += 2.0 * rng.uniform() - 1.0;
        }
        current[j] = constant_flow(sys, grid, start);
    });

    PicardTrace& tr = res.trace;
    const auto k = picard_constants(sys.constants(), p, sys.horizon);
    tr.beta = k.beta;
    tr.gamma_lemma = k.gamma_lemma;
    tr.C1 = k.C1;

    std::vector<double> diff(n_paths), diff_sup(n_paths), c0(n_paths);
    int growth_streak = 0;
    for (std::size_t n = 0; n <= opt.n_iters; ++n) {
        parallel_for(n_paths, [&](std::size_t j) {
            const PathGrid v = jump_forcing_path(sys, res.paths[j], current[j]);
            PathGrid next = solve_deterministic_skeleton(sys, v, res.initial[j], opt.solver);
            const PathGrid& prev = current[j];
            diff[j] = norm_pow((next.values.back() - prev.values.back()).norm(), p);
            double s = 0.0;
            for (std::size_t i = 0; i < next.size(); ++i)
                s = std::max({s, norm_pow((next.values[i] - prev.values[i]).norm(), p),
                              norm_pow((next.left_values[i] - prev.left_values[i]).norm(), p)});
            diff_sup[j] = s;
            if (n == 0) {
                double c = 0.0;
                for (std::size_t i = 0; i < next.size(); ++i)
                    c = std::max({c, norm_pow(next.values[i].norm(), p) + norm_pow(prev.values[i].norm(), p),
                                  norm_pow(next.left_values[i].norm(), p) + norm_pow(prev.left_values[i].norm(), p)});
                c0[j] = c;
            }
            current[j] = std::move(next);
        });
        tr.h.push_back(canonical_reduce(diff, opt.seed));
        tr.h_sup.push_back(canonical_reduce(diff_sup, opt.seed));
        if (n == 0) tr.C0 = std::pow(2.0, p) * canonical_reduce(c0, opt.seed).mean();

        const double h0 = tr.h.front().mean();
        const double hn = tr.h.back().mean();
        if (n > 0) {
            growth_streak = (hn > tr.h[n - 1].mean() && hn > 1e-20 * std::max(1.0, h0)) ? growth_streak + 1 : 0;
            if (growth_streak >= 3)
                fail(ErrorCode::Diverged, "picard_solve: h[n] grew for 3 consecutive iterations (n=" +
                                              std::to_string(n) + "); check the declared constants");
        }
        if (opt.stop_tolerance > 0.0 && n > 0 && hn <= opt.stop_tolerance * h0 && n < opt.n_iters) {
            tr.stopped_early = true;
            break;
        }
    }

    tr.n_iters = tr.h.size() - 1;
    tr.bound.resize(tr.h.size());
    for (std::size_t n = 0; n < tr.h.size(); ++n) {
        if (n == 0) {
            tr.bound[n] = tr.C0;
        } else if (tr.C1 == 0.0 || tr.C0 == 0.0) {
            tr.bound[n] = 0.0;
        } else {
            tr.bound[n] = std::exp(std::log(tr.C0) + double(n) * std::log(tr.C1 * sys.horizon) -
                                   std::lgamma(double(n) + 1.0));
        }
    }
    if (opt.keep_solutions) res.solutions = std::move(current);
    return res;
}

}  // namespace levysee
