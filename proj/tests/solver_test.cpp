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

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "levysee/error.hpp"

namespace levysee {
namespace {

SolverSettings grid(std::size_t n) {
    SolverSettings s;
    s.grid_points = n;
    return s;
}

SystemSpec scalar_system(std::shared_ptr<const DriftCoefficient> f, double lambda, double sigma, double gain) {
    const IntensityMeasure nu(2.0, AtomMarks{{{0.25}, {-0.15}}, {0.5, 0.5}});
    auto k = std::make_shared<AffineJump>(StateVector{sigma}, gain, nu, 2.0);
    return SystemSpec{"scalar", SpectralSemigroup({lambda}), std::move(f), std::move(k), nu,
                      InitialLaw{StateVector{1.0}, 0.0}};
}

PathGrid zero_forcing(const TimeGrid& g, std::size_t d) {
    PathGrid v;
    v.grid = g;
    v.values.assign(g.size(), StateVector(d));
    v.left_values = v.values;
    return v;
}

// Random càdlàg forcing: smooth part plus jumps at the path's events.
PathGrid random_forcing(const TimeGrid& g, const JumpPath& path, std::size_t d) {
    PathGrid v = zero_forcing(g, d);
    StateVector level(d);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double t = g.times[i];
        StateVector smooth(d);
        for (std::size_t c = 0; c < d; ++c) smooth[c] = 0.5 * std::sin(3.0 * t + double(c));
        v.left_values[i] = smooth + level;
        if (g.event[i] != kNoEvent) level[i % d] += path.events()[g.event[i]].mark[0];
        v.values[i] = smooth + level;
    }
    return v;
}

TEST(Skeleton, ZeroDriftIsSemigroupPlusForcing) {
    const SystemSpec sys = builtin_system("cubic-dissipative", {{"cubic", "0"}});
    const JumpPath path = monte_carlo_path(sys, 3, 0);
    const TimeGrid g = make_time_grid(1.0, 64, path);
    const PathGrid v = random_forcing(g, path, 8);
    const StateVector x0(8, 1.0);
    const PathGrid x = solve_deterministic_skeleton(sys, v, x0, grid(64));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const StateVector ref = sys.semigroup.apply(g.times[i], x0) + v.values[i];
        EXPECT_LE((x.values[i] - ref).norm(), 1e-14);
    }
}

// f(x) = -x, λ = 0: X(1) = e^{-1}.
TEST(Skeleton, LinearOdeClosedForm) {
    const SystemSpec sys = scalar_system(std::make_shared<LinearDrift>(-1.0), 0.0, 0.0, 0.0);
    const TimeGrid g = make_time_grid(1.0, 4096, std::vector<double>{});
    const PathGrid x = solve_deterministic_skeleton(sys, zero_forcing(g, 1), StateVector{1.0}, grid(4096));
    EXPECT_NEAR(x.values.back()[0], std::exp(-1.0), 1e-8);
}

TEST(Skeleton, ResidualAndAprioriBoundOnBuiltins) {
    for (const auto& name : builtin_system_names()) {
        const SystemSpec sys = builtin_system(name);
        for (std::uint64_t s = 0; s < 5; ++s) {
            const JumpPath path = monte_carlo_path(sys, 100 + s, 0);
            const TimeGrid g = make_time_grid(sys.horizon, 256, path);
            const PathGrid v = random_forcing(g, path, sys.dimension());
            const StateVector x0 = monte_carlo_initial(sys, 100 + s, 0);
            const PathGrid x = solve_deterministic_skeleton(sys, v, x0, grid(256));
            EXPECT_LE(skeleton_residual(sys, v, x0, x), 1e-10) << name;
            const SkeletonBoundCheck b = skeleton_apriori_bound(sys, v, x0, x);
            EXPECT_TRUE(b.holds) << name << " excess " << b.worst_excess;
        }
    }
}

TEST(Skeleton, StiffStepFailsToConverge) {
    const SystemSpec sys = scalar_system(std::make_shared<CubicDrift>(1.0, 10.0), 0.0, 0.0, 0.0);
    const TimeGrid g = make_time_grid(1.0, 2, std::vector<double>{});
    EXPECT_THROW(solve_deterministic_skeleton(sys, zero_forcing(g, 1), StateVector{20.0}, grid(2)), Error);
}

TEST(DirectScheme, NoDriftNoNoiseIsSemigroup) {
    SystemSpec sys = builtin_system("linear-ou-jump", {{"sigma", "0"}, {"gain", "0"}});
    const JumpPath path = monte_carlo_path(sys, 1, 0);
    const TimeGrid g = make_time_grid(1.0, 128, path);
    const PathGrid x = direct_scheme(sys, path, g, StateVector{4.0});
    for (std::size_t i = 0; i < g.size(); ++i)
        EXPECT_NEAR(x.values[i][0], 4.0 * std::exp(-0.5 * g.times[i]), 1e-14);
}

TEST(DirectScheme, JumpsUseLeftLimits) {
    const SystemSpec sys = builtin_system("saturating-drift");
    const JumpPath path = monte_carlo_path(sys, 2, 0);
    ASSERT_GT(path.count(), 0u);
    const TimeGrid g = make_time_grid(1.0, 64, path);
    const PathGrid x = direct_scheme(sys, path, g, monte_carlo_initial(sys, 2, 0));
    for (std::size_t i = 1; i < g.size(); ++i) {
        const StateVector jump = x.values[i] - x.left_values[i];
        if (g.event[i] == kNoEvent) {
            EXPECT_EQ(jump.norm(), 0.0);
        } else {
            const JumpEvent& e = path.events()[g.event[i]];
            EXPECT_LE((jump - sys.jump->eval(e.time, e.mark, x.left_values[i])).norm(), 1e-15);
        }
    }
}

// Stiff cubic drift on a coarse grid: steps are halved instead of failing.
// Halving restores contraction, not accuracy, so the check is coarse.
TEST(DirectScheme, HalvesStiffSteps) {
    const SystemSpec sys = scalar_system(std::make_shared<CubicDrift>(1.0, 10.0), 0.0, 0.0, 0.0);
    const JumpPath path(1.0, {}, 0);
    const TimeGrid g = make_time_grid(1.0, 2, path);
    const PathGrid x = direct_scheme(sys, path, g, StateVector{20.0}, grid(2));
    // dx/dt = -x³: x(1) = 1/sqrt(2 + 1/400)
    EXPECT_NEAR(x.values.back()[0], 1.0 / std::sqrt(2.0 + 1.0 / 400.0), 0.1);
    SolverSettings strict = grid(2);
    strict.max_halvings = 0;
    EXPECT_THROW(direct_scheme(sys, path, g, StateVector{20.0}, strict), Error);
}

TEST(DirectScheme, RejectsGridWithoutJumpTimes) {
    const SystemSpec sys = builtin_system("linear-ou-jump");
    const JumpPath path(1.0, {{0.3, {0.25}}}, 0);
    EXPECT_THROW(direct_scheme(sys, path, make_time_grid(1.0, 4, std::vector<double>{}), StateVector{1.0}), Error);
}

// Linear family: E X_t² against the closed-form second moment.
TEST(DirectScheme, LinearSecondMoment) {
    const SystemSpec sys = builtin_system("linear-ou-jump");
    const std::size_t n = 2000;
    std::vector<double> sq(n);
    parallel_for(n, [&](std::size_t j) {
        const JumpPath path = monte_carlo_path(sys, 5, j);
        const PathGrid x = direct_scheme(sys, path, make_time_grid(1.0, 128, path), monte_carlo_initial(sys, 5, j),
                                         grid(128));
        sq[j] = x.values.back().squared_norm();
    });
    const auto e = canonical_reduce(sq, 5);
    EXPECT_NEAR(e.mean(), sys.second_moment(1.0), 4.0 * e.standard_error() + 2e-3 * sys.second_moment(1.0));
}

TEST(Picard, ConstantsFromDeclaration) {
    DeclaredConstants c;
    c.M = -0.5;
    c.C = 0.2;
    c.F = 0.3;
    const PicardConstants k2 = picard_constants(c, 2.0, 1.0);
    EXPECT_DOUBLE_EQ(k2.beta, -1.0);
    EXPECT_DOUBLE_EQ(k2.gamma_lemma, 0.5);
    EXPECT_DOUBLE_EQ(k2.C1, 0.5 * std::exp(-1.0));
    const PicardConstants k4 = picard_constants(c, 4.0, 2.0);
    EXPECT_NEAR(k4.beta, -2.0 + 3.0 * 0.2, 1e-15);
    EXPECT_NEAR(k4.gamma_lemma, 1.5 * (0.4 + 1.2), 1e-15);
}

// k ≡ 0: V¹ ≡ 0 and X¹ = X², so h[1] = 0.
TEST(Picard, NoiselessFixedPoint) {
    const SystemSpec sys = builtin_system("cubic-dissipative", {{"sigma", "0"}, {"gain", "0"}});
    PicardOptions o;
    o.n_iters = 3;
    o.n_paths = 20;
    o.solver = grid(64);
    const PicardResult r = picard_solve(sys, o);
    ASSERT_EQ(r.trace.h.size(), 4u);
    EXPECT_GT(r.trace.h[0].mean(), 0.0);
    for (std::size_t n = 1; n < 4; ++n) EXPECT_EQ(r.trace.h[n].mean(), 0.0);
}

TEST(Picard, TraceBoundFormula) {
    const SystemSpec sys = builtin_system("linear-ou-jump", {{"T", "1.5"}});
    PicardOptions o;
    o.n_iters = 6;
    o.n_paths = 50;
    o.solver = grid(64);
    const PicardTrace t = picard_solve(sys, o).trace;
    ASSERT_EQ(t.n_iters, 6u);
    double term = t.C0;
    for (std::size_t n = 0; n <= 6; ++n) {
        if (n > 0) term *= t.C1 * 1.5 / double(n);
        EXPECT_NEAR(t.bound[n], term, 1e-12 * term);
        EXPECT_GE(t.h[n].mean(), 0.0);
        EXPECT_LE(t.h[n].mean(), t.bound[n] + 3.0 * t.h[n].standard_error()) << n;
    }
    for (std::size_t n = 1; n <= 6; ++n)
        if (double(n) > t.C1 * 1.5) EXPECT_LT(t.bound[n], t.bound[n - 1]);
}

TEST(Picard, DeterministicTrace) {
    const SystemSpec sys = builtin_system("saturating-drift");
    PicardOptions o;
    o.n_iters = 4;
    o.n_paths = 16;
    o.solver = grid(64);
    const PicardTrace a = picard_solve(sys, o).trace, b = picard_solve(sys, o).trace;
    for (std::size_t n = 0; n < a.h.size(); ++n) EXPECT_EQ(a.h[n].sum(), b.h[n].sum());
}

TEST(Picard, StopsEarly) {
    const SystemSpec sys = builtin_system("linear-ou-jump");
    PicardOptions o;
    o.n_iters = 20;
    o.n_paths = 10;
    o.stop_tolerance = 1e-6;
    o.solver = grid(64);
    const PicardTrace t = picard_solve(sys, o).trace;
    EXPECT_TRUE(t.stopped_early);
    EXPECT_LT(t.n_iters, 20u);
    EXPECT_LE(t.h.back().mean(), 1e-6 * t.h.front().mean());
}

// Large noise gain: h grows for several iterations before the factorial wins.
TEST(Picard, DivergenceIsReported) {
    const SystemSpec sys = builtin_system("linear-ou-jump", {{"gain", "40"}});
    PicardOptions o;
    o.n_iters = 8;
    o.n_paths = 20;
    o.solver = grid(32);
    try {
        picard_solve(sys, o);
        FAIL() << "expected divergence";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Diverged);
    }
}

// The Picard limit coincides with the direct scheme on the same noise.
TEST(Picard, AgreesWithDirectScheme) {
    for (const auto& name : builtin_system_names()) {
        const SystemSpec sys = builtin_system(name);
        PicardOptions o;
        o.n_iters = 12;
        o.n_paths = 10;
        o.solver = grid(128);
        const PicardResult r = picard_solve(sys, o);
        for (std::size_t j = 0; j < o.n_paths; ++j) {
            const PathGrid d = direct_scheme(sys, r.paths[j], r.solutions[j].grid, r.initial[j], o.solver);
            double sup = 0.0;
            for (std::size_t i = 0; i < d.size(); ++i) sup = std::max(sup, (d.values[i] - r.solutions[j].values[i]).norm());
            EXPECT_LE(sup, 1e-9 * (1.0 + d.sup_norm())) << name;
        }
    }
}

// Different starting iterates, same noise: the limits coincide.
TEST(Picard, UniquenessSurrogate) {
    const SystemSpec sys = builtin_system("cubic-dissipative");
    PicardOptions a;
    a.n_iters = 16;
    a.n_paths = 8;
    a.solver = grid(128);
    PicardOptions b = a;
    b.start_seed = 99;
    const PicardResult ra = picard_solve(sys, a), rb = picard_solve(sys, b);
    EXPECT_NE(ra.trace.h[0].mean(), rb.trace.h[0].mean());
    for (std::size_t j = 0; j < a.n_paths; ++j)
        for (std::size_t i = 0; i < ra.solutions[j].size(); ++i)
            EXPECT_LE((ra.solutions[j].values[i] - rb.solutions[j].values[i]).norm(), 10 * 2 * a.solver.tolerance *
                                                                                         (1.0 + ra.solutions[j].sup_norm()));
}

// e^{αt} · solve(rescaled) = solve(original), pathwise.
TEST(Rescaling, Equivariance) {
    const SystemSpec sys = builtin_system("saturating-drift", {{"eigenvalues", "0.5, -1, -2, -3"}});
    ASSERT_DOUBLE_EQ(sys.semigroup.growth_bound(), 0.5);
    const SystemSpec res = rescale_system(sys);
    EXPECT_DOUBLE_EQ(res.semigroup.growth_bound(), 0.0);
    for (std::size_t j = 0; j < 5; ++j) {
        const JumpPath path = monte_carlo_path(sys, 8, j);
        const TimeGrid g = make_time_grid(1.0, 256, path);
        const StateVector x0 = monte_carlo_initial(sys, 8, j);
        const PathGrid a = direct_scheme(sys, path, g, x0);
        const PathGrid b = direct_scheme(res, path, g, x0);
        for (std::size_t i = 0; i < g.size(); ++i)
            EXPECT_LE((a.values[i] - std::exp(0.5 * g.times[i]) * b.values[i]).norm(), 1e-8);
    }
}

TEST(MildDecomposition, RecoversSolverPath) {
    const SystemSpec sys = builtin_system("cubic-dissipative");
    const JumpPath path = monte_carlo_path(sys, 4, 0);
    const TimeGrid g = make_time_grid(1.0, 512, path);
    const StateVector x0 = monte_carlo_initial(sys, 4, 0);
    const PathGrid x = direct_scheme(sys, path, g, x0);
    const PathGrid y = stochastic_convolution(sys.semigroup, x0, mild_decomposition(sys, path, x), g);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_LE((x.values[i] - y.values[i]).norm(), 1e-2);
}

}  // namespace
}  // namespace levysee
