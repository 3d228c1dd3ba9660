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

#include <gtest/gtest.h>

#include "levysee/error.hpp"

namespace levysee {
namespace {

SolverSettings grid(std::size_t n) {
    SolverSettings s;
    s.grid_points = n;
    return s;
}

TEST(Gamma, Examples) {
    EXPECT_DOUBLE_EQ(gamma_constant(2.0, 0.0, -5.0, 1.0, 1.0), -6.0);
    EXPECT_DOUBLE_EQ(gamma_constant(2.0, 0.0, 0.0, 0.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(gamma_constant(4.0, -1.0, 0.0, 0.0, 0.0), -4.0);
    EXPECT_THROW(gamma_constant(1.9, 0.0, 0.0, 0.0, 0.0), Error);
    EXPECT_THROW(gamma_constant(2.0, 0.0, 0.0, -1.0, 0.0), Error);
}

// Term by term for p = 4: 4α + 4M + 6C + 6(5C + 4F).
TEST(Gamma, FormulaForFourthMoment) {
    const double a = -0.3, M = 0.2, C = 0.7, F = 1.1;
    EXPECT_NEAR(gamma_constant(4.0, a, M, C, F), 4 * a + 4 * M + 6 * C + 6 * (5 * C + 4 * F), 1e-13);
    EXPECT_NEAR(gamma_proof(4.0, M, C, F), 4 * M + 6 * (5 * C + 4 * F), 1e-13);
}

TEST(Gamma, StatedExponentDominatesProofExponentWhenAlphaIsZero) {
    for (double p : {2.0, 3.0, 4.0, 6.0})
        EXPECT_GE(gamma_constant(p, 0.0, -1.0, 0.4, 0.2), gamma_proof(p, -1.0, 0.4, 0.2));
}

TEST(Gamma, CubicDefaultsAreStable) {
    for (const char* p : {"2", "4"}) {
        const HypothesisConstants hc = HypothesisConstants::of(builtin_system("cubic-dissipative", {{"p", p}}));
        EXPECT_LT(hc.gamma(), 0.0) << "p=" << p;
    }
}

TEST(FitLogRate, ExactExponential) {
    std::vector<double> t, y;
    for (int i = 0; i <= 40; ++i) {
        t.push_back(i / 40.0);
        y.push_back(3.0 * std::exp(-1.7 * t.back()));
    }
    const LogLinearFit f = fit_log_rate(t, y, 0.25, 1.0);
    ASSERT_TRUE(f.has_fit);
    EXPECT_NEAR(f.slope, -1.7, 1e-12);
    EXPECT_NEAR(f.slope_stderr, 0.0, 1e-10);
    EXPECT_FALSE(fit_log_rate(t, std::vector<double>(t.size(), 0.0), 0.0, 1.0).has_fit);
}

TEST(CoupledDecay, SameStartGivesZero) {
    const SystemSpec sys = builtin_system("saturating-drift");
    const DecayCurve c = coupled_decay(sys, sys.initial, sys.initial, 20, 1, grid(64));
    for (const auto& m : c.moment) EXPECT_EQ(m.mean(), 0.0);
    EXPECT_FALSE(c.has_fit);
}

// State-independent noise: X_t - Y_t = e^{λt}(X0 - Y0), so the rate is pλ.
TEST(CoupledDecay, LinearStateIndependentRate) {
    for (const char* p : {"2", "4"}) {
        const SystemSpec sys = builtin_system("linear-ou-jump", {{"gain", "0"}, {"p", p}});
        const InitialLaw y{StateVector{1.0}, 0.0};
        const DecayCurve c = coupled_decay(sys, sys.initial, y, 50, 2, grid(128));
        ASSERT_TRUE(c.has_fit);
        EXPECT_NEAR(c.fitted_rate, sys.p * -0.5, 1e-9);
        EXPECT_DOUBLE_EQ(c.moment[0].mean(), std::pow(3.0, sys.p));
        EXPECT_EQ(c.moment[0].standard_error(), 0.0);
    }
}

TEST(CoupledDecay, BoundHoldsOnBuiltins) {
    for (const auto& name : builtin_system_names()) {
        for (const char* p : {"2", "4"}) {
            const SystemSpec sys = builtin_system(name, {{"p", p}});
            const InitialLaw y{StateVector(sys.dimension()), 0.0};
            const DecayCurve c = coupled_decay(sys, sys.initial, y, 100, 3, grid(128));
            const double g = HypothesisConstants::of(sys).gamma();
            const double m0 = c.moment[0].mean();
            for (std::size_t k = 0; k < c.times.size(); ++k)
                EXPECT_LE(c.moment[k].mean(), std::exp(g * c.times[k]) * m0 + 3.0 * c.moment[k].standard_error())
                    << name << " p=" << p << " t=" << c.times[k];
            if (c.has_fit) EXPECT_LE(c.fitted_rate, g + 3.0 * c.fitted_rate_stderr) << name;
        }
    }
}

// Scaling ‖X0 - Y0‖ by s scales the moments by s^p (exactly at t = 0, and for
// the linear family at every t).
TEST(CoupledDecay, ContinuousDependenceScaling) {
    const SystemSpec sys = builtin_system("linear-ou-jump", {{"p", "3"}});
    const InitialLaw x{StateVector{0.0}, 0.0};
    const DecayCurve a = coupled_decay(sys, x, InitialLaw{StateVector{0.5}, 0.0}, 40, 4, grid(64));
    const DecayCurve b = coupled_decay(sys, x, InitialLaw{StateVector{1.0}, 0.0}, 40, 4, grid(64));
    EXPECT_DOUBLE_EQ(b.moment[0].mean(), 8.0 * a.moment[0].mean());
    for (std::size_t k = 0; k < a.times.size(); ++k)
        EXPECT_NEAR(b.moment[k].mean(), 8.0 * a.moment[k].mean(), 1e-9 * b.moment[k].mean() + 1e-300);
}

}  // namespace
}  // namespace levysee
