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

#include "levysee/semigroup.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "levysee/error.hpp"
#include "levysee/rng.hpp"

namespace levysee {
namespace {

TEST(SpectralSemigroup, DiagonalExponential) {
    const SpectralSemigroup sg({-1.0, 0.0, 0.5});
    const StateVector y = sg.apply(2.0, StateVector{1.0, 2.0, 3.0});
    EXPECT_DOUBLE_EQ(y[0], std::exp(-2.0));
    EXPECT_DOUBLE_EQ(y[1], 2.0);
    EXPECT_DOUBLE_EQ(y[2], 3.0 * std::exp(1.0));
    EXPECT_DOUBLE_EQ(sg.growth_bound(), 0.5);
    EXPECT_FALSE(sg.is_contraction());
}

TEST(SpectralSemigroup, IdentityAtZero) {
    const SpectralSemigroup sg({-3.0, -7.0});
    const StateVector x{0.3, -0.2};
    EXPECT_EQ(sg.apply(0.0, x), x);
}

// ‖S_t x‖ <= e^{αt}‖x‖ and S_{t+s} = S_t S_s on random inputs.
TEST(SpectralSemigroup, GrowthBoundAndSemigroupLaw) {
    const SpectralSemigroup sg({-4.0, -1.0, -0.25, 0.3});
    CounterRng rng(11);
    for (int k = 0; k < 1000; ++k) {
        StateVector x(4);
        for (std::size_t i = 0; i < 4; ++i) x[i] = rng.normal();
        const double t = 3.0 * rng.uniform(), s = 3.0 * rng.uniform();
        EXPECT_LE(sg.apply(t, x).norm(), std::exp(0.3 * t) * x.norm() * (1.0 + 1e-15));
        const StateVector a = sg.apply(t + s, x);
        const StateVector b = sg.apply(t, sg.apply(s, x));
        EXPECT_LE((a - b).norm(), 1e-13 * (1.0 + a.norm()));
    }
}

TEST(SpectralSemigroup, Shifted) {
    const SpectralSemigroup sg({-1.0, 0.5});
    const SpectralSemigroup sh = sg.shifted(0.5);
    EXPECT_DOUBLE_EQ(sh.growth_bound(), 0.0);
    EXPECT_TRUE(sh.is_contraction());
    EXPECT_DOUBLE_EQ(sh.eigenvalues()[0], -1.5);
}

TEST(SpectralSemigroup, Rejects) {
    EXPECT_THROW(SpectralSemigroup({}), Error);
    EXPECT_THROW(SpectralSemigroup({std::nan("")}), Error);
    const SpectralSemigroup sg({-1.0});
    EXPECT_THROW(sg.apply(-0.1, StateVector{1.0}), Error);
    EXPECT_THROW(sg.apply(1.0, StateVector{1.0, 2.0}), Error);
}

}  // namespace
}  // namespace levysee
