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

#include "levysee/quadrature.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "levysee/state_vector.hpp"

namespace levysee {
namespace {

double sum(std::span<const double> w) {
    double s = 0.0;
    for (double x : w) s += x;
    return s;
}

TEST(Gauss, WeightsSumToTwo) {
    EXPECT_EQ(gauss16().nodes.size(), 16u);
    EXPECT_EQ(gauss64().nodes.size(), 64u);
    EXPECT_NEAR(sum(gauss16().weights), 2.0, 1e-14);
    EXPECT_NEAR(sum(gauss64().weights), 2.0, 1e-13);
}

// n-point Gauss-Legendre is exact through degree 2n-1.
TEST(Gauss, ExactForPolynomials) {
    for (int k = 0; k <= 31; ++k) {
        const double got = integrate(gauss16(), 0.0, 2.0, [k](double s) { return std::pow(s, k); });
        const double exact = std::pow(2.0, k + 1) / (k + 1);
        EXPECT_NEAR(got, exact, 1e-13 * exact) << "degree " << k;
    }
}

TEST(Gauss, Exponential) {
    EXPECT_NEAR(integrate(gauss16(), 0.0, 1.0, [](double s) { return std::exp(-s); }), 1.0 - std::exp(-1.0), 1e-15);
}

TEST(Gauss, VectorValued) {
    const StateVector v = integrate(gauss16(), -1.0, 1.0, [](double s) { return StateVector{1.0, s * s}; });
    EXPECT_NEAR(v[0], 2.0, 1e-14);
    EXPECT_NEAR(v[1], 2.0 / 3.0, 1e-14);
}

}  // namespace
}  // namespace levysee
