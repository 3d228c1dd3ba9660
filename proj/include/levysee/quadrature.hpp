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

#include <array>
#include <cstddef>
#include <span>

namespace levysee {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};

/// 16-point rule used for every time integral between grid or jump points.
GaussRule gauss16();
/// 64-point rule used for integrals over scalar continuous mark laws.
GaussRule gauss64();

/// ∫_a^b g(s) ds with the given rule; G must return something supporting
/// `+=` and scalar `*` (double or StateVector).
template <typename F>
auto integrate(const GaussRule& rule, double a, double b, F&& g) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    auto acc = g(mid + half * rule.nodes[0]);
    acc *= rule.weights[0] * half;
    for (std::size_t i = 1; i < rule.nodes.size(); ++i) {
        auto v = g(mid + half * rule.nodes[i]);
        v *= rule.weights[i] * half;
        acc += v;
    }
    return acc;
}

}  // namespace levysee
