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

#include <boost/math/quadrature/gauss.hpp>

namespace levysee {

namespace {

// Boost stores the non-negative half of each symmetric rule.
template <unsigned N>
struct FullRule {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    FullRule() {
        using Rule = boost::math::quadrature::gauss<double, N>;
        const auto& x = Rule::abscissa();
        const auto& w = Rule::weights();
        std::size_t k = 0;
        for (std::size_t i = x.size(); i-- > 0;) {
            if (x[i] == 0.0) continue;
            nodes[k] = -x[i];
            weights[k] = w[i];
            ++k;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            nodes[k] = x[i];
            weights[k] = w[i];
            ++k;
        }
    }
};

}  // namespace

GaussRule gauss16() {
    static const FullRule<16> rule;
    return {rule.nodes, rule.weights};
}

GaussRule gauss64() {
    static const FullRule<64> rule;
    return {rule.nodes, rule.weights};
}

}  // namespace levysee
