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

#include <algorithm>
#include <cmath>

#include "levysee/error.hpp"

namespace levysee {

SpectralSemigroup::SpectralSemigroup(std::vector<double> eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
    require(!eigenvalues_.empty(), "SpectralSemigroup: dimension must be positive");
    for (double l : eigenvalues_) require(std::isfinite(l), "SpectralSemigroup: non-finite eigenvalue");
    alpha_ = *std::max_element(eigenvalues_.begin(), eigenvalues_.end());
}

StateVector SpectralSemigroup::apply(double t, const StateVector& x) const {
    StateVector out = x;
    apply_in_place(t, out);
    return out;
}

void SpectralSemigroup::apply_in_place(double t, StateVector& x) const {
    require(t >= 0.0, "semigroup_apply: negative time");
    require(x.size() == eigenvalues_.size(), "semigroup_apply: dimension mismatch");
    if (t == 0.0) return;
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) x[i] *= std::exp(eigenvalues_[i] * t);
}

SpectralSemigroup SpectralSemigroup::shifted(double shift) const {
    std::vector<double> ev = eigenvalues_;
    for (double& l : ev) l -= shift;
    return SpectralSemigroup(std::move(ev));
}

}  // namespace levysee
