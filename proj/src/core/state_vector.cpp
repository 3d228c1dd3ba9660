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

#include "levysee/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "levysee/error.hpp"

namespace levysee {

double StateVector::squared_norm() const noexcept {
    double s = 0.0;
    for (double c : coords_) s += c * c;
    return s;
}

double StateVector::norm() const noexcept {
    const double s = squared_norm();
    if (std::isfinite(s) && s > 1e-280) return std::sqrt(s);
    // Rescale so that huge or tiny coordinates neither overflow nor underflow.
    double scale = 0.0;
    for (double c : coords_) scale = std::max(scale, std::abs(c));
    if (scale == 0.0 || !std::isfinite(scale)) return scale;
    double acc = 0.0;
    for (double c : coords_) acc += (c / scale) * (c / scale);
    return scale * std::sqrt(acc);
}

double StateVector::dot(const StateVector& other) const {
    require(other.size() == size(), "StateVector::dot: dimension mismatch");
    return std::inner_product(coords_.begin(), coords_.end(), other.coords_.begin(), 0.0);
}

bool StateVector::is_finite() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return std::isfinite(c); });
}

bool StateVector::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

StateVector& StateVector::operator+=(const StateVector& other) {
    require(other.size() == size(), "StateVector: dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
    require(other.size() == size(), "StateVector: dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

StateVector& StateVector::operator*=(double s) noexcept {
    for (double& c : coords_) c *= s;
    return *this;
}

StateVector& StateVector::axpy(double s, const StateVector& other) {
    require(other.size() == size(), "StateVector: dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += s * other.coords_[i];
    return *this;
}

double norm_pow(double norm, double q) noexcept {
    if (q == 0.0) return 1.0;
    if (q == 2.0) return norm * norm;
    return std::pow(norm, q);
}

}  // namespace levysee
