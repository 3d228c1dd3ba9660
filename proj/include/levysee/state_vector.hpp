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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace levysee {

/// Element of the d-dimensional Galerkin space: coordinates in the
/// eigenbasis of the generator.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim, double value = 0.0) : coords_(dim, value) {}
    explicit StateVector(std::vector<double> coords) : coords_(std::move(coords)) {}
    StateVector(std::initializer_list<double> coords) : coords_(coords) {}

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }

    double& operator[](std::size_t i) { return coords_[i]; }
    double operator[](std::size_t i) const { return coords_[i]; }

    std::span<const double> coords() const noexcept { return coords_; }
    std::span<double> coords() noexcept { return coords_; }
    const std::vector<double>& vector() const noexcept { return coords_; }

    double squared_norm() const noexcept;
    double norm() const noexcept;
    double dot(const StateVector& other) const;
    bool is_finite() const noexcept;
    bool is_zero() const noexcept;

    StateVector& operator+=(const StateVector& other);
    StateVector& operator-=(const StateVector& other);
    StateVector& operator*=(double s) noexcept;
    /// this += s * other
    StateVector& axpy(double s, const StateVector& other);

    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(double s, StateVector a) { return a *= s; }
    friend StateVector operator*(StateVector a, double s) { return a *= s; }
    friend StateVector operator-(StateVector a) { return a *= -1.0; }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::vector<double> coords_;
};

inline double dot(const StateVector& a, const StateVector& b) { return a.dot(b); }

/// ‖x‖^q with the convention ‖0‖^0 = 1.
double norm_pow(double norm, double q) noexcept;

}  // namespace levysee
