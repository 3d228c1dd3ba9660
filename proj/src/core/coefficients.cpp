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

#include "levysee/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levysee/error.hpp"

namespace levysee {

StateVector JumpCoefficient::compensator(double t, const StateVector& x, const IntensityMeasure& nu) const {
    return nu.integrate([&](std::span<const double> mark) { return eval(t, mark, x); });
}

double JumpCoefficient::norm_pow_integral(double t, const StateVector& x, double q, const IntensityMeasure& nu) const {
    return nu.integrate_scalar([&](std::span<const double> mark) { return norm_pow(eval(t, mark, x).norm(), q); });
}

double JumpCoefficient::diff_norm_pow_integral(double t, const StateVector& x, const StateVector& y, double q,
                                               const IntensityMeasure& nu) const {
    return nu.integrate_scalar(
        [&](std::span<const double> mark) { return norm_pow((eval(t, mark, x) - eval(t, mark, y)).norm(), q); });
}

// Drifts

LinearDrift::LinearDrift(double rate) : DriftCoefficient(rate, rate * rate), rate_(rate) {}

StateVector LinearDrift::eval(double, const StateVector& x) const { return rate_ * x; }

std::string LinearDrift::describe() const {
    std::ostringstream os;
    os << "linear(rate=" << rate_ << ")";
    return os.str();
}

namespace {

double cubic_growth(double c, double radius) {
    const double r2 = radius * radius;
    return c * c * r2 * r2 * r2 / (1.0 + r2);
}

}  // namespace

CubicDrift::CubicDrift(double coefficient, double growth_radius)
    : DriftCoefficient(0.0, cubic_growth(coefficient, growth_radius)), c_(coefficient), radius_(growth_radius) {
    require(coefficient >= 0.0, "CubicDrift: coefficient must be nonnegative for semimonotonicity M = 0");
    require(growth_radius > 0.0, "CubicDrift: growth radius must be positive");
}

StateVector CubicDrift::eval(double, const StateVector& x) const {
    StateVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -c_ * x[i] * x[i] * x[i];
    return out;
}

std::string CubicDrift::describe() const {
    std::ostringstream os;
    os << "cubic(c=" << c_ << ", growth_radius=" << radius_ << ")";
    return os.str();
}

SaturatingDrift::SaturatingDrift(double saturation, double damping)
    : DriftCoefficient(saturation - damping, std::max(saturation, damping) * std::max(saturation, damping)),
      a_(saturation),
      b_(damping) {
    require(saturation >= 0.0 && damping >= 0.0, "SaturatingDrift: parameters must be nonnegative");
}

StateVector SaturatingDrift::eval(double, const StateVector& x) const {
    StateVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -b_ * x[i] + a_ * std::tanh(x[i]);
    return out;
}

std::string SaturatingDrift::describe() const {
    std::ostringstream os;
    os << "saturating(a=" << a_ << ", b=" << b_ << ")";
    return os.str();
}

// Affine jumps

namespace {

JumpConstants affine_constants(const StateVector& sigma, double gain, const IntensityMeasure& nu, double p) {
    require(nu.mark_dimension() == 1, "AffineJump: requires scalar marks");
    require(p >= 1.0, "AffineJump: p must be >= 1");
    const double mu2 = nu.moment(2.0);
    const double mup = nu.moment(p);
    const double s = sigma.norm();
    const double g = std::abs(gain);
    JumpConstants c;
    c.lipschitz = g * g * mu2;
    c.growth = (s * s + g * g) * mu2;
    if (p == 1.0) {
        c.moment_p = std::max(s, g) * mup;
    } else {
        const double r = p / (p - 1.0);
        c.moment_p = std::pow(std::pow(s, r) + std::pow(g, r), p - 1.0) * mup;
    }
    return c;
}

}  // namespace

AffineJump::AffineJump(StateVector sigma, double gain, const IntensityMeasure& nu, double p)
    : JumpCoefficient(affine_constants(sigma, gain, nu, p)), sigma_(std::move(sigma)), gain_(gain) {
    require(sigma_.is_finite() && std::isfinite(gain_), "AffineJump: non-finite parameters");
}

StateVector AffineJump::amplitude(const StateVector& x) const {
    StateVector a = sigma_;
    a.axpy(gain_, x);
    return a;
}

StateVector AffineJump::eval(double, std::span<const double> mark, const StateVector& x) const {
    return mark[0] * amplitude(x);
}

StateVector AffineJump::compensator(double, const StateVector& x, const IntensityMeasure& nu) const {
    return nu.mean_integral()[0] * amplitude(x);
}

double AffineJump::norm_pow_integral(double, const StateVector& x, double q, const IntensityMeasure& nu) const {
    return norm_pow(amplitude(x).norm(), q) * nu.moment(q);
}

double AffineJump::diff_norm_pow_integral(double, const StateVector& x, const StateVector& y, double q,
                                          const IntensityMeasure& nu) const {
    return norm_pow(std::abs(gain_) * (x - y).norm(), q) * nu.moment(q);
}

std::string AffineJump::describe() const {
    std::ostringstream os;
    os << "affine(|sigma|=" << sigma_.norm() << ", gain=" << gain_ << ")";
    return os.str();
}

// Rescaling

RescaledDrift::RescaledDrift(std::shared_ptr<const DriftCoefficient> base, double alpha, double horizon)
    : DriftCoefficient(base->semimonotonicity(), base->growth() * std::max(1.0, std::exp(-2.0 * alpha * horizon))),
      base_(std::move(base)),
      alpha_(alpha) {}

StateVector RescaledDrift::eval(double t, const StateVector& x) const {
    const double up = std::exp(alpha_ * t);
    StateVector v = base_->eval(t, up * x);
    v *= std::exp(-alpha_ * t);
    return v;
}

std::string RescaledDrift::describe() const {
    std::ostringstream os;
    os << "rescaled(alpha=" << alpha_ << ", " << base_->describe() << ")";
    return os.str();
}

namespace {

JumpConstants rescaled_constants(const JumpConstants& c, double alpha, double horizon, double p) {
    JumpConstants out = c;
    out.growth = c.growth * std::max(1.0, std::exp(-2.0 * alpha * horizon));
    out.moment_p = c.moment_p * std::max(1.0, std::exp(-p * alpha * horizon));
    return out;
}

}  // namespace

RescaledJump::RescaledJump(std::shared_ptr<const JumpCoefficient> base, double alpha, double horizon, double p)
    : JumpCoefficient(rescaled_constants(base->constants(), alpha, horizon, p)), base_(std::move(base)), alpha_(alpha) {}

StateVector RescaledJump::eval(double t, std::span<const double> mark, const StateVector& x) const {
    StateVector v = base_->eval(t, mark, std::exp(alpha_ * t) * x);
    v *= std::exp(-alpha_ * t);
    return v;
}

StateVector RescaledJump::compensator(double t, const StateVector& x, const IntensityMeasure& nu) const {
    StateVector v = base_->compensator(t, std::exp(alpha_ * t) * x, nu);
    v *= std::exp(-alpha_ * t);
    return v;
}

double RescaledJump::norm_pow_integral(double t, const StateVector& x, double q, const IntensityMeasure& nu) const {
    return std::exp(-q * alpha_ * t) * base_->norm_pow_integral(t, std::exp(alpha_ * t) * x, q, nu);
}

double RescaledJump::diff_norm_pow_integral(double t, const StateVector& x, const StateVector& y, double q,
                                            const IntensityMeasure& nu) const {
    const double up = std::exp(alpha_ * t);
    return std::exp(-q * alpha_ * t) * base_->diff_norm_pow_integral(t, up * x, up * y, q, nu);
}

std::string RescaledJump::describe() const {
    std::ostringstream os;
    os << "rescaled(alpha=" << alpha_ << ", " << base_->describe() << ")";
    return os.str();
}

}  // namespace levysee
