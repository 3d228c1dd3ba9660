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

#include <memory>
#include <span>
#include <string>

#include "levysee/intensity.hpp"
#include "levysee/state_vector.hpp"

namespace levysee {

/// Drift f(t, x) with its semimonotonicity constant M and its share D_f of
/// the linear-growth constant.
class DriftCoefficient {
public:
    DriftCoefficient(double semimonotonicity, double growth)
        : semimonotonicity_(semimonotonicity), growth_(growth) {}
    virtual ~DriftCoefficient() = default;

    virtual StateVector eval(double t, const StateVector& x) const = 0;
    virtual std::string describe() const = 0;

    double semimonotonicity() const noexcept { return semimonotonicity_; }
    double growth() const noexcept { return growth_; }

private:
    double semimonotonicity_;
    double growth_;
};

/// Constants of a jump coefficient relative to a fixed intensity measure and
/// exponent p.
struct JumpConstants {
    double lipschitz = 0.0;  // C
    double moment_p = 0.0;   // F
    double growth = 0.0;     // D_k
};

/// Jump coefficient k(t, ξ, x). The ν-integrals default to quadrature over
/// the mark law; families with closed forms override them.
class JumpCoefficient {
public:
    explicit JumpCoefficient(JumpConstants constants) : constants_(constants) {}
    virtual ~JumpCoefficient() = default;

    virtual StateVector eval(double t, std::span<const double> mark, const StateVector& x) const = 0;
    virtual std::string describe() const = 0;
    virtual bool state_independent() const { return false; }

    /// ∫_E k(t, ξ, x) ν(dξ)
    virtual StateVector compensator(double t, const StateVector& x, const IntensityMeasure& nu) const;
    /// ∫_E ‖k(t, ξ, x)‖^q ν(dξ)
    virtual double norm_pow_integral(double t, const StateVector& x, double q, const IntensityMeasure& nu) const;
    /// ∫_E ‖k(t, ξ, x) - k(t, ξ, y)‖^q ν(dξ)
    virtual double diff_norm_pow_integral(double t, const StateVector& x, const StateVector& y, double q,
                                          const IntensityMeasure& nu) const;

    const JumpConstants& constants() const noexcept { return constants_; }

private:
    JumpConstants constants_;
};

class LinearDrift final : public DriftCoefficient {
public:
    explicit LinearDrift(double rate);
    StateVector eval(double t, const StateVector& x) const override;
    std::string describe() const override;

private:
    double rate_;
};

/// f(x) = -c x³ coordinatewise. Not globally of linear growth; the declared
/// D_f is the supremum of ‖f(x)‖²/(1+‖x‖²) over the ball of `growth_radius`.
class CubicDrift final : public DriftCoefficient {
public:
    CubicDrift(double coefficient, double growth_radius);
    StateVector eval(double t, const StateVector& x) const override;
    std::string describe() const override;
    double growth_radius() const noexcept { return radius_; }

private:
    double c_;
    double radius_;
};

/// f(x) = -b x + a tanh(x) coordinatewise, a, b >= 0: M = a - b, D_f = max(a, b)².
class SaturatingDrift final : public DriftCoefficient {
public:
    SaturatingDrift(double saturation, double damping);
    StateVector eval(double t, const StateVector& x) const override;
    std::string describe() const override;

private:
    double a_;
    double b_;
};

/// k(t, ξ, x) = ξ (σ + g x) for scalar marks ξ. With μ_q = ∫|ξ|^q ν(dξ):
/// C = g² μ_2, D_k = (‖σ‖² + g²) μ_2, and by Hölder with r = p/(p-1),
/// F = (‖σ‖^r + |g|^r)^{p-1} μ_p.
class AffineJump final : public JumpCoefficient {
public:
    AffineJump(StateVector sigma, double gain, const IntensityMeasure& nu, double p);

    StateVector eval(double t, std::span<const double> mark, const StateVector& x) const override;
    std::string describe() const override;
    bool state_independent() const override { return gain_ == 0.0; }

    StateVector compensator(double t, const StateVector& x, const IntensityMeasure& nu) const override;
    double norm_pow_integral(double t, const StateVector& x, double q, const IntensityMeasure& nu) const override;
    double diff_norm_pow_integral(double t, const StateVector& x, const StateVector& y, double q,
                                  const IntensityMeasure& nu) const override;

    const StateVector& sigma() const noexcept { return sigma_; }
    double gain() const noexcept { return gain_; }

private:
    StateVector amplitude(const StateVector& x) const;

    StateVector sigma_;
    double gain_;
};

/// e^{-αt} f(t, e^{αt} x)
class RescaledDrift final : public DriftCoefficient {
public:
    RescaledDrift(std::shared_ptr<const DriftCoefficient> base, double alpha, double horizon);
    StateVector eval(double t, const StateVector& x) const override;
    std::string describe() const override;

private:
    std::shared_ptr<const DriftCoefficient> base_;
    double alpha_;
};

/// e^{-αt} k(t, ξ, e^{αt} x)
class RescaledJump final : public JumpCoefficient {
public:
    RescaledJump(std::shared_ptr<const JumpCoefficient> base, double alpha, double horizon, double p);
    StateVector eval(double t, std::span<const double> mark, const StateVector& x) const override;
    std::string describe() const override;
    bool state_independent() const override { return base_->state_independent(); }

    StateVector compensator(double t, const StateVector& x, const IntensityMeasure& nu) const override;
    double norm_pow_integral(double t, const StateVector& x, double q, const IntensityMeasure& nu) const override;
    double diff_norm_pow_integral(double t, const StateVector& x, const StateVector& y, double q,
                                  const IntensityMeasure& nu) const override;

private:
    std::shared_ptr<const JumpCoefficient> base_;
    double alpha_;
};

}  // namespace levysee
