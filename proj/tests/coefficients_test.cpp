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

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "levysee/error.hpp"
#include "levysee/rng.hpp"
#include "levysee/system.hpp"

namespace levysee {
namespace {

StateVector random_vector(CounterRng& rng, std::size_t d, double scale) {
    StateVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = scale * rng.normal();
    return x;
}

// Same map as AffineJump but using the base-class quadrature integrals.
class QuadratureAffine final : public JumpCoefficient {
public:
    QuadratureAffine(StateVector sigma, double gain) : JumpCoefficient({}), sigma_(std::move(sigma)), gain_(gain) {}
    StateVector eval(double, std::span<const double> m, const StateVector& x) const override {
        StateVector a = sigma_;
        a.axpy(gain_, x);
        return m[0] * a;
    }
    std::string describe() const override { return "quadrature affine"; }

private:
    StateVector sigma_;
    double gain_;
};

TEST(LinearDrift, Constants) {
    const LinearDrift f(-2.0);
    EXPECT_EQ(f.semimonotonicity(), -2.0);
    EXPECT_EQ(f.growth(), 4.0);
    EXPECT_EQ(f.eval(0.0, StateVector{1.0, -3.0}), (StateVector{-2.0, 6.0}));
}

// (x³ - y³)(x - y) >= 0, so -x³ is semimonotone with M = 0.
TEST(CubicDrift, Semimonotone) {
    const CubicDrift f(1.0, 10.0);
    CounterRng rng(3);
    for (int k = 0; k < 10000; ++k) {
        const StateVector x = random_vector(rng, 3, 2.0), y = random_vector(rng, 3, 2.0);
        EXPECT_LE(dot(f.eval(0.0, x) - f.eval(0.0, y), x - y), 1e-12);
    }
    EXPECT_EQ(f.semimonotonicity(), 0.0);
    EXPECT_NEAR(f.growth(), 1e6 / 101.0, 1e-9);
}

TEST(SaturatingDrift, Constants) {
    const SaturatingDrift f(2.0, 0.5);
    EXPECT_DOUBLE_EQ(f.semimonotonicity(), 1.5);
    EXPECT_DOUBLE_EQ(f.growth(), 4.0);
    const StateVector y = f.eval(0.0, StateVector{1.0});
    EXPECT_DOUBLE_EQ(y[0], -0.5 + 2.0 * std::tanh(1.0));
}

TEST(AffineJump, ClosedFormsMatchQuadrature) {
    for (const IntensityMeasure& nu : {IntensityMeasure(1.0, UniformMarks{-0.5, 1.0}),
                                       IntensityMeasure(3.0, TruncatedGaussianMarks{0.5, 1.5}),
                                       IntensityMeasure(2.0, AtomMarks{{{0.25}, {-0.15}}, {0.5, 0.5}})}) {
        const StateVector sigma{0.3, -0.1};
        const AffineJump k(sigma, 0.2, nu, 4.0);
        const QuadratureAffine q(sigma, 0.2);
        const StateVector x{1.0, 2.0}, y{-0.5, 0.25};
        EXPECT_LE((k.compensator(0.0, x, nu) - q.compensator(0.0, x, nu)).norm(), 1e-13);
        for (double p : {2.0, 4.0}) {
            EXPECT_NEAR(k.norm_pow_integral(0.0, x, p, nu), q.norm_pow_integral(0.0, x, p, nu), 1e-12);
            EXPECT_NEAR(k.diff_norm_pow_integral(0.0, x, y, p, nu), q.diff_norm_pow_integral(0.0, x, y, p, nu),
                        1e-12);
        }
    }
}

TEST(AffineJump, DeclaredConstants) {
    const IntensityMeasure nu(1.0, UniformMarks{-0.5, 1.0});
    const AffineJump k(StateVector{0.3, 0.4}, 0.2, nu, 2.0);
    const double mu2 = nu.moment(2.0);
    EXPECT_NEAR(k.constants().lipschitz, 0.04 * mu2, 1e-15);
    EXPECT_NEAR(k.constants().growth, (0.25 + 0.04) * mu2, 1e-15);
    // p = 2: r = 2, F = (‖σ‖² + g²) μ_2
    EXPECT_NEAR(k.constants().moment_p, (0.25 + 0.04) * mu2, 1e-15);
    EXPECT_TRUE(AffineJump(StateVector{1.0}, 0.0, nu, 2.0).state_independent());
    EXPECT_THROW(AffineJump(StateVector{1.0}, 0.0, IntensityMeasure(1.0, AtomMarks{{{1.0, 2.0}}, {1.0}}), 2.0),
                 Error);
}

// F bounds both ∫‖k(x)‖^p dν <= F(1+‖x‖^p) and ∫‖k(x)-k(y)‖^p dν <= F‖x-y‖^p.
TEST(AffineJump, MomentConstantBounds) {
    const IntensityMeasure nu(3.0, TruncatedGaussianMarks{0.5, 1.5});
    CounterRng rng(8);
    for (double p : {1.0, 2.0, 3.0, 4.0, 6.0}) {
        const AffineJump k(StateVector{0.3, -0.2, 0.1}, -0.7, nu, p);
        const double F = k.constants().moment_p;
        for (int i = 0; i < 2000; ++i) {
            const StateVector x = random_vector(rng, 3, 3.0), y = random_vector(rng, 3, 3.0);
            EXPECT_LE(k.norm_pow_integral(0.0, x, p, nu), F * (1.0 + norm_pow(x.norm(), p)) * (1 + 1e-12));
            EXPECT_LE(k.diff_norm_pow_integral(0.0, x, y, p, nu), F * norm_pow((x - y).norm(), p) * (1 + 1e-12));
        }
    }
}

// Rescaled coefficients: e^{-αt} f(t, e^{αt} x).
TEST(Rescaled, Definition) {
    auto base = std::make_shared<CubicDrift>(1.0, 10.0);
    const RescaledDrift f(base, 0.5, 1.0);
    const StateVector x{0.7, -0.3};
    const double t = 0.8, e = std::exp(0.5 * t);
    EXPECT_LE((f.eval(t, x) - (1.0 / e) * base->eval(t, e * x)).norm(), 1e-15);
    EXPECT_EQ(f.semimonotonicity(), base->semimonotonicity());

    const IntensityMeasure nu(1.0, UniformMarks{-0.5, 1.0});
    auto kb = std::make_shared<AffineJump>(StateVector{0.3, 0.1}, 0.2, nu, 2.0);
    const RescaledJump k(kb, 0.5, 1.0, 2.0);
    const double mark[] = {0.4};
    EXPECT_LE((k.eval(t, mark, x) - (1.0 / e) * kb->eval(t, mark, e * x)).norm(), 1e-15);
    EXPECT_EQ(k.constants().lipschitz, kb->constants().lipschitz);
}

TEST(Builtin, DefaultsAndOverrides) {
    const SystemSpec ou = builtin_system("linear-ou-jump");
    EXPECT_EQ(ou.dimension(), 1u);
    EXPECT_EQ(ou.constants().M, 0.0);
    EXPECT_TRUE(static_cast<bool>(ou.second_moment));

    const SystemSpec cubic = builtin_system("cubic-dissipative");
    EXPECT_EQ(cubic.dimension(), 8u);
    EXPECT_DOUBLE_EQ(cubic.semigroup.eigenvalues()[2], -9.0);

    // p = 4 recomputes F from the 4th mark moment.
    const SystemSpec c4 = builtin_system("cubic-dissipative", {{"p", "4"}});
    EXPECT_EQ(c4.p, 4.0);
    EXPECT_NE(c4.constants().F, cubic.constants().F);

    EXPECT_THROW(builtin_system("no-such-system"), Error);
    EXPECT_THROW(builtin_system("linear-ou-jump", {{"bogus", "1"}}), Error);
    EXPECT_THROW(builtin_system("linear-ou-jump", {{"mass", "x"}}), Error);
}

TEST(Builtin, DeclaredDCoversBothParts) {
    for (const auto& name : builtin_system_names()) {
        const DeclaredConstants c = builtin_system(name).constants();
        EXPECT_GE(c.D, c.D_f + c.D_k) << name;
    }
}

// E‖X_t‖² of the linear family solves m' = (2λ + g²μ2) m + 2gμ2σ E X + μ2 σ².
TEST(Builtin, LinearSecondMomentSolvesOde) {
    const SystemSpec sys = builtin_system("linear-ou-jump");
    const double lambda = sys.semigroup.eigenvalues()[0];
    const double mu2 = sys.nu.moment(2.0);
    const double sigma = 1.0, g = 0.1, x0 = 4.0;
    auto mean = [&](double t) { return x0 * std::exp(lambda * t); };  // E X_t (compensated noise)
    for (double t : {0.1, 0.5, 0.9}) {
        const double h = 1e-5;
        const double dm = (sys.second_moment(t + h) - sys.second_moment(t - h)) / (2 * h);
        const double rhs = (2 * lambda + g * g * mu2) * sys.second_moment(t) + 2 * g * mu2 * sigma * mean(t) +
                           mu2 * sigma * sigma;
        EXPECT_NEAR(dm, rhs, 1e-6 * (1.0 + std::abs(rhs)));
    }
    EXPECT_DOUBLE_EQ(sys.second_moment(0.0), 16.0);
}

}  // namespace
}  // namespace levysee
