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

#include "levysee/validate.hpp"

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "levysee/error.hpp"

namespace levysee {
namespace {

SystemSpec custom(std::shared_ptr<const DriftCoefficient> f, std::shared_ptr<const JumpCoefficient> k,
                  const IntensityMeasure& nu, std::size_t d) {
    SystemSpec s{"custom", SpectralSemigroup(std::vector<double>(d, -1.0)), std::move(f), std::move(k), nu,
                 InitialLaw{StateVector(d), 0.0}};
    return s;
}

class NanDrift final : public DriftCoefficient {
public:
    NanDrift() : DriftCoefficient(0.0, 0.0) {}
    StateVector eval(double, const StateVector& x) const override {
        StateVector y = x;
        y[0] = std::nan("");
        return y;
    }
    std::string describe() const override { return "nan"; }
};

TEST(Validate, EveryBuiltinPasses) {
    for (const auto& name : builtin_system_names()) {
        for (const char* p : {"2", "4"}) {
            const ValidationReport r = validate_hypothesis(builtin_system(name, {{"p", p}}), 10000, 10.0, 1);
            EXPECT_TRUE(r.passed()) << name << " p=" << p << " M " << r.empirical.M << "/" << r.declared.M
                                    << " C " << r.empirical.C << "/" << r.declared.C << " D " << r.empirical.D
                                    << "/" << r.declared.D << " F " << r.empirical.F << "/" << r.declared.F;
        }
    }
}

// f(x) = M x: the semimonotonicity ratio is identically M.
TEST(Validate, LinearDriftRatioIsExact) {
    const IntensityMeasure nu(1.0, UniformMarks{-0.5, 1.0});
    auto f = std::make_shared<LinearDrift>(-1.25);
    auto k = std::make_shared<AffineJump>(StateVector(3), 0.0, nu, 2.0);
    const ValidationReport r = validate_hypothesis(custom(f, k, nu, 3), 500, 10.0, 2);
    EXPECT_NEAR(r.empirical.M, -1.25, 1e-12);
    EXPECT_TRUE(r.passed());
}

// k = ξ x: the Lipschitz ratio is identically ∫ξ² dν.
TEST(Validate, MultiplicativeJumpLipschitz) {
    const IntensityMeasure nu(2.0, AtomMarks{{{0.5}, {-1.0}}, {0.5, 0.5}});
    auto f = std::make_shared<LinearDrift>(0.0);
    auto k = std::make_shared<AffineJump>(StateVector(2), 1.0, nu, 2.0);
    const ValidationReport r = validate_hypothesis(custom(f, k, nu, 2), 500, 10.0, 3);
    EXPECT_NEAR(r.empirical.C, 2.0 * 0.625, 1e-12);
    EXPECT_NEAR(r.declared.C, 2.0 * 0.625, 1e-15);
}

// Understated constants are caught.
TEST(Validate, DetectsWrongDeclaration) {
    const IntensityMeasure nu(1.0, UniformMarks{-0.5, 1.0});
    auto f = std::make_shared<SaturatingDrift>(2.0, 0.5);
    class Liar final : public DriftCoefficient {
    public:
        Liar() : DriftCoefficient(0.0, 4.0) {}
        StateVector eval(double, const StateVector& x) const override { return SaturatingDrift(2.0, 0.5).eval(0, x); }
        std::string describe() const override { return "liar"; }
    };
    auto k = std::make_shared<AffineJump>(StateVector(2), 0.0, nu, 2.0);
    EXPECT_TRUE(validate_hypothesis(custom(f, k, nu, 2), 2000, 10.0, 4).M_ok);
    EXPECT_FALSE(validate_hypothesis(custom(std::make_shared<Liar>(), k, nu, 2), 2000, 10.0, 4).M_ok);
}

TEST(Validate, Deterministic) {
    const SystemSpec s = builtin_system("saturating-drift");
    const ValidationReport a = validate_hypothesis(s, 1000, 5.0, 9);
    const ValidationReport b = validate_hypothesis(s, 1000, 5.0, 9);
    EXPECT_EQ(a.empirical.M, b.empirical.M);
    EXPECT_EQ(a.empirical.F, b.empirical.F);
}

TEST(Validate, RejectsNonFinite) {
    const IntensityMeasure nu(1.0, UniformMarks{-0.5, 1.0});
    auto k = std::make_shared<AffineJump>(StateVector(2), 0.0, nu, 2.0);
    EXPECT_THROW(validate_hypothesis(custom(std::make_shared<NanDrift>(), k, nu, 2), 10, 1.0, 1), Error);
    EXPECT_THROW(validate_hypothesis(builtin_system("linear-ou-jump"), 0, 1.0, 1), Error);
}

}  // namespace
}  // namespace levysee
