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

#include <algorithm>
#include <cmath>
#include <limits>

#include "levysee/error.hpp"
#include "levysee/rng.hpp"

namespace levysee {

namespace {

StateVector sample_ball(CounterRng& rng, std::size_t dim, double radius) {
    StateVector x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = rng.normal();
    const double n = x.norm();
    const double r = radius * std::pow(rng.uniform(), 1.0 / double(dim));
    if (n > 0.0) x *= r / n;
    return x;
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, std::string("validate_hypothesis: non-finite ") + what);
    return v;
}

bool within(double empirical, double declared) { return empirical <= declared + 1e-9 * std::abs(declared); }

}  // namespace

ValidationReport validate_hypothesis(const SystemSpec& sys, std::size_t n_samples, double radius, std::uint64_t seed) {
    require(n_samples >= 1, "validate_hypothesis: n_samples must be >= 1");
    require(radius > 0.0, "validate_hypothesis: radius must be positive");

    ValidationReport rep;
    rep.declared = sys.constants();
    rep.n_samples = n_samples;
    rep.radius = radius;
    rep.seed = seed;

    const double inf = std::numeric_limits<double>::infinity();
    DeclaredConstants& e = rep.empirical;
    e.alpha = sys.semigroup.growth_bound();
    e.M = e.C = e.D = e.D_f = e.D_k = e.F = -inf;

    const std::size_t dim = sys.dimension();
    const double p = sys.p;
    CounterRng rng(seed, static_cast<std::uint64_t>(Stream::Validation));

    auto growth = [&](double t, const StateVector& x) {
        const double f2 = checked(sys.drift->eval(t, x).squared_norm(), "drift");
        const double k2 = checked(sys.jump->norm_pow_integral(t, x, 2.0, sys.nu), "jump integral");
        const double denom = 1.0 + x.squared_norm();
        e.D_f = std::max(e.D_f, f2 / denom);
        e.D_k = std::max(e.D_k, k2 / denom);
        e.D = std::max(e.D, (f2 + k2) / denom);
        const double kp = checked(sys.jump->norm_pow_integral(t, x, p, sys.nu), "jump p-integral");
        e.F = std::max(e.F, kp / (1.0 + norm_pow(x.norm(), p)));
    };

    for (std::size_t s = 0; s < n_samples; ++s) {
        const double t = sys.horizon * rng.uniform();
        const StateVector x = sample_ball(rng, dim, radius);
        StateVector y;
        if (s % 2 == 0) {
            y = sample_ball(rng, dim, radius);
        } else {
            // Nearby pairs probe the local one-sided slope.
            StateVector dir = sample_ball(rng, dim, 1.0);
            y = x + (1e-3 * radius) * dir;
            if (y.norm() > radius) y *= radius / y.norm();
        }
        growth(t, x);
        growth(t, y);

        const StateVector dxy = x - y;
        const double d2 = dxy.squared_norm();
        if (d2 == 0.0) continue;
        const StateVector df = sys.drift->eval(t, x) - sys.drift->eval(t, y);
        e.M = std::max(e.M, checked(df.dot(dxy), "drift") / d2);
        e.C = std::max(e.C, checked(sys.jump->diff_norm_pow_integral(t, x, y, 2.0, sys.nu), "jump difference") / d2);
        e.F = std::max(e.F, checked(sys.jump->diff_norm_pow_integral(t, x, y, p, sys.nu), "jump difference") /
                                norm_pow(std::sqrt(d2), p));
    }

    rep.M_ok = within(e.M, rep.declared.M);
    rep.C_ok = within(e.C, rep.declared.C);
    rep.D_ok = within(e.D, rep.declared.D) && within(e.D_f, rep.declared.D_f) && within(e.D_k, rep.declared.D_k);
    rep.F_ok = within(e.F, rep.declared.F);
    return rep;
}

}  // namespace levysee
