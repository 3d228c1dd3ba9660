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

#include "levysee/jump_path.hpp"

#include <algorithm>
#include <cmath>

#include "levysee/error.hpp"
#include "levysee/quadrature.hpp"
#include "levysee/rng.hpp"

namespace levysee {

JumpPath::JumpPath(double horizon, std::vector<JumpEvent> events, std::uint64_t seed)
    : horizon_(horizon), events_(std::move(events)), seed_(seed) {
    require(std::isfinite(horizon_) && horizon_ > 0.0, "JumpPath: horizon must be positive");
    double prev = 0.0;
    for (const auto& e : events_) {
        require(e.time > prev && e.time <= horizon_, "JumpPath: event times must increase strictly within (0, T]");
        prev = e.time;
    }
}

JumpPath JumpPath::merge(const JumpPath& a, const JumpPath& b) {
    require(a.horizon_ == b.horizon_, "JumpPath::merge: horizons differ");
    std::vector<JumpEvent> events;
    events.reserve(a.count() + b.count());
    std::merge(a.events_.begin(), a.events_.end(), b.events_.begin(), b.events_.end(), std::back_inserter(events),
               [](const JumpEvent& x, const JumpEvent& y) { return x.time < y.time; });
    // Coincident times have probability zero; drop the later copy if it happens.
    events.erase(std::unique(events.begin(), events.end(),
                             [](const JumpEvent& x, const JumpEvent& y) { return x.time == y.time; }),
                 events.end());
    return JumpPath(a.horizon_, std::move(events), mix64(a.seed_ ^ mix64(b.seed_)));
}

JumpPath sample_jump_path(const IntensityMeasure& nu, double horizon, std::uint64_t seed) {
    require(std::isfinite(horizon) && horizon > 0.0, "sample_jump_path: horizon must be positive");
    CounterRng arrivals(seed, static_cast<std::uint64_t>(Stream::Jumps));
    CounterRng marks(seed, static_cast<std::uint64_t>(Stream::Jumps) + 0x100);
    std::vector<JumpEvent> events;
    const double rate = nu.total_mass();
    double t = 0.0;
    for (;;) {
        t += -std::log(arrivals.uniform()) / rate;
        if (!(t <= horizon)) break;
        if (!events.empty() && t <= events.back().time) continue;
        events.push_back({t, nu.sample_mark(marks.uniform())});
    }
    return JumpPath(horizon, std::move(events), seed);
}

namespace {

void check_t_end(const JumpPath& path, double t_end) {
    require(t_end >= 0.0 && t_end <= path.horizon(), "jump integral: t_end outside [0, horizon]");
}

}  // namespace

StateVector compensated_integral(const JumpPath& path, const IntensityMeasure& nu, const JumpIntegrand& integrand,
                                 double t_end) {
    check_t_end(path, t_end);
    auto compensator_density = [&](double s) {
        return nu.integrate([&](std::span<const double> mark) { return integrand(s, mark); });
    };
    StateVector acc = compensator_density(0.0);
    acc *= 0.0;

    const GaussRule rule = gauss16();
    double left = 0.0;
    for (const auto& e : path.events()) {
        if (e.time > t_end) break;
        acc += integrand(e.time, e.mark);
        acc -= integrate(rule, left, e.time, compensator_density);
        left = e.time;
    }
    if (t_end > left) acc -= integrate(rule, left, t_end, compensator_density);
    return acc;
}

double quadratic_variation(const JumpPath& path, const JumpIntegrand& integrand, double t_end) {
    check_t_end(path, t_end);
    double qv = 0.0;
    for (const auto& e : path.events()) {
        if (e.time > t_end) break;
        qv += integrand(e.time, e.mark).squared_norm();
    }
    return qv;
}

double continuous_quadratic_variation(const JumpPath& path, const JumpIntegrand&, double t_end) {
    check_t_end(path, t_end);
    return 0.0;
}

}  // namespace levysee
