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

#include "levysee/system.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "levysee/error.hpp"

namespace levysee {

StateVector InitialLaw::sample(CounterRng& rng) const {
    StateVector x = center;
    if (half_width == 0.0) return x;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += half_width * (2.0 * rng.uniform() - 1.0);
    return x;
}

DeclaredConstants SystemSpec::constants() const {
    DeclaredConstants c;
    c.alpha = semigroup.growth_bound();
    c.M = drift->semimonotonicity();
    c.C = jump->constants().lipschitz;
    c.D_f = drift->growth();
    c.D_k = jump->constants().growth;
    c.D = c.D_f + c.D_k;
    c.F = jump->constants().moment_p;
    return c;
}

StateVector SystemSpec::compensated_drift(double t, const StateVector& x) const {
    StateVector v = drift->eval(t, x);
    v -= jump->compensator(t, x, nu);
    return v;
}

namespace {

// Typed access to the override map; every key must be consumed exactly once
// by the family builder, leftovers are rejected.
class Params {
public:
    explicit Params(const ParameterMap& m) : map_(m) {}

    double number(const std::string& key, double fallback) {
        auto it = find(key);
        if (!it) return fallback;
        return parse_double(key, *it);
    }

    std::vector<double> list(const std::string& key, std::vector<double> fallback) {
        auto it = find(key);
        if (!it) return fallback;
        std::vector<double> out;
        std::stringstream ss(*it);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
        if (out.empty()) fail(ErrorCode::Config, "parameter '" + key + "': empty list");
        return out;
    }

    std::string text(const std::string& key, std::string fallback) {
        auto it = find(key);
        return it ? trim(*it) : fallback;
    }

    bool has(const std::string& key) const { return map_.count(key) != 0; }

    void finish(std::string_view family) const {
        for (const auto& [k, v] : map_)
            if (!used_.count(k))
                fail(ErrorCode::Config, "unknown parameter '" + k + "' for system '" + std::string(family) + "'");
    }

private:
    const std::string* find(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end()) return nullptr;
        used_.insert(key);
        return &it->second;
    }

    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }

    static double parse_double(const std::string& key, const std::string& raw) {
        const std::string s = trim(raw);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
            fail(ErrorCode::Config, "parameter '" + key + "': not a finite number: '" + s + "'");
        return v;
    }

    const ParameterMap& map_;
    std::set<std::string> used_;
};

StateVector broadcast(const std::string& key, std::vector<double> v, std::size_t dim) {
    if (v.size() == 1) return StateVector(dim, v[0]);
    if (v.size() != dim)
        fail(ErrorCode::Config, "parameter '" + key + "': expected 1 or " + std::to_string(dim) + " values");
    return StateVector(std::move(v));
}

IntensityMeasure read_measure(Params& P, double default_mass, const MarkLaw& default_law) {
    const double mass = P.number("mass", default_mass);
    const std::string kind = P.text("marks", "");
    MarkLaw law = default_law;
    const bool kind_given = !kind.empty();
    if (kind == "atoms" || (!kind_given && std::holds_alternative<AtomMarks>(law))) {
        AtomMarks dflt = std::holds_alternative<AtomMarks>(law) ? std::get<AtomMarks>(law) : AtomMarks{{{1.0}}, {1.0}};
        std::vector<double> fallback_values;
        for (const auto& a : dflt.atoms) fallback_values.push_back(a[0]);
        auto values = P.list("mark_values", fallback_values);
        auto weights = P.list("mark_weights", values.size() == dflt.weights.size()
                                                  ? dflt.weights
                                                  : std::vector<double>(values.size(), 1.0));
        if (weights.size() != values.size()) fail(ErrorCode::Config, "mark_weights: one weight per mark value");
        AtomMarks atoms;
        for (double v : values) atoms.atoms.push_back({v});
        atoms.weights = weights;
        law = atoms;
    } else if (kind == "uniform" || (!kind_given && std::holds_alternative<UniformMarks>(law))) {
        UniformMarks dflt = std::holds_alternative<UniformMarks>(law) ? std::get<UniformMarks>(law) : UniformMarks{};
        law = UniformMarks{P.number("mark_lower", dflt.lower), P.number("mark_upper", dflt.upper)};
    } else if (kind == "gaussian" || (!kind_given && std::holds_alternative<TruncatedGaussianMarks>(law))) {
        TruncatedGaussianMarks dflt = std::holds_alternative<TruncatedGaussianMarks>(law)
                                          ? std::get<TruncatedGaussianMarks>(law)
                                          : TruncatedGaussianMarks{};
        law = TruncatedGaussianMarks{P.number("mark_sigma", dflt.sigma), P.number("mark_cutoff", dflt.cutoff)};
    } else {
        fail(ErrorCode::Config, "marks: expected atoms, uniform or gaussian, got '" + kind + "'");
    }
    try {
        return IntensityMeasure(mass, law);
    } catch (const Error& e) {
        fail(ErrorCode::Config, e.what());
    }
}

struct Common {
    double p;
    double horizon;
    std::size_t dim;
};

Common read_common(Params& P, std::size_t default_dim) {
    Common c;
    c.p = P.number("p", 2.0);
    c.horizon = P.number("T", 1.0);
    const double d = P.number("dimension", static_cast<double>(default_dim));
    if (!(c.p >= 1.0)) fail(ErrorCode::Config, "p: must be >= 1");
    if (!(c.horizon > 0.0)) fail(ErrorCode::Config, "T: must be positive");
    if (!(d >= 1.0 && d == std::floor(d) && d <= 4096.0)) fail(ErrorCode::Config, "dimension: must be a positive integer");
    c.dim = static_cast<std::size_t>(d);
    return c;
}

std::vector<double> read_eigenvalues(Params& P, std::size_t dim, std::vector<double> fallback) {
    auto ev = P.list("eigenvalues", std::move(fallback));
    if (ev.size() == 1 && dim > 1) ev.assign(dim, ev[0]);
    if (ev.size() != dim) fail(ErrorCode::Config, "eigenvalues: expected one per dimension");
    return ev;
}

InitialLaw read_initial(Params& P, std::size_t dim, std::vector<double> fallback) {
    InitialLaw law;
    law.center = broadcast("x0", P.list("x0", std::move(fallback)), dim);
    law.half_width = P.number("x0_halfwidth", 0.0);
    if (law.half_width < 0.0) fail(ErrorCode::Config, "x0_halfwidth: must be nonnegative");
    return law;
}

std::shared_ptr<const JumpCoefficient> read_affine_jump(Params& P, std::size_t dim, const IntensityMeasure& nu,
                                                        double p, std::vector<double> sigma_fallback, double gain) {
    StateVector sigma = broadcast("sigma", P.list("sigma", std::move(sigma_fallback)), dim);
    const double g = P.number("gain", gain);
    if (nu.mark_dimension() != 1) fail(ErrorCode::Config, "affine jump coefficient needs scalar marks");
    return std::make_shared<AffineJump>(std::move(sigma), g, nu, p);
}

// Closed-form E‖X_t‖² for f = r x, k = ξ(σ + g x), diagonal A: per coordinate
// m' = 2(λ+r) m + μ2 (σ² + 2σg E X + g² m), E X_t = e^{(λ+r)t} E X_0.
std::function<double(double)> linear_second_moment(const SpectralSemigroup& sg, double rate, const AffineJump& k,
                                                   const IntensityMeasure& nu, const InitialLaw& init) {
    const double mu2 = nu.moment(2.0);
    const double g = k.gain();
    struct Coord {
        double a, b, m0, e0, sigma;
    };
    std::vector<Coord> coords;
    for (std::size_t i = 0; i < sg.dimension(); ++i) {
        const double b = sg.eigenvalues()[i] + rate;
        const double c = init.center[i];
        const double h = init.half_width;
        coords.push_back({2.0 * b + g * g * mu2, b, c * c + h * h / 3.0, c, k.sigma()[i]});
    }
    return [coords, mu2, g](double t) {
        double total = 0.0;
        for (const auto& c : coords) {
            const double e_at = std::exp(c.a * t);
            const double phi = c.a == 0.0 ? t : std::expm1(c.a * t) / c.a;
            const double cross = c.a == c.b ? t * e_at : (std::exp(c.b * t) - e_at) / (c.b - c.a);
            total += e_at * c.m0 + mu2 * c.sigma * c.sigma * phi + 2.0 * mu2 * c.sigma * g * c.e0 * cross;
        }
        return total;
    };
}

SystemSpec make_linear_ou_jump(const ParameterMap& overrides) {
    Params P(overrides);
    const Common c = read_common(P, 1);
    const double lambda = P.number("lambda", -0.5);
    auto ev = read_eigenvalues(P, c.dim, {lambda});
    const double rate = P.number("drift_rate", 0.0);
    IntensityMeasure nu = read_measure(P, 2.0, AtomMarks{{{0.25}, {-0.15}}, {0.5, 0.5}});
    InitialLaw init = read_initial(P, c.dim, {4.0});
    auto jump = read_affine_jump(P, c.dim, nu, c.p, {1.0}, 0.1);
    P.finish("linear-ou-jump");

    SpectralSemigroup sg(std::move(ev));
    auto moment = linear_second_moment(sg, rate, static_cast<const AffineJump&>(*jump), nu, init);
    return SystemSpec{"linear-ou-jump", std::move(sg), std::make_shared<LinearDrift>(rate), jump, std::move(nu),
                      std::move(init), c.p, c.horizon, 0.0, std::move(moment)};
}

SystemSpec make_cubic_dissipative(const ParameterMap& overrides) {
    Params P(overrides);
    const Common c = read_common(P, 8);
    const double kappa = P.number("kappa", 1.0);
    std::vector<double> ev_default(c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) ev_default[i] = -kappa * double(i + 1) * double(i + 1);
    auto ev = read_eigenvalues(P, c.dim, ev_default);
    const double cubic = P.number("cubic", 1.0);
    const double radius = P.number("growth_radius", 10.0);
    IntensityMeasure nu = read_measure(P, 1.0, UniformMarks{-0.5, 1.0});
    InitialLaw init = read_initial(P, c.dim, {1.0});
    std::vector<double> sigma_default(c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) sigma_default[i] = 0.5 / double(i + 1);
    auto jump = read_affine_jump(P, c.dim, nu, c.p, sigma_default, 0.3);
    P.finish("cubic-dissipative");

    return SystemSpec{"cubic-dissipative", SpectralSemigroup(std::move(ev)), std::make_shared<CubicDrift>(cubic, radius),
                      jump, std::move(nu), std::move(init), c.p, c.horizon, 0.0, {}};
}

SystemSpec make_saturating_drift(const ParameterMap& overrides) {
    Params P(overrides);
    const Common c = read_common(P, 4);
    const double kappa = P.number("kappa", 1.0);
    std::vector<double> ev_default(c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) ev_default[i] = -kappa * double(i + 1);
    auto ev = read_eigenvalues(P, c.dim, ev_default);
    const double a = P.number("saturation", 2.0);
    const double b = P.number("damping", 0.5);
    IntensityMeasure nu = read_measure(P, 3.0, TruncatedGaussianMarks{0.5, 1.5});
    InitialLaw init = read_initial(P, c.dim, {0.5});
    auto jump = read_affine_jump(P, c.dim, nu, c.p, {0.3}, 0.2);
    P.finish("saturating-drift");

    return SystemSpec{"saturating-drift", SpectralSemigroup(std::move(ev)), std::make_shared<SaturatingDrift>(a, b), jump,
                      std::move(nu), std::move(init), c.p, c.horizon, 0.0, {}};
}

}  // namespace

std::vector<std::string> builtin_system_names() { return {"linear-ou-jump", "cubic-dissipative", "saturating-drift"}; }

SystemSpec builtin_system(std::string_view name, const ParameterMap& overrides) {
    try {
        if (name == "linear-ou-jump") return make_linear_ou_jump(overrides);
        if (name == "cubic-dissipative") return make_cubic_dissipative(overrides);
        if (name == "saturating-drift") return make_saturating_drift(overrides);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Config) throw;
        fail(ErrorCode::Config, std::string(name) + ": " + e.what());
    }
    fail(ErrorCode::Config, "unknown system '" + std::string(name) + "'");
}

SystemSpec rescale_system(const SystemSpec& sys) {
    const double alpha = sys.semigroup.growth_bound();
    SystemSpec out{sys.name,
                   sys.semigroup.shifted(alpha),
                   std::make_shared<RescaledDrift>(sys.drift, alpha, sys.horizon),
                   std::make_shared<RescaledJump>(sys.jump, alpha, sys.horizon, sys.p),
                   sys.nu,
                   sys.initial,
                   sys.p,
                   sys.horizon,
                   sys.rescale_shift + alpha,
                   {}};
    if (sys.second_moment) {
        auto base = sys.second_moment;
        out.second_moment = [base, alpha](double t) { return std::exp(-2.0 * alpha * t) * base(t); };
    }
    return out;
}

}  // namespace levysee
