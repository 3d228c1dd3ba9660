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

#include "levysee/experiment.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "levysee/error.hpp"
#include "levysee/inequalities.hpp"
#include "levysee/solver.hpp"
#include "levysee/stability.hpp"
#include "levysee/validate.hpp"

namespace levysee {

namespace {

using nlohmann::json;

/// Paths on which the per-path mild-solution diagnostics are evaluated.
constexpr std::size_t kDiagnosticPaths = 100;

json estimate_json(const MonteCarloEstimate& e) {
    return {{"mean", e.mean()}, {"stderr", e.standard_error()}, {"n", e.n()}, {"seed", e.seed()}};
}

json constants_json(const DeclaredConstants& c) {
    return {{"alpha", c.alpha}, {"M", c.M}, {"C", c.C}, {"D", c.D}, {"D_f", c.D_f}, {"D_k", c.D_k}, {"F", c.F}};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Csv {
public:
    explicit Csv(std::initializer_list<const char*> header) {
        bool first = true;
        for (const char* h : header) {
            if (!first) out_ << ',';
            out_ << h;
            first = false;
        }
        out_ << '\n';
    }
    template <typename... Ts>
    void row(const Ts&... cells) {
        bool first = true;
        ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
        out_ << '\n';
    }
    std::string str() const { return out_.str(); }

private:
    static std::string cell(double v) { return num(v); }
    static std::string cell(std::size_t v) { return std::to_string(v); }
    static std::string cell(const std::string& s) { return s; }
    std::ostringstream out_;
};

struct Report {
    json summary = json::object();
    json checks = json::array();
    std::vector<OutputFile> files;

    /// Records `value <= limit` under the name of the inequality it tests.
    void check(const std::string& name, double value, double limit, const std::string& detail = {}) {
        const bool ok = std::isfinite(value) && value <= limit;
        json c{{"name", name}, {"passed", ok}, {"value", std::isfinite(value) ? json(value) : json(nullptr)},
               {"limit", limit}};
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
    }
};

std::vector<double> parse_list(const std::string& field, const std::string& raw, std::size_t dim) {
    std::vector<double> v;
    std::string s = raw;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (used != tok.size() || !std::isfinite(v.back())) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            fail(ErrorCode::Config, field + ": not a finite number: '" + tok + "'");
        }
    }
    if (v.size() == 1) v.assign(dim, v[0]);
    if (v.size() != dim) fail(ErrorCode::Config, field + ": expected 1 or " + std::to_string(dim) + " values");
    return v;
}

SolverSettings settings_of(const ExperimentConfig& cfg) {
    SolverSettings s;
    s.grid_points = cfg.grid_points;
    s.tolerance = cfg.tolerance;
    s.max_iter = cfg.max_iter;
    s.max_halvings = cfg.max_halvings;
    return s;
}

bool generator_is_zero(const SystemSpec& sys) {
    const auto& ev = sys.semigroup.eigenvalues();
    return std::all_of(ev.begin(), ev.end(), [](double l) { return l == 0.0; });
}

JumpIntegrand state_free_jump(const SystemSpec& sys) {
    auto jump = sys.jump;
    const StateVector zero(sys.dimension());
    return [jump, zero](double t, std::span<const double> mark) { return jump->eval(t, mark, zero); };
}

/// Per path: the skeleton driven by V(X) reproduces X, and obeys the a priori bound.
void mild_solution_checks(Report& r, const SystemSpec& sys, const std::vector<JumpPath>& paths,
                          const std::vector<StateVector>& x0, const std::vector<PathGrid>& solutions,
                          const SolverSettings& settings) {
    const std::size_t n = std::min(solutions.size(), kDiagnosticPaths);
    std::vector<double> gap(n), excess(n);
    parallel_for(n, [&](std::size_t j) {
        const PathGrid v = jump_forcing_path(sys, paths[j], solutions[j]);
        const PathGrid y = solve_deterministic_skeleton(sys, v, x0[j], settings);
        double g = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i)
            g = std::max({g, (y.values[i] - solutions[j].values[i]).norm(),
                          (y.left_values[i] - solutions[j].left_values[i]).norm()});
        gap[j] = g / (1.0 + solutions[j].sup_norm());
        excess[j] = skeleton_apriori_bound(sys, v, x0[j], solutions[j]).worst_excess;
    });
    const double worst_gap = n ? *std::max_element(gap.begin(), gap.end()) : 0.0;
    const double worst_excess = n ? *std::max_element(excess.begin(), excess.end()) : 0.0;
    r.check("mild solution fixed point", worst_gap, 1e-8, "sup relative distance between X and skeleton(V(X))");
    r.check("Theorem 3.2 a priori bound", worst_excess, 1e-6, "max relative excess of ||X(t)|| over the bound");
    r.summary["mild_solution"] = {{"paths_checked", n}, {"fixed_point_gap", worst_gap},
                                  {"apriori_excess", worst_excess}};
}

void run_simulate(Report& r, const ExperimentConfig& cfg, const SystemSpec& sys) {
    const SolverSettings settings = settings_of(cfg);
    const std::size_t n = cfg.n_paths, nt = cfg.grid_points + 1;
    std::vector<JumpPath> paths;
    std::vector<StateVector> x0;
    paths.reserve(n);
    x0.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        paths.push_back(monte_carlo_path(sys, cfg.seed, j));
        x0.push_back(monte_carlo_initial(sys, cfg.seed, j));
    }
    std::vector<PathGrid> keep(std::min(n, kDiagnosticPaths));
    std::vector<double> sq(nt * n), pw(nt * n);
    parallel_for(n, [&](std::size_t j) {
        const TimeGrid grid = make_time_grid(sys.horizon, cfg.grid_points, paths[j]);
        PathGrid x = direct_scheme(sys, paths[j], grid, x0[j], settings);
        for (std::size_t k = 0; k < nt; ++k) {
            const double nx = x.values[grid.uniform[k]].norm();
            sq[k * n + j] = nx * nx;
            pw[k * n + j] = norm_pow(nx, sys.p);
        }
        if (j < keep.size()) keep[j] = std::move(x);
    });

    Csv csv({"t", "second_moment", "stderr", "exact", "pth_moment", "pth_stderr"});
    json est = json::object();
    double worst = 0.0;
    for (std::size_t k = 0; k < nt; ++k) {
        const double t = sys.horizon * double(k) / double(cfg.grid_points);
        const auto m2 = canonical_reduce(std::span<const double>(sq.data() + k * n, n), cfg.seed);
        const auto mp = canonical_reduce(std::span<const double>(pw.data() + k * n, n), cfg.seed);
        std::string exact;
        if (sys.second_moment) {
            const double e = sys.second_moment(t);
            exact = num(e);
            worst = std::max(worst, std::abs(m2.mean() - e) / (0.01 * e + 3.0 * m2.standard_error() + 1e-300));
        }
        csv.row(t, m2.mean(), m2.standard_error(), exact, mp.mean(), mp.standard_error());
        if (4 * k == cfg.grid_points || 2 * k == cfg.grid_points || k == cfg.grid_points) {
            json e{{"t", t}, {"second_moment", estimate_json(m2)}, {"pth_moment", estimate_json(mp)}};
            if (sys.second_moment) e["exact_second_moment"] = sys.second_moment(t);
            est[num(t)] = std::move(e);
        }
    }
    r.summary["estimates"] = est;
    if (sys.second_moment)
        r.check("second moment closed form", worst, 1.0,
                "max |mean - exact| / (0.01 exact + 3 stderr) over the uniform grid");
    keep.resize(std::min(keep.size(), n));
    mild_solution_checks(r, sys, paths, x0, keep, settings);
    r.files.push_back({"moments.csv", csv.str()});
}

void run_picard(Report& r, const ExperimentConfig& cfg, const SystemSpec& original) {
    // The rate bound is derived for a contraction semigroup; larger growth
    // bounds are reduced by the exponential change of variables first.
    const bool rescaled = original.semigroup.growth_bound() > 0.0;
    const SystemSpec sys = rescaled ? rescale_system(original) : original;
    PicardOptions opt;
    opt.n_iters = cfg.n_iters;
    opt.n_paths = cfg.n_paths;
    opt.seed = cfg.seed;
    opt.stop_tolerance = cfg.stop_tolerance;
    opt.start_seed = cfg.start_seed;
    opt.solver = settings_of(cfg);
    const PicardResult res = picard_solve(sys, opt);
    const PicardTrace& tr = res.trace;

    Csv csv({"n", "h_n", "bound_n"});
    json h = json::array(), hs = json::array();
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < tr.h.size(); ++n) {
        csv.row(n, tr.h[n].mean(), tr.bound[n]);
        h.push_back(estimate_json(tr.h[n]));
        hs.push_back(estimate_json(tr.h_sup[n]));
        if (n >= 1) worst = std::max(worst, tr.h[n].mean() - tr.bound[n] - 3.0 * tr.h[n].standard_error());
    }
    r.summary["trace"] = {{"n_iters", tr.n_iters}, {"h", h},          {"h_sup", hs},
                          {"bound", tr.bound},     {"C0", tr.C0},     {"C1", tr.C1},
                          {"beta", tr.beta},       {"gamma_lemma", tr.gamma_lemma},
                          {"stopped_early", tr.stopped_early}, {"rescaled", rescaled}};
    if (tr.h.size() > 1)
        r.check("Lemma 3.6 rate", worst, 0.0, "max over n >= 1 of h[n] - C0 C1^n T^n/n! - 3 stderr");
    // Picard iterates are not fixed points; check the direct solutions of the same paths.
    std::vector<PathGrid> direct(std::min(res.paths.size(), kDiagnosticPaths));
    parallel_for(direct.size(), [&](std::size_t j) {
        direct[j] = direct_scheme(sys, res.paths[j], make_time_grid(sys.horizon, cfg.grid_points, res.paths[j]),
                                  res.initial[j], opt.solver);
    });
    mild_solution_checks(r, sys, res.paths, res.initial, direct, opt.solver);
    r.files.push_back({"picard_trace.csv", csv.str()});
}

void run_stability(Report& r, const ExperimentConfig& cfg, const SystemSpec& sys) {
    InitialLaw y_law{StateVector(parse_list("stability.y0", cfg.y0, sys.dimension())), cfg.y0_halfwidth};
    const DecayCurve curve = coupled_decay(sys, sys.initial, y_law, cfg.n_paths, cfg.seed, settings_of(cfg));
    const HypothesisConstants hc = HypothesisConstants::of(sys);
    const double gamma = hc.gamma();
    const double m0 = curve.moment.front().mean();

    Csv csv({"t", "moment", "stderr", "paper_bound"});
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < curve.times.size(); ++k) {
        const double bound = std::exp(gamma * curve.times[k]) * m0;
        const auto& m = curve.moment[k];
        csv.row(curve.times[k], m.mean(), m.standard_error(), bound);
        worst = std::max(worst, m.mean() - bound - 3.0 * m.standard_error());
    }
    r.summary["stability"] = {{"gamma", gamma},
                              {"gamma_proof", hc.gamma_proof()},
                              {"exponentially_stable", gamma < 0.0},
                              {"moment0", estimate_json(curve.moment.front())},
                              {"moment_T", estimate_json(curve.moment.back())},
                              {"has_fit", curve.has_fit},
                              {"fitted_rate", curve.fitted_rate},
                              {"fitted_rate_stderr", curve.fitted_rate_stderr}};
    r.check("Theorem 3.8 decay bound", worst, 0.0, "max over t of moment - e^{gamma t} moment0 - 3 stderr");
    if (curve.has_fit)
        r.check("Theorem 3.8 fitted rate", curve.fitted_rate - 3.0 * curve.fitted_rate_stderr,
                gamma + 1e-9 * (1.0 + std::abs(gamma)), "fitted_rate - 3 stderr <= gamma");
    r.files.push_back({"decay.csv", csv.str()});
}

void run_ito(Report& r, const ExperimentConfig& cfg, const SystemSpec& sys) {
    const SolverSettings settings = settings_of(cfg);
    const std::size_t n = cfg.n_paths;
    std::vector<double> worst_res(n), worst_jump(n), recon(n);
    ResidualSeries first;
    parallel_for(n, [&](std::size_t j) {
        const JumpPath path = monte_carlo_path(sys, cfg.seed, j);
        const StateVector x0 = monte_carlo_initial(sys, cfg.seed, j);
        const TimeGrid grid = make_time_grid(sys.horizon, cfg.grid_points, path);
        const PathGrid x = direct_scheme(sys, path, grid, x0, settings);
        const Forcing z = mild_decomposition(sys, path, x);
        const PathGrid conv = stochastic_convolution(sys.semigroup, x0, z, grid);
        ResidualSeries rs = ito_pth_residual(sys.semigroup, conv, z, sys.p);
        worst_res[j] = -rs.min_residual() / rs.scale;
        worst_jump[j] = rs.max_abs_jump_contribution() / rs.scale;
        double d = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, (x.values[i] - conv.values[i]).norm());
        recon[j] = d / (1.0 + x.sup_norm());
        if (j == 0) first = std::move(rs);
    });
    const double res = *std::max_element(worst_res.begin(), worst_res.end());
    const double jump = *std::max_element(worst_jump.begin(), worst_jump.end());
    r.summary["ito"] = {{"max_negative_residual_over_scale", res},
                        {"max_jump_contribution_over_scale", jump},
                        {"max_reconstruction_distance", *std::max_element(recon.begin(), recon.end())},
                        {"paths", n}};
    r.check("Theorem 2.1 residual", res, 1e-9, "max over paths and grid of -residual / scale");
    if (sys.p == 2.0 && generator_is_zero(sys))
        r.check("Theorem 2.1 jump equality", jump, 1e-10, "p = 2, A = 0: max |jump contribution| / scale");

    Csv csv({"t", "lhs", "rhs", "residual"});
    for (std::size_t i = 0; i < first.times.size(); ++i)
        csv.row(first.times[i], first.lhs[i], first.rhs[i], first.residual[i]);
    r.files.push_back({"residual.csv", csv.str()});
}

void run_bj(Report& r, const ExperimentConfig& cfg, const SystemSpec& sys) {
    const BichtelerJacodResult bj = bichteler_jacod_check(state_free_jump(sys), sys.dimension(), sys.nu,
                                                          sys.horizon, sys.p, cfg.n_paths, cfg.seed, cfg.grid_points);
    r.summary["bichteler_jacod"] = {{"lhs", estimate_json(bj.lhs)},
                                    {"rhs", estimate_json(bj.rhs())},
                                    {"term1", bj.term1},
                                    {"term2", bj.term2},
                                    {"implied_constant", bj.implied_constant},
                                    {"basis_constant", bj.basis_constant},
                                    {"isometry", bj.isometry},
                                    {"doob_bound", bj.doob_bound}};
    r.check("Theorem 2.3 implied constant finite", std::isfinite(bj.implied_constant) ? 0.0 : 1.0, 0.0);
    if (sys.p == 2.0)
        r.check("Theorem 2.3 Doob isometry bound", bj.lhs.mean() - 3.0 * bj.lhs.standard_error(), bj.doob_bound,
                "E sup |int k dN~|^2 - 3 stderr <= 4 E int |k|^2 dnu ds");
    Csv csv({"quantity", "value", "stderr"});
    csv.row(std::string("lhs"), bj.lhs.mean(), bj.lhs.standard_error());
    csv.row(std::string("term1"), bj.term1, 0.0);
    csv.row(std::string("term2"), bj.term2, 0.0);
    csv.row(std::string("isometry"), bj.isometry, 0.0);
    r.files.push_back({"bj_check.csv", csv.str()});
}

void run_burkholder(Report& r, const ExperimentConfig& cfg, const SystemSpec& sys) {
    if (!sys.semigroup.is_contraction())
        fail(ErrorCode::Config, "eigenvalues: burkholder-check needs a contraction semigroup (growth bound <= 0)");
    const BurkholderResult b = burkholder_ratio(sys.semigroup, sys.nu, state_free_jump(sys), sys.horizon, sys.p,
                                                cfg.n_paths, cfg.seed, cfg.grid_points);
    double ratio_se = 0.0;
    if (b.lhs.mean() > 0.0 && b.rhs.mean() > 0.0) {
        const double a = b.lhs.standard_error() / b.lhs.mean(), c = b.rhs.standard_error() / b.rhs.mean();
        ratio_se = b.ratio * std::sqrt(a * a + c * c);
    }
    r.summary["burkholder"] = {
        {"lhs", estimate_json(b.lhs)}, {"rhs", estimate_json(b.rhs)}, {"ratio", b.ratio}, {"ratio_stderr", ratio_se}};
    r.check("Theorem 2.2 ratio finite", std::isfinite(b.ratio) ? 0.0 : 1.0, 0.0);
    if (sys.p == 2.0 && generator_is_zero(sys))
        r.check("Theorem 2.2 Doob bound", b.ratio - 3.0 * ratio_se, 4.0, "A = 0, p = 2: ratio - 3 stderr <= 4");
    Csv csv({"quantity", "value", "stderr"});
    csv.row(std::string("lhs"), b.lhs.mean(), b.lhs.standard_error());
    csv.row(std::string("rhs"), b.rhs.mean(), b.rhs.standard_error());
    csv.row(std::string("ratio"), b.ratio, ratio_se);
    r.files.push_back({"burkholder.csv", csv.str()});
}

void run_validate(Report& r, const ExperimentConfig& cfg, const SystemSpec& sys) {
    const ValidationReport v = validate_hypothesis(sys, cfg.n_samples, cfg.radius, cfg.seed);
    r.summary["validation"] = {{"declared", constants_json(v.declared)},
                               {"empirical", constants_json(v.empirical)},
                               {"n_samples", v.n_samples},
                               {"radius", v.radius}};
    auto lim = [](double declared) { return declared + 1e-9 * std::abs(declared); };
    r.check("Hypothesis 3.1(a) semimonotone M", v.empirical.M, lim(v.declared.M));
    r.check("Hypothesis 3.1(b) Lipschitz C", v.empirical.C, lim(v.declared.C));
    r.check("Hypothesis 3.1(c) linear growth D", v.empirical.D, lim(v.declared.D));
    r.check("Hypothesis 3.1(d) moment F", v.empirical.F, lim(v.declared.F));
    Csv csv({"constant", "declared", "empirical"});
    csv.row(std::string("M"), v.declared.M, v.empirical.M);
    csv.row(std::string("C"), v.declared.C, v.empirical.C);
    csv.row(std::string("D"), v.declared.D, v.empirical.D);
    csv.row(std::string("F"), v.declared.F, v.empirical.F);
    r.files.push_back({"validation.csv", csv.str()});
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    const SystemSpec sys = cfg.build_system();
    Report r;
    switch (cfg.kind) {
        case ExperimentKind::Simulate: run_simulate(r, cfg, sys); break;
        case ExperimentKind::Picard: run_picard(r, cfg, sys); break;
        case ExperimentKind::Stability: run_stability(r, cfg, sys); break;
        case ExperimentKind::ItoCheck: run_ito(r, cfg, sys); break;
        case ExperimentKind::BjCheck: run_bj(r, cfg, sys); break;
        case ExperimentKind::BurkholderCheck: run_burkholder(r, cfg, sys); break;
        case ExperimentKind::Validate: run_validate(r, cfg, sys); break;
    }

    bool passed = true;
    json failures = json::array();
    for (const auto& c : r.checks) {
        if (!c["passed"].get<bool>()) {
            passed = false;
            failures.push_back(c["name"]);
        }
    }
    json overrides = json::object();
    for (const auto& [k, v] : cfg.overrides) overrides[k] = v;

    json& s = r.summary;
    s["kind"] = kind_name(cfg.kind);
    s["system"] = {{"name", sys.name}, {"dimension", sys.dimension()}, {"p", sys.p}, {"T", sys.horizon},
                   {"overrides", overrides},
                   {"drift", sys.drift->describe()}, {"jump", sys.jump->describe()}};
    s["settings"] = {{"seed", cfg.seed},          {"n_paths", cfg.n_paths},   {"n_iters", cfg.n_iters},
                     {"grid", cfg.grid_points},   {"dt", sys.horizon / double(cfg.grid_points)},
                     {"tol", cfg.tolerance},      {"max_iter", cfg.max_iter}, {"max_halvings", cfg.max_halvings}};
    s["constants"] = constants_json(sys.constants());
    s["checks"] = r.checks;
    s["failed"] = failures;
    s["passed"] = passed;
    s["timestamp"] = utc_timestamp();

    json names = json::array({"summary.json"});
    for (const auto& f : r.files) names.push_back(f.name);
    s["files"] = names;

    ExperimentResult out;
    out.exit_code = passed ? 0 : 2;
    out.summary_json = s.dump(2) + "\n";
    out.files.push_back({"summary.json", out.summary_json});
    for (auto& f : r.files) out.files.push_back(std::move(f));
    return out;
}

void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorCode::Io, "cannot create output directory '" + dir.string() + "': " + ec.message());
    for (const auto& f : result.files) {
        std::ofstream out(dir / f.name, std::ios::binary);
        out << f.contents;
        if (!out) fail(ErrorCode::Io, "cannot write '" + (dir / f.name).string() + "'");
    }
}

}  // namespace levysee
