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

#include "levysee/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "levysee/error.hpp"
#include "levysee/quadrature.hpp"

namespace levysee {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double gaussian_normalizer(const TruncatedGaussianMarks& g) {
    return std::erf(g.cutoff / (g.sigma * std::numbers::sqrt2));
}

double gaussian_density(const TruncatedGaussianMarks& g, double x) {
    const double z = x / g.sigma;
    return std::exp(-0.5 * z * z) / (g.sigma * std::sqrt(2.0 * std::numbers::pi) * gaussian_normalizer(g));
}

// ∫_a^b |x|^q dx
double abs_power_integral(double a, double b, double q) {
    auto prim = [q](double x) { return std::pow(std::abs(x), q + 1.0) / (q + 1.0); };
    if (a >= 0.0) return prim(b) - prim(a);
    if (b <= 0.0) return prim(a) - prim(b);
    return prim(a) + prim(b);
}

// Runs `body(x, weight)` over quadrature nodes of the law's density on its
// support, splitting at 0 so kinks in |ξ|^q stay on panel boundaries.
template <typename Body>
void for_each_node(double lower, double upper, const std::function<double(double)>& density, Body&& body) {
    const GaussRule rule = gauss64();
    auto panel = [&](double a, double b) {
        if (b <= a) return;
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = mid + half * rule.nodes[i];
            body(x, rule.weights[i] * half * density(x));
        }
    };
    if (lower < 0.0 && upper > 0.0) {
        panel(lower, 0.0);
        panel(0.0, upper);
    } else {
        panel(lower, upper);
    }
}

}  // namespace

IntensityMeasure::IntensityMeasure(double total_mass, MarkLaw law) : total_mass_(total_mass), law_(std::move(law)) {
    require(std::isfinite(total_mass_) && total_mass_ > 0.0, "IntensityMeasure: total mass must be finite and positive");
    std::visit(Overloaded{
                   [this](AtomMarks& m) {
                       require(!m.atoms.empty() && m.atoms.size() == m.weights.size(),
                               "AtomMarks: need one weight per atom");
                       mark_dim_ = m.atoms.front().size();
                       require(mark_dim_ > 0, "AtomMarks: empty atom");
                       double total = 0.0;
                       for (std::size_t i = 0; i < m.atoms.size(); ++i) {
                           require(m.atoms[i].size() == mark_dim_, "AtomMarks: atoms differ in dimension");
                           require(std::isfinite(m.weights[i]) && m.weights[i] >= 0.0, "AtomMarks: bad weight");
                           for (double c : m.atoms[i]) require(std::isfinite(c), "AtomMarks: non-finite atom");
                           total += m.weights[i];
                       }
                       require(total > 0.0, "AtomMarks: weights sum to zero");
                       for (double& w : m.weights) w /= total;
                   },
                   [](const UniformMarks& m) {
                       require(std::isfinite(m.lower) && std::isfinite(m.upper) && m.lower < m.upper,
                               "UniformMarks: need lower < upper");
                   },
                   [](const TruncatedGaussianMarks& m) {
                       require(m.sigma > 0.0 && m.cutoff > 0.0 && std::isfinite(m.sigma) && std::isfinite(m.cutoff),
                               "TruncatedGaussianMarks: sigma and cutoff must be positive");
                   },
               },
               law_);
}

std::vector<double> IntensityMeasure::sample_mark(double u) const {
    return std::visit(Overloaded{
                          [u](const AtomMarks& m) {
                              double cum = 0.0;
                              for (std::size_t i = 0; i + 1 < m.atoms.size(); ++i) {
                                  cum += m.weights[i];
                                  if (u < cum) return m.atoms[i];
                              }
                              return m.atoms.back();
                          },
                          [u](const UniformMarks& m) {
                              return std::vector<double>{m.lower + (m.upper - m.lower) * u};
                          },
                          [u](const TruncatedGaussianMarks& m) {
                              const double z = boost::math::erf_inv((2.0 * u - 1.0) * gaussian_normalizer(m));
                              return std::vector<double>{m.sigma * std::numbers::sqrt2 * z};
                          },
                      },
                      law_);
}

double IntensityMeasure::moment(double q) const {
    require(q >= 0.0, "IntensityMeasure::moment: q must be nonnegative");
    const double expectation = std::visit(
        Overloaded{
            [q](const AtomMarks& m) {
                double s = 0.0;
                for (std::size_t i = 0; i < m.atoms.size(); ++i) {
                    const double n2 = std::inner_product(m.atoms[i].begin(), m.atoms[i].end(), m.atoms[i].begin(), 0.0);
                    s += m.weights[i] * norm_pow(std::sqrt(n2), q);
                }
                return s;
            },
            [q](const UniformMarks& m) { return abs_power_integral(m.lower, m.upper, q) / (m.upper - m.lower); },
            [q](const TruncatedGaussianMarks& m) {
                const double a = 0.5 * (q + 1.0);
                const double x = m.cutoff * m.cutoff / (2.0 * m.sigma * m.sigma);
                return std::pow(m.sigma, q) * std::pow(2.0, 0.5 * q) * std::tgamma(a) *
                       boost::math::gamma_p(a, x) / (std::sqrt(std::numbers::pi) * gaussian_normalizer(m));
            },
        },
        law_);
    return total_mass_ * expectation;
}

std::vector<double> IntensityMeasure::mean_integral() const {
    return std::visit(Overloaded{
                          [this](const AtomMarks& m) {
                              std::vector<double> mean(mark_dim_, 0.0);
                              for (std::size_t i = 0; i < m.atoms.size(); ++i)
                                  for (std::size_t j = 0; j < mark_dim_; ++j)
                                      mean[j] += total_mass_ * m.weights[i] * m.atoms[i][j];
                              return mean;
                          },
                          [this](const UniformMarks& m) {
                              return std::vector<double>{total_mass_ * 0.5 * (m.lower + m.upper)};
                          },
                          [](const TruncatedGaussianMarks&) { return std::vector<double>{0.0}; },
                      },
                      law_);
}

StateVector IntensityMeasure::integrate(const MarkFunction& g) const {
    return std::visit(Overloaded{
                          [&](const AtomMarks& m) {
                              StateVector acc = g(m.atoms[0]);
                              acc *= m.weights[0];
                              for (std::size_t i = 1; i < m.atoms.size(); ++i) acc.axpy(m.weights[i], g(m.atoms[i]));
                              acc *= total_mass_;
                              return acc;
                          },
                          [&](const UniformMarks& m) {
                              StateVector acc;
                              const double dens = 1.0 / (m.upper - m.lower);
                              for_each_node(m.lower, m.upper, [dens](double) { return dens; }, [&](double x, double w) {
                                  const double mark[1] = {x};
                                  StateVector v = g(mark);
                                  if (acc.empty()) acc = StateVector(v.size());
                                  acc.axpy(w, v);
                              });
                              acc *= total_mass_;
                              return acc;
                          },
                          [&](const TruncatedGaussianMarks& m) {
                              StateVector acc;
                              for_each_node(
                                  -m.cutoff, m.cutoff, [&m](double x) { return gaussian_density(m, x); },
                                  [&](double x, double w) {
                                      const double mark[1] = {x};
                                      StateVector v = g(mark);
                                      if (acc.empty()) acc = StateVector(v.size());
                                      acc.axpy(w, v);
                                  });
                              acc *= total_mass_;
                              return acc;
                          },
                      },
                      law_);
}

double IntensityMeasure::integrate_scalar(const ScalarMarkFunction& g) const {
    StateVector v = integrate([&g](std::span<const double> mark) { return StateVector{g(mark)}; });
    return v[0];
}

}  // namespace levysee
