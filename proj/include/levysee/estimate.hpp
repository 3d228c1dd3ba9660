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
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace levysee {

/// Monte Carlo estimate backed by (sum, sum of squares, count). Merging adds
/// the triples, so it is associative up to floating-point reassociation.
class MonteCarloEstimate {
public:
    MonteCarloEstimate() = default;
    explicit MonteCarloEstimate(std::uint64_t seed) : seed_(seed) {}

    static MonteCarloEstimate from_samples(std::span<const double> samples, std::uint64_t seed);
    /// An exactly known value (stderr 0) reported in estimate form.
    static MonteCarloEstimate exact(double value, std::uint64_t seed);

    void add(double x) noexcept;

    double mean() const noexcept;
    /// sample standard deviation / sqrt(n); 0 for n < 2.
    double standard_error() const noexcept;
    std::size_t n() const noexcept { return n_; }
    std::uint64_t seed() const noexcept { return seed_; }
    double sum() const noexcept { return sum_; }
    double sum_squares() const noexcept { return sumsq_; }

    /// Throws unless both sides carry the same seed; an empty side is the identity.
    friend MonteCarloEstimate merge_estimates(const MonteCarloEstimate& a, const MonteCarloEstimate& b);

private:
    double sum_ = 0.0;
    double sumsq_ = 0.0;
    std::size_t n_ = 0;
    std::uint64_t seed_ = 0;
    bool exact_ = false;
    double exact_value_ = 0.0;
};

MonteCarloEstimate merge_estimates(const MonteCarloEstimate& a, const MonteCarloEstimate& b);

/// Pairwise reduction over index ranges split at the midpoint. The tree shape
/// depends only on samples.size(), never on the worker count.
MonteCarloEstimate canonical_reduce(std::span<const double> samples, std::uint64_t seed);

/// Worker count from LEVYSEE_WORKERS (default: hardware concurrency).
std::size_t worker_count();

/// Calls body(i) for i in [0, n) on worker_count() threads. Each index is
/// handled exactly once; results must be written to per-index slots. The
/// first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace levysee
