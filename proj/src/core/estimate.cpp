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

#include "levysee/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "levysee/error.hpp"

namespace levysee {

MonteCarloEstimate MonteCarloEstimate::from_samples(std::span<const double> samples, std::uint64_t seed) {
    MonteCarloEstimate e(seed);
    for (double x : samples) e.add(x);
    return e;
}

MonteCarloEstimate MonteCarloEstimate::exact(double value, std::uint64_t seed) {
    MonteCarloEstimate e(seed);
    e.exact_ = true;
    e.exact_value_ = value;
    e.n_ = 1;
    e.sum_ = value;
    e.sumsq_ = value * value;
    return e;
}

void MonteCarloEstimate::add(double x) noexcept {
    sum_ += x;
    sumsq_ += x * x;
    ++n_;
}

double MonteCarloEstimate::mean() const noexcept {
    if (exact_) return exact_value_;
    return n_ == 0 ? 0.0 : sum_ / double(n_);
}

double MonteCarloEstimate::standard_error() const noexcept {
    if (exact_ || n_ < 2) return 0.0;
    const double n = double(n_);
    const double m = sum_ / n;
    const double var = std::max(0.0, (sumsq_ - n * m * m) / (n - 1.0));
    return std::sqrt(var / n);
}

MonteCarloEstimate merge_estimates(const MonteCarloEstimate& a, const MonteCarloEstimate& b) {
    if (b.n_ == 0) return a;
    if (a.n_ == 0) return b;
    require(a.seed_ == b.seed_, "merge_estimates: estimates from different experiments (seed mismatch)");
    require(!a.exact_ && !b.exact_, "merge_estimates: exact values do not merge");
    MonteCarloEstimate out(a.seed_);
    out.sum_ = a.sum_ + b.sum_;
    out.sumsq_ = a.sumsq_ + b.sumsq_;
    out.n_ = a.n_ + b.n_;
    return out;
}

namespace {

MonteCarloEstimate reduce_range(std::span<const double> s, std::uint64_t seed) {
    if (s.size() <= 8) return MonteCarloEstimate::from_samples(s, seed);
    const std::size_t mid = s.size() / 2;
    return merge_estimates(reduce_range(s.first(mid), seed), reduce_range(s.subspan(mid), seed));
}

}  // namespace

MonteCarloEstimate canonical_reduce(std::span<const double> samples, std::uint64_t seed) {
    return reduce_range(samples, seed);
}

std::size_t worker_count() {
    if (const char* env = std::getenv("LEVYSEE_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace levysee
