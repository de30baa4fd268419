/*
 * This file is part of cpdyn
 *
 * Copyright 2026 cpdyn authors
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
#include "cpdyn/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "cpdyn/dynamics.hpp"
#include "cpdyn/errors.hpp"

namespace cpdyn::sweep {

void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn,
                        unsigned threads) {
    if (n == 0) return;
    unsigned hw = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::size_t>(hw, n));
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next(0);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

SweepResult evaluate_sweep(double d, double t_min, double t_max, int steps, double k0,
                           double mu, double guard_band) {
    if (!(t_min < t_max))
        throw std::domain_error("evaluate_sweep: t_min must be < t_max");
    if (steps < 2) throw std::domain_error("evaluate_sweep: steps must be >= 2");

    SweepResult result;
    result.k0 = k0;
    result.mu = mu;
    result.guard_band = guard_band;

    const double dt = (t_max - t_min) / (steps - 1);
    std::vector<std::optional<SweepRecord>> slots(static_cast<std::size_t>(steps));
    parallel_for_index(slots.size(), [&](std::size_t i) {
        const double t = t_min + static_cast<double>(i) * dt;
        const dynamics::AtomWallConfig config(d, t, k0, mu);
        try {
            const auto fr = dynamics::dynamic_force(config, guard_band);
            slots[i] = SweepRecord{
                t,
                d,
                config.a,
                config.x0,
                fr.force,
                fr.force_reduced,
                fr.regime.tag == dynamics::RegimeTag::PreBackReaction ? "pre" : "post"};
        } catch (const singular_band_error&) {
            slots[i] = std::nullopt;
        }
    });

    for (auto& s : slots) {
        if (s)
            result.records.push_back(std::move(*s));
        else
            ++result.skipped_singular;
    }
    return result;
}

std::string format_sig(double v, int digits) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, digits);
    if (ec != std::errc())
        throw std::runtime_error("format_sig: to_chars failed");
    return std::string(buf, p);
}

std::string to_csv(const SweepResult& r) {
    std::string out;
    out += "# k0 = " + format_sig(r.k0, 12) + "\n";
    out += "# mu = " + format_sig(r.mu, 12) + "\n";
    out += "# guard_band = " + format_sig(r.guard_band, 12) + "\n";
    out += "t,d,a,x0,force,force_reduced,regime\n";
    for (const auto& rec : r.records) {
        out += format_sig(rec.t, 12) + "," + format_sig(rec.d, 12) + "," +
               format_sig(rec.a, 12) + "," + format_sig(rec.x0, 12) + "," +
               format_sig(rec.force, 12) + "," + format_sig(rec.force_reduced, 12) +
               "," + rec.regime + "\n";
    }
    out += "# skipped_singular = " + std::to_string(r.skipped_singular) + "\n";
    return out;
}

std::string to_json(const SweepResult& r) {
    std::string out = "{\n";
    out += "  \"k0\": " + format_sig(r.k0, 17) + ",\n";
    out += "  \"mu\": " + format_sig(r.mu, 17) + ",\n";
    out += "  \"guard_band\": " + format_sig(r.guard_band, 17) + ",\n";
    out += "  \"records\": [";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        out += (i == 0 ? "\n" : ",\n");
        out += "    {\"t\": " + format_sig(rec.t, 17) + ", \"d\": " +
               format_sig(rec.d, 17) + ", \"a\": " + format_sig(rec.a, 17) +
               ", \"x0\": " + format_sig(rec.x0, 17) + ", \"force\": " +
               format_sig(rec.force, 17) + ", \"force_reduced\": " +
               format_sig(rec.force_reduced, 17) + ", \"regime\": \"" + rec.regime +
               "\"}";
    }
    out += r.records.empty() ? "],\n" : "\n  ],\n";
    out += "  \"skipped_singular\": " + std::to_string(r.skipped_singular) + "\n";
    out += "}\n";
    return out;
}

}  // namespace cpdyn::sweep
