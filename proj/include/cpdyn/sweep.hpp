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
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cpdyn::sweep {

/// One evaluated grid point of a time sweep.
struct SweepRecord {
    double t;
    double d;
    double a;
    double x0;
    double force;
    double force_reduced;
    std::string regime;  ///< "pre" or "post"; singular points never appear
};

/// A completed sweep: records in ascending t plus the header parameters and
/// the count of grid points skipped inside the singular band.
struct SweepResult {
    double k0 = 1.0;
    double mu = 1.0;
    double guard_band = 1e-3;
    std::vector<SweepRecord> records;
    std::size_t skipped_singular = 0;
};

/// Evaluates the dynamical force on a uniform time grid of `steps` points
/// from t_min to t_max inclusive.  Grid points inside the singular band are
/// skipped and counted.  Points are evaluated concurrently; record order is
/// ascending t regardless of scheduling.
SweepResult evaluate_sweep(double d, double t_min, double t_max, int steps, double k0,
                           double mu, double guard_band);

/// Locale-independent formatting with the given number of significant
/// digits (12 for CSV, 17 for JSON round trips).
std::string format_sig(double v, int digits);

/// CSV with a '#'-prefixed header block (k0, mu, guard_band), the exact
/// column order t,d,a,x0,force,force_reduced,regime, 12 significant digits,
/// '\n' line ends, and a trailing summary line with the skipped count.
std::string to_csv(const SweepResult& r);

/// JSON document with 17-significant-digit numbers (exact double round
/// trip): header fields, "records" array, "skipped_singular" count.
std::string to_json(const SweepResult& r);

/// Runs fn(i) for i in [0, n) on up to `threads` worker threads (0 =
/// hardware concurrency).  Deterministic as long as fn(i) writes only to
/// slot i of preallocated storage.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn,
                        unsigned threads = 0);

}  // namespace cpdyn::sweep
