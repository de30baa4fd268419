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

#include <stdexcept>
#include <string>

namespace cpdyn {

/// Thrown when an evaluation is requested inside the guard band around the
/// back-reaction time t = 2d/c, where the closed-form force diverges.
/// Carries |a - 1| of the offending configuration.
class singular_band_error : public std::domain_error {
  public:
    singular_band_error(const std::string& what, double distance)
        : std::domain_error(what), distance_(distance) {}

    double distance() const noexcept { return distance_; }

  private:
    double distance_;
};

/// Quadrature or extrapolation failed to reach the requested tolerance.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, double spread)
        : std::runtime_error(what), spread_(spread) {}

    /// Error estimate that exceeded the acceptance threshold.
    double spread() const noexcept { return spread_; }

  private:
    double spread_;
};

/// A numerical operation cannot proceed on the given data (sign change
/// across a stencil, stencil straddling the singular band, ...).
class evaluation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace cpdyn
