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
#include "cpdyn/statics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cpdyn/errors.hpp"
#include "cpdyn/specfun.hpp"

namespace cpdyn::statics {

void StaticForceInput::validate() const {
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::domain_error("StaticForceInput: d must be finite and > 0");
    if (!(k0 > 0.0) || !std::isfinite(k0))
        throw std::domain_error("StaticForceInput: k0 must be finite and > 0");
    if (!(mu >= 0.0) || !std::isfinite(mu))
        throw std::domain_error("StaticForceInput: mu must be finite and >= 0");
}

double static_force_reduced(double x0) {
    if (!(x0 > 0.0) || !std::isfinite(x0))
        throw std::domain_error("static_force_reduced: x0 must be finite and > 0");
    const double f = specfun::aux_f(x0);
    const double g = specfun::aux_g(x0);
    // In the far zone the three terms cancel almost exactly, leaving the
    // 24/x0 remainder that produces the d^-5 law; f and g carry enough
    // digits that the cancellation is benign in double precision.
    const double bracket =
        4.0 * x0 + (6.0 - 3.0 * x0 * x0) * f + (6.0 * x0 - x0 * x0 * x0) * g;
    return -bracket;
}

double static_force(const StaticForceInput& in) {
    in.validate();
    const double x0 = 2.0 * in.k0 * in.d;
    const double d2 = in.d * in.d;
    return in.mu * in.mu / (12.0 * std::numbers::pi * d2 * d2) * static_force_reduced(x0);
}

double loglog_slope(const std::function<double(double, double)>& force_fn,
                    double d_center, double k0) {
    if (!(d_center > 0.0) || !std::isfinite(d_center))
        throw std::domain_error("loglog_slope: d_center must be finite and > 0");
    const double h = 1e-3 * d_center;
    const double fp = force_fn(d_center + h, k0);
    const double fm = force_fn(d_center - h, k0);
    if (fp == 0.0 || fm == 0.0 || std::signbit(fp) != std::signbit(fm))
        throw evaluation_error("loglog_slope: force changes sign across the stencil");
    return (std::log(std::abs(fp)) - std::log(std::abs(fm))) /
           (std::log(d_center + h) - std::log(d_center - h));
}

}  // namespace cpdyn::statics
