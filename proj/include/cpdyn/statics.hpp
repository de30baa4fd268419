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

#include <functional>

namespace cpdyn::statics {

/// Inputs for the stationary ground-state atom-wall force.
/// Natural units with c = 1 throughout: lengths in units of 1/k0 when the
/// reduced form is used, dipole moment mu in Gaussian-style units.
struct StaticForceInput {
    double d;         ///< atom-wall distance, > 0
    double k0;        ///< transition wavenumber omega0/c, > 0
    double mu = 1.0;  ///< dipole moment, >= 0

    void validate() const;  ///< throws std::domain_error on violation
};

/// Stationary Casimir-Polder force on a ground-state two-level atom in
/// front of a perfectly conducting wall:
///
///   F(d, k0) = -mu^2/(12 pi d^4) [ 8 k0 d - 6 (2 k0^2 d^2 - 1) f(2 k0 d)
///                                  - 4 k0 d (2 k0^2 d^2 - 3) g(2 k0 d) ]
///
/// Negative for every distance (attraction toward the wall); scales as
/// d^-4 in the near zone (d << 1/k0) and d^-5 in the far zone.
double static_force(const StaticForceInput& in);

/// Dimensionless form F * 12 pi d^4 / mu^2, a function of x0 = 2 k0 d
/// alone.  static_force composes this with the dimensional prefactor.
double static_force_reduced(double x0);

/// Local power-law exponent d(ln|F|)/d(ln d) of `force_fn(d, k0)` at
/// d_center, by central differences with relative step 1e-3.
/// Throws evaluation_error if the force changes sign across the stencil.
double loglog_slope(const std::function<double(double, double)>& force_fn,
                    double d_center, double k0);

}  // namespace cpdyn::statics
