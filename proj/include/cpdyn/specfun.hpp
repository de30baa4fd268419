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

namespace cpdyn::specfun {

/// Evaluation controls for the trigonometric integrals.
///
/// Below `series_asymptotic_crossover` the functions are evaluated from
/// their power series (with compensated double-double accumulation, so the
/// alternating-series cancellation does not eat into the tolerance); at and
/// above it they are assembled from rational approximations of the
/// auxiliary functions f and g.  The rational approximations are only
/// certified for arguments >= 4, so keep the crossover above that.
struct EvalPrecision {
    double target_abs_tol = 1e-13;
    double series_asymptotic_crossover = 20.0;

    /// Throws std::domain_error if a field is out of range.
    void validate() const;
};

/// Sine integral Si(x) = int_0^x sin(u)/u du.
///
/// Defined for any finite x; odd, Si(-x) = -Si(x) holds exactly.
/// Si(x) -> pi/2 as x -> +inf.  Absolute error <= prec.target_abs_tol.
double sine_integral(double x, const EvalPrecision& prec = {});

/// Cosine integral Ci(x) = gamma + ln x + int_0^x (cos u - 1)/u du.
///
/// Requires x > 0 (logarithmic singularity at the origin); callers that
/// need Ci of a possibly negative argument pass |x| and handle the branch
/// term themselves.  Ci(x) -> 0 as x -> +inf.
double cosine_integral(double x, const EvalPrecision& prec = {});

/// Auxiliary function f(z) = Ci(z) sin(z) + [pi/2 - Si(z)] cos(z), z > 0.
///
/// Monotone, 0 < f(z) < pi/2, f(z) ~ 1/z for large z.  Large arguments are
/// evaluated from the rational approximation directly, never by forming
/// pi/2 - Si(z), which loses all significance once Si has saturated.
double aux_f(double z, const EvalPrecision& prec = {});

/// Auxiliary function g(z) = -Ci(z) cos(z) + [pi/2 - Si(z)] sin(z), z > 0.
///
/// g(z) ~ 1/z^2 for large z and diverges like -gamma - ln(z) as z -> 0+.
double aux_g(double z, const EvalPrecision& prec = {});

namespace detail {

// Both evaluation branches, exposed so the crossover consistency can be
// checked from the outside.  Arguments must be positive.
double si_series(double x, const EvalPrecision& prec = {});
double si_asymptotic(double x);
double ci_series(double x, const EvalPrecision& prec = {});
double ci_asymptotic(double x);

// Rational (Chebyshev-Pade) approximations of f and g, certified to
// ~1e-15 relative for z >= 4.
void fg_rational(double z, double& f, double& g);

// Smallest argument for which fg_rational is used by aux_f/aux_g.
inline constexpr double kFgRationalMin = 4.0;

}  // namespace detail

}  // namespace cpdyn::specfun
