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
#include <vector>

#include "cpdyn/dynamics.hpp"

namespace cpdyn::oracle {

/// Controls for the regularized-quadrature validation path.
///
/// The m-integral is only conditionally convergent, so each evaluation is
/// damped by exp(-eps x), integrated chunk by chunk, and the sequence of
/// damped values is extrapolated polynomially to eps = 0 (Abel limit).
struct QuadratureSettings {
    /// Absolute tolerance of one regularized integral.
    double abs_tol = 1e-9;

    /// Upper cutoff in the u = x + x0 variable.  A non-positive value means
    /// "automatic": x0 plus 1e4 oscillation periods of the fastest
    /// component.  Values in (0, x0] are rejected at evaluation time.
    double truncation_u_max = 0.0;

    /// Damping strengths, strictly decreasing.  Six halving steps keep the
    /// extrapolation residual a few orders below abs_tol while the smallest
    /// eps still dies out inside the automatic cutoff.
    std::vector<double> regulator_epsilons = {1.6e-2, 8e-3, 4e-3, 2e-3, 1e-3, 5e-4};

    /// Step of the five-point stencil that realizes the m -> 1 limit.
    double m_stencil_h = 1e-4;

    /// Chunking frequency for the half-period panels.  0 means automatic,
    /// max(1, a).  force_finite_difference pins it across its d-stencil so
    /// the panel layout, and hence the quadrature bias, stays smooth in d.
    double chunk_omega = 0.0;

    void validate() const;  ///< throws std::domain_error on violation
};

/// Abel-regularized value of
///
///   I(m) = int_0^inf sin(mx)/(x + x0) (1 - cos[a (x + x0)]) dx .
///
/// Requires m in [0.9, 1.1] and a away from m (the integral diverges
/// logarithmically at a = m).  Throws convergence_error when the
/// extrapolation spread exceeds 10 * abs_tol.
double base_integral(double m, double x0, double a, const QuadratureSettings& settings);

/// Applies the m-operator -mu^2/(12 pi d^3) [2 - 2 d/dm + d^2/dm^2] at
/// m = 1 to `integral_fn` with five-point central stencils of step
/// m_stencil_h.  x0 and a only annotate convergence diagnostics.
double apply_dm(const std::function<double(double)>& integral_fn, double x0, double a,
                double d, double mu, const QuadratureSettings& settings);

/// Energy shift by quadrature: apply_dm over base_integral.  Validates the
/// closed-form path; roughly a thousand times slower.
double energy_shift_quadrature(const dynamics::AtomWallConfig& config,
                               const QuadratureSettings& settings = {});

/// -dE/dd of an arbitrary energy profile by central differences with step
/// rel_step * d.
double central_difference_force(const std::function<double(double)>& energy_of_d,
                                double d, double rel_step = 1e-4);

/// Force as -d/dd of energy_shift_quadrature at fixed t (both a and x0 move
/// with d).  Throws evaluation_error if the d-stencil straddles the
/// singular band.
double force_finite_difference(const dynamics::AtomWallConfig& config,
                               const QuadratureSettings& settings = {});

namespace detail {

/// Damped oscillatory integral over x in [0, x_stop]: fixed half-period
/// chunks of length pi/omega, two Gauss-Kronrod 7-15 panels per chunk,
/// partial sums polished by iterated averaging of the tail.  The panel
/// layout is a pure function of (omega, x_stop) so evaluations stay smooth
/// across derivative stencils; accumulated Kronrod error estimates are
/// reported through err_estimate.  Deterministic (fixed summation order).
double damped_chunk_sum(const std::function<double(double)>& integrand,
                        double omega, double x_stop, double* err_estimate = nullptr);

/// Neville extrapolation of (eps_i, J_i) to eps = 0.  Returns the value and
/// the spread |last - previous| of the extrapolation table diagonal.
struct Extrapolated {
    double value;
    double spread;
};
Extrapolated extrapolate_to_zero(const std::vector<double>& eps,
                                 const std::vector<double>& values);

}  // namespace detail

}  // namespace cpdyn::oracle
