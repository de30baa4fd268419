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

namespace cpdyn::dynamics {

/// Width of the exclusion window around a = 1 (t = 2d/c) inside which no
/// force value is reported.  The divergence there is physical to the model,
/// so configurations in the band are refused, never clamped.
inline constexpr double kDefaultGuardBand = 1e-3;

/// One atom-wall configuration in natural units (c = 1).
///
/// The derived dimensionless quantities x0 = 2 k0 d and a = c t/(2 d) are
/// fixed at construction; everything downstream is a function of them plus
/// the dimensional prefactors in mu and d.
struct AtomWallConfig {
    double d;   ///< wall distance, > 0
    double t;   ///< elapsed time since the bare state was prepared, >= 0
    double k0;  ///< transition wavenumber, > 0
    double mu;  ///< dipole moment, >= 0
    double x0;  ///< 2 k0 d
    double a;   ///< c t / (2 d)

    AtomWallConfig(double d, double t, double k0, double mu = 1.0);
};

enum class RegimeTag {
    PreBackReaction,   ///< a < 1 - guard_band, before the round trip
    PostBackReaction,  ///< a > 1 + guard_band, after the round trip
    SingularBand,      ///< |a - 1| <= guard_band, no value reported
};

struct Regime {
    RegimeTag tag;
    int l;  ///< branch index of the Si combination: 0 pre, 1 post, -1 in band
};

/// ct/(2d) against the guard band.  guard_band must lie in (0, 0.5).
Regime classify_regime(const AtomWallConfig& config,
                       double guard_band = kDefaultGuardBand);

struct ForceResult {
    double force;          ///< signed force; negative = attraction to the wall
    double force_reduced;  ///< force * 12 pi d^4 / mu^2, function of (x0, a)
    Regime regime;
    AtomWallConfig config;
};

/// Time-dependent Casimir-Polder force on an initially bare ground-state
/// atom, closed form:
///
///   F(d,t,k0) = -mu^2/(12 pi d^4) [ 8 k0 d
///       + 16 d^3 k0 (t^2 - 8 d^2) cos(k0 t) / (t^2 - 4 d^2)^2
///       - 4 d t sin(k0 t) [16 d^4 (2 k0^2 d^2 - 9) - 16 t^2 d^2 (k0^2 d^2 - 2)
///                          + t^4 (2 k0^2 d^2 - 3)] / (4 d^2 - t^2)^3
///       + {Ci[k0(2d+t)] - 2 Ci(2k0d) + Ci[k0|2d-t|]} *
///             [2 k0 d cos(2k0d)(3 - 2k0^2d^2) - 3 (1 - 2k0^2d^2) sin(2k0d)]
///       + {Si[k0(2d+t)] - 2 Si(2k0d) + Si[k0(2d-t)] + l pi} *
///             [3 (1 - 2k0^2d^2) cos(2k0d) + 2 k0 d (3 - 2k0^2d^2) sin(2k0d)] ]
///
/// with l = 0 before and l = 1 after the back-reaction time.  The Si of the
/// signed argument k0(2d - t) and the Ci of its absolute value are taken
/// exactly as written; no other branch handling is introduced.
///
/// Vanishes identically at t = 0 and approaches the stationary force as
/// t -> infinity.  Throws singular_band_error inside the guard band and
/// std::domain_error on invalid input.
ForceResult dynamic_force(const AtomWallConfig& config,
                          double guard_band = kDefaultGuardBand);

/// Time-dependent interaction energy shift, obtained by reducing the
/// compact integral form
///
///   Delta E = lim_{m->1} -mu^2/(12 pi d^3) [2 - 2 d/dm + d^2/dm^2]
///             int_0^inf sin(mx)/(x + x0) (1 - cos[a (x + x0)]) dx
///
/// to Si/Ci combinations and applying the m-operator analytically (chain
/// rule through Si'(z) = sin(z)/z and Ci'(z) = cos(z)/z), so this path
/// shares no stencil with the quadrature oracle.  dynamic_force equals
/// -d(Delta E)/dd at fixed t.
double energy_shift_closed(const AtomWallConfig& config,
                           double guard_band = kDefaultGuardBand);

namespace detail {

/// Reduced (dimensionless) dynamical force, a function of x0 = 2 k0 d,
/// a = t/(2d) and the branch index l only.
double dynamic_force_reduced(double x0, double a, int l);

/// Reduced energy combination 2 I - 2 I' + I'' of the m-integral at m = 1;
/// energy_shift_closed multiplies it by -mu^2/(12 pi d^3).
double energy_combination_reduced(double x0, double a, int l);

/// Si/Ci reduction of the m-integral itself,
///
///   I(m) = int_0^inf sin(mx)/(x + x0) (1 - cos[a (x + x0)]) dx
///        = cos(mx0) { [Si((m+a)x0) + Si((m-a)x0)]/2 - Si(mx0) + l pi/2 }
///        - sin(mx0) { [Ci((m+a)x0) + Ci(|m-a|x0)]/2 - Ci(mx0) }
///
/// with l = 1 for a > m, else 0.  The quadrature oracle is checked
/// against this.
double m_integral_reduced(double m, double x0, double a);

}  // namespace detail

}  // namespace cpdyn::dynamics
