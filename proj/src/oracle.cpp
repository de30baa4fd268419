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
#include "cpdyn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cpdyn/errors.hpp"

namespace cpdyn::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Damping exponent beyond which the integrand is numerically dead:
// exp(-38) ~ 3e-17.
constexpr double kDampingCut = 38.0;

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1] (abscissa, Gauss weight,
// Kronrod weight; zero Gauss weight marks Kronrod-only nodes).
constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

// The quadrature kernel runs in long double throughout.  The m -> 1
// stencil downstream amplifies any non-smooth-in-m rounding of I(m) by
// 1/h^2 ~ 1e8, and the distance stencil of the force oracle amplifies it
// again; 80-bit nodes keep that noise floor harmless.
template <class F>  // F: double -> long double
long double gk15(const F& f, double lo, double hi, long double& err) {
    const double mid = 0.5 * (lo + hi);
    const double halflen = 0.5 * (hi - lo);
    const long double f0 = f(mid);
    long double g7 = kGK15[0][1] * f0;
    long double k15 = kGK15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = halflen * kGK15[i][0];
        const long double fi = f(mid + dx) + f(mid - dx);
        g7 += kGK15[i][1] * fi;
        k15 += kGK15[i][2] * fi;
    }
    g7 *= halflen;
    k15 *= halflen;
    err = std::abs(static_cast<double>(k15 - g7));
    return k15;
}

// The panel layout is a pure function of (omega, x_stop): every chunk gets
// the same pair of Gauss-Kronrod panels, never refined on the fly.  The
// m-stencil downstream differentiates I(m) twice with step 1e-4, so any
// value-dependent refinement decision that flips between stencil points
// would inject ulp-level jumps and be amplified by 1/h^2 ~ 1e8.  The
// Kronrod error estimates are still accumulated and checked afterwards.
template <class F>
double damped_chunk_sum_impl(const F& integrand, double omega, double x_stop,
                             double* err_estimate) {
    const double h = kPi / omega;
    const std::size_t n_chunks = static_cast<std::size_t>(std::ceil(x_stop / h));

    // Fixed summation order keeps every evaluation deterministic.
    long double sum = 0.0L;
    long double err_sum = 0.0L;
    constexpr std::size_t kTail = 16;
    long double tail[kTail];
    std::size_t n_tail = 0;

    for (std::size_t k = 0; k < n_chunks; ++k) {
        const double lo = static_cast<double>(k) * h;
        const double hi = std::min(lo + h, x_stop);
        const double mid = 0.5 * (lo + hi);
        long double e1 = 0.0L, e2 = 0.0L;
        sum += gk15(integrand, lo, mid, e1) + gk15(integrand, mid, hi, e2);
        err_sum += e1 + e2;
        if (n_chunks - k <= kTail) tail[n_tail++] = sum;
    }

    // Iterated averaging of the last partial sums: kills the residual
    // alternation when the cutoff, not the damping, ended the sum, and is
    // the identity once the chunks have decayed.
    for (std::size_t width = n_tail; width > 1; --width)
        for (std::size_t i = 0; i + 1 < width; ++i)
            tail[i] = 0.5L * (tail[i] + tail[i + 1]);

    if (err_estimate) *err_estimate = static_cast<double>(err_sum);
    return static_cast<double>(n_tail > 0 ? tail[0] : sum);
}

}  // namespace

void QuadratureSettings::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
        throw std::domain_error("QuadratureSettings: abs_tol must be finite and > 0");
    if (!std::isfinite(truncation_u_max))
        throw std::domain_error("QuadratureSettings: truncation_u_max must be finite");
    if (regulator_epsilons.size() < 2)
        throw std::domain_error("QuadratureSettings: need at least two regulator epsilons");
    double prev = std::numeric_limits<double>::infinity();
    for (double e : regulator_epsilons) {
        if (!(e > 0.0) || !std::isfinite(e) || !(e < prev))
            throw std::domain_error(
                "QuadratureSettings: regulator_epsilons must be positive, finite and "
                "strictly decreasing");
        prev = e;
    }
    if (!(m_stencil_h > 0.0 && m_stencil_h < 1e-2))
        throw std::domain_error("QuadratureSettings: m_stencil_h must lie in (0, 1e-2)");
    if (!(chunk_omega >= 0.0) || !std::isfinite(chunk_omega))
        throw std::domain_error("QuadratureSettings: chunk_omega must be finite and >= 0");
}

namespace detail {

double damped_chunk_sum(const std::function<double(double)>& integrand, double omega,
                        double x_stop, double* err_estimate) {
    return damped_chunk_sum_impl(
        [&](double x) { return static_cast<long double>(integrand(x)); }, omega, x_stop,
        err_estimate);
}

Extrapolated extrapolate_to_zero(const std::vector<double>& eps,
                                 const std::vector<double>& values) {
    // Neville table evaluated at eps = 0; the magnitude of the final
    // correction serves as the error estimate.
    const std::size_t n = eps.size();
    std::vector<double> t(values);
    double last_correction = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            const double corr = (t[i] - t[i - 1]) * eps[i] / (eps[i - j] - eps[i]);
            if (i == n - 1) last_correction = corr;
            t[i] += corr;
        }
    }
    return {t[n - 1], std::abs(last_correction)};
}

}  // namespace detail

double base_integral(double m, double x0, double a, const QuadratureSettings& settings) {
    settings.validate();
    if (!(m >= 0.9 && m <= 1.1))
        throw std::domain_error("base_integral: m must lie in [0.9, 1.1]");
    if (!(x0 > 0.0) || !std::isfinite(x0))
        throw std::domain_error("base_integral: x0 must be finite and > 0");
    if (!(a >= 0.0) || !std::isfinite(a))
        throw std::domain_error("base_integral: a must be finite and >= 0");
    if (a == 0.0) return 0.0;  // integrand vanishes identically
    if (std::abs(a - m) <= 2.0 * settings.m_stencil_h)
        throw std::domain_error(
            "base_integral: a is too close to m, the integral diverges at a = m");

    // Chunking frequency.  m stays within stencil distance of 1, so using
    // max(1, a) keeps the panel layout identical across the whole m-stencil
    // and the computed I(m) smooth in m.
    const double omega = settings.chunk_omega > 0.0 ? settings.chunk_omega
                                                    : std::max(1.0, a);
    // Automatic cutoff: 1e4 periods of the unit-frequency sine kernel past
    // x0.  This keeps the cutoff independent of a, so the smallest default
    // regulator (5e-4) is always fully damped before it: exp(-0.0005 *
    // 2pi*1e4) ~ 2e-14.  A live cutoff tail would carry a phase a*u_cap
    // that decorrelates across derivative stencils.
    const double u_cap = settings.truncation_u_max > 0.0 ? settings.truncation_u_max
                                                         : x0 + 2.0 * kPi * 1e4;
    if (u_cap <= x0)
        throw std::domain_error("base_integral: truncation_u_max must exceed x0");
    const double x_cap = u_cap - x0;

    std::vector<double> damped;
    damped.reserve(settings.regulator_epsilons.size());
    for (double eps : settings.regulator_epsilons) {
        const double x_stop = std::min(x_cap, kDampingCut / eps);
        // The regulator spread cannot see a cutoff that truncates every
        // damped integral consistently, so bound the first neglected chunk
        // explicitly.
        const double tail_bound =
            (kPi / omega) * std::exp(-eps * x_stop) * 2.0 / u_cap;
        if (!(tail_bound <= 10.0 * settings.abs_tol)) {
            std::ostringstream msg;
            msg << "base_integral(m=" << m << ", x0=" << x0 << ", a=" << a
                << "): truncation_u_max = " << u_cap
                << " cuts the integrand off while the eps = " << eps
                << " regulator is still live (neglected tail bound " << tail_bound
                << ")";
            throw convergence_error(msg.str(), tail_bound);
        }
        // Arguments formed in long double as well: fl(m*x) jitters at
        // ~1e-16 |mx| as m moves across the stencil, which is exactly the
        // kind of non-smoothness the stencil must not see.
        const auto integrand = [=](double x) -> long double {
            const long double u = static_cast<long double>(x) + x0;
            const long double s = std::sin(0.5L * a * u);
            return std::exp(-static_cast<long double>(eps) * x) *
                   std::sin(static_cast<long double>(m) * x) / u * (2.0L * s * s);
        };
        double err_est = 0.0;
        const double J = damped_chunk_sum_impl(integrand, omega, x_stop, &err_est);
        if (!(err_est <= settings.abs_tol)) {
            std::ostringstream msg;
            msg << "base_integral(m=" << m << ", x0=" << x0 << ", a=" << a
                << "): accumulated quadrature error estimate " << err_est
                << " exceeds abs_tol at eps = " << eps;
            throw convergence_error(msg.str(), err_est);
        }
        damped.push_back(J);
    }

    const auto ex = detail::extrapolate_to_zero(settings.regulator_epsilons, damped);
    if (!(ex.spread <= 10.0 * settings.abs_tol)) {
        std::ostringstream msg;
        msg << "base_integral(m=" << m << ", x0=" << x0 << ", a=" << a
            << "): regulator extrapolation spread " << ex.spread << " exceeds "
            << 10.0 * settings.abs_tol
            << " (raise truncation_u_max or refine regulator_epsilons)";
        throw convergence_error(msg.str(), ex.spread);
    }
    return ex.value;
}

double apply_dm(const std::function<double(double)>& integral_fn, double x0, double a,
                double d, double mu, const QuadratureSettings& settings) {
    settings.validate();
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::domain_error("apply_dm: d must be finite and > 0");
    if (!(mu >= 0.0) || !std::isfinite(mu))
        throw std::domain_error("apply_dm: mu must be finite and >= 0");

    const double h = settings.m_stencil_h;
    double v[5];
    try {
        v[0] = integral_fn(1.0 - 2.0 * h);
        v[1] = integral_fn(1.0 - h);
        v[2] = integral_fn(1.0);
        v[3] = integral_fn(1.0 + h);
        v[4] = integral_fn(1.0 + 2.0 * h);
    } catch (const convergence_error& e) {
        std::ostringstream msg;
        msg << "apply_dm at (x0=" << x0 << ", a=" << a << "): " << e.what();
        throw convergence_error(msg.str(), e.spread());
    }

    const double d1 = (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
    const double d2 = (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) /
                      (12.0 * h * h);
    return -mu * mu / (12.0 * kPi * d * d * d) * (2.0 * v[2] - 2.0 * d1 + d2);
}

double energy_shift_quadrature(const dynamics::AtomWallConfig& config,
                               const QuadratureSettings& settings) {
    const auto regime = dynamics::classify_regime(config);
    if (regime.tag == dynamics::RegimeTag::SingularBand)
        throw singular_band_error(
            "energy_shift_quadrature: configuration inside the singular band",
            std::abs(config.a - 1.0));
    const double x0 = config.x0;
    const double a = config.a;
    return apply_dm([&](double m) { return base_integral(m, x0, a, settings); }, x0, a,
                    config.d, config.mu, settings);
}

double central_difference_force(const std::function<double(double)>& energy_of_d,
                                double d, double rel_step) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::domain_error("central_difference_force: d must be finite and > 0");
    if (!(rel_step > 0.0 && rel_step < 1.0))
        throw std::domain_error("central_difference_force: rel_step must lie in (0, 1)");
    const double delta = rel_step * d;
    return -(energy_of_d(d + delta) - energy_of_d(d - delta)) / (2.0 * delta);
}

double force_finite_difference(const dynamics::AtomWallConfig& config,
                               const QuadratureSettings& settings) {
    settings.validate();
    const double delta = 1e-4 * config.d;
    // a and x0 both move with d at fixed t, so the whole stencil must stay
    // clear of the singular band.
    for (double dd : {config.d - delta, config.d, config.d + delta}) {
        const dynamics::AtomWallConfig c(dd, config.t, config.k0, config.mu);
        if (dynamics::classify_regime(c).tag == dynamics::RegimeTag::SingularBand)
            throw evaluation_error(
                "force_finite_difference: d-stencil straddles the singular band");
    }
    QuadratureSettings pinned = settings;
    if (pinned.chunk_omega <= 0.0) pinned.chunk_omega = std::max(1.0, config.a);
    return central_difference_force(
        [&](double dd) {
            const dynamics::AtomWallConfig c(dd, config.t, config.k0, config.mu);
            return energy_shift_quadrature(c, pinned);
        },
        config.d);
}

}  // namespace cpdyn::oracle
