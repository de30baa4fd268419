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
#include "cpdyn/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cpdyn/errors.hpp"
#include "cpdyn/specfun.hpp"

namespace cpdyn::dynamics {

namespace {

constexpr double kPi = std::numbers::pi;

void check_guard_band(double guard_band) {
    if (!(guard_band > 0.0 && guard_band < 0.5))
        throw std::domain_error("guard_band must lie in (0, 0.5)");
}

[[noreturn]] void throw_singular(const AtomWallConfig& c) {
    std::ostringstream msg;
    msg << "configuration is inside the singular guard band: t = " << c.t
        << " is too close to the back-reaction time 2d/c = " << 2.0 * c.d
        << " (|a - 1| = " << std::abs(c.a - 1.0) << ")";
    throw singular_band_error(msg.str(), std::abs(c.a - 1.0));
}

}  // namespace

AtomWallConfig::AtomWallConfig(double d_, double t_, double k0_, double mu_)
    : d(d_), t(t_), k0(k0_), mu(mu_), x0(2.0 * k0_ * d_), a(t_ / (2.0 * d_)) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::domain_error("AtomWallConfig: d must be finite and > 0");
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::domain_error("AtomWallConfig: t must be finite and >= 0");
    if (!(k0 > 0.0) || !std::isfinite(k0))
        throw std::domain_error("AtomWallConfig: k0 must be finite and > 0");
    if (!(mu >= 0.0) || !std::isfinite(mu))
        throw std::domain_error("AtomWallConfig: mu must be finite and >= 0");
}

Regime classify_regime(const AtomWallConfig& config, double guard_band) {
    check_guard_band(guard_band);
    if (config.a < 1.0 - guard_band) return {RegimeTag::PreBackReaction, 0};
    if (config.a > 1.0 + guard_band) return {RegimeTag::PostBackReaction, 1};
    return {RegimeTag::SingularBand, -1};
}

namespace detail {

double dynamic_force_reduced(double x0, double a, int l) {
    const double ax0 = a * x0;
    const double a2 = a * a;
    const double one_m_a2 = (1.0 - a) * (1.0 + a);
    const double denom2 = one_m_a2 * one_m_a2;

    // 8 k0 d and the cos rational term combined over the common denominator:
    //   4 x0 + 2 x0 (a^2 - 2) cos(a x0) / (a^2 - 1)^2
    //     = 2 x0 [ a^2 (2 a^2 - 3) - 2 (a^2 - 2) sin^2(a x0 / 2) ] / (a^2 - 1)^2
    // The right-hand side is O(a^2) near a = 0, where the two raw terms are
    // +-4 x0 and cancel.
    const double sh = std::sin(0.5 * ax0);
    const double head = 2.0 * x0 * (a2 * (2.0 * a2 - 3.0) - 2.0 * (a2 - 2.0) * sh * sh) / denom2;

    const double x02 = x0 * x0;
    const double poly =
        (x02 - 18.0) - 2.0 * a2 * (x02 - 8.0) + a2 * a2 * (x02 - 6.0);
    const double sin_term = -a * std::sin(ax0) * poly / (denom2 * one_m_a2);

    const double p = (1.0 + a) * x0;  // k0 (2d + ct)
    const double q = (1.0 - a) * x0;  // k0 (2d - ct), signed

    const double ci_comb = specfun::cosine_integral(p) -
                           2.0 * specfun::cosine_integral(x0) +
                           specfun::cosine_integral(std::abs(q));
    const double si_comb = specfun::sine_integral(p) -
                           2.0 * specfun::sine_integral(x0) +
                           specfun::sine_integral(q) + l * kPi;

    const double cos_x0 = std::cos(x0);
    const double sin_x0 = std::sin(x0);
    const double ci_coef = 0.5 * (x0 * (6.0 - x02) * cos_x0 - 3.0 * (2.0 - x02) * sin_x0);
    const double si_coef = 0.5 * (3.0 * (2.0 - x02) * cos_x0 + x0 * (6.0 - x02) * sin_x0);

    return -(head + sin_term + ci_comb * ci_coef + si_comb * si_coef);
}

double m_integral_reduced(double m, double x0, double a) {
    if (a == 0.0) return 0.0;
    const double p = (m + a) * x0;
    const double q = (m - a) * x0;
    const double r = m * x0;
    const int l = a > m ? 1 : 0;
    const double A = 0.5 * (specfun::sine_integral(p) + specfun::sine_integral(q)) -
                     specfun::sine_integral(r) + 0.5 * l * kPi;
    const double B = 0.5 * (specfun::cosine_integral(p) +
                            specfun::cosine_integral(std::abs(q))) -
                     specfun::cosine_integral(r);
    return std::cos(r) * A - std::sin(r) * B;
}

double energy_combination_reduced(double x0, double a, int l) {
    if (a == 0.0) return 0.0;  // the 1 - cos factor vanishes identically

    const double p = (1.0 + a) * x0;
    const double q = (1.0 - a) * x0;  // signed; |1 - a| > guard keeps it away from 0
    const double r = x0;

    const auto sinc = [](double z) { return std::sin(z) / z; };
    const auto cosc = [](double z) { return std::cos(z) / z; };
    const auto dsinc = [](double z) { return (std::cos(z) - std::sin(z) / z) / z; };
    const auto dcosc = [](double z) { return (-std::sin(z) - std::cos(z) / z) / z; };

    const double si_p = specfun::sine_integral(p);
    const double si_q = specfun::sine_integral(q);
    const double si_r = specfun::sine_integral(r);
    const double ci_p = specfun::cosine_integral(p);
    const double ci_q = specfun::cosine_integral(std::abs(q));
    const double ci_r = specfun::cosine_integral(r);

    // Tail combinations of the m-integral and their first two m-derivatives
    // at m = 1 (every argument p, q, r shifts by x0 per unit of m; the
    // even/odd symmetries of sinc and cos(z)/z make the signed q forms
    // valid on both sides of the back-reaction time).
    const double A = 0.5 * (si_p + si_q) - si_r + 0.5 * l * kPi;
    const double B = 0.5 * (ci_p + ci_q) - ci_r;
    const double A1 = x0 * (0.5 * (sinc(p) + sinc(q)) - sinc(r));
    const double B1 = x0 * (0.5 * (cosc(p) + cosc(q)) - cosc(r));
    const double A2 = x0 * x0 * (0.5 * (dsinc(p) + dsinc(q)) - dsinc(r));
    const double B2 = x0 * x0 * (0.5 * (dcosc(p) + dcosc(q)) - dcosc(r));

    const double cr = std::cos(r);
    const double sr = std::sin(r);

    const double I0 = cr * A - sr * B;
    const double I1 = -x0 * (sr * A + cr * B) + cr * A1 - sr * B1;
    const double I2 = x0 * x0 * (-cr * A + sr * B) - 2.0 * x0 * (sr * A1 + cr * B1) +
                      cr * A2 - sr * B2;

    return 2.0 * I0 - 2.0 * I1 + I2;
}

}  // namespace detail

ForceResult dynamic_force(const AtomWallConfig& config, double guard_band) {
    const Regime regime = classify_regime(config, guard_band);
    if (regime.tag == RegimeTag::SingularBand) throw_singular(config);

    const double reduced = detail::dynamic_force_reduced(config.x0, config.a, regime.l);
    const double d2 = config.d * config.d;
    const double scale = config.mu * config.mu / (12.0 * kPi * d2 * d2);
    return {reduced * scale, reduced, regime, config};
}

double energy_shift_closed(const AtomWallConfig& config, double guard_band) {
    const Regime regime = classify_regime(config, guard_band);
    if (regime.tag == RegimeTag::SingularBand) throw_singular(config);

    const double combo = detail::energy_combination_reduced(config.x0, config.a, regime.l);
    return -config.mu * config.mu / (12.0 * kPi * config.d * config.d * config.d) * combo;
}

}  // namespace cpdyn::dynamics
