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
#include "cpdyn/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cpdyn::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kMaxSeriesTerms = 200;

// ---------------------------------------------------------------------
// Double-double helpers (Dekker/Knuth error-free transformations).
//
// The power series of Si and Ci alternate with terms that grow to ~e^x
// before they decay; at the default crossover x = 20 the largest term is
// ~2e6 while the result is O(1), so plain double accumulation would be
// limited to ~1e-10 absolute.  Carrying the error term keeps the series
// branch at ~1e-15 up to the crossover.
// ---------------------------------------------------------------------

struct DD {
    double hi;
    double lo;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_div(DD a, double b) {
    double q1 = a.hi / b;
    DD p = two_prod(q1, b);
    double q2 = (((a.hi - p.hi) - p.lo) + a.lo) / b;
    return quick_two_sum(q1, q2);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline double series_stop(const EvalPrecision& prec) {
    // Stop well below the requested tolerance; the remainder of the
    // alternating series is bounded by the first dropped term.
    return 1e-4 * prec.target_abs_tol;
}

}  // namespace

void EvalPrecision::validate() const {
    if (!(target_abs_tol > 0.0) || !std::isfinite(target_abs_tol))
        throw std::domain_error("EvalPrecision: target_abs_tol must be > 0");
    if (!(series_asymptotic_crossover > 0.0) || !std::isfinite(series_asymptotic_crossover))
        throw std::domain_error("EvalPrecision: series_asymptotic_crossover must be > 0");
}

namespace detail {

double si_series(double x, const EvalPrecision& prec) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    const DD x2 = two_prod(ax, ax);
    DD term = {ax, 0.0};  // x^(2n+1) / (2n+1)!
    DD sum = term;        // n = 0 summand has the extra 1/(2n+1) = 1
    const double stop = series_stop(prec);
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        const double k = 2.0 * n + 2.0;
        term = dd_neg(dd_div(dd_mul(term, x2), k * (k + 1.0)));
        const DD summand = dd_div(term, 2.0 * n + 3.0);
        sum = dd_add(sum, summand);
        if (std::abs(summand.hi) < stop) break;
    }
    const double r = sum.hi + sum.lo;
    return x < 0.0 ? -r : r;
}

double ci_series(double x, const EvalPrecision& prec) {
    const DD x2 = two_prod(x, x);
    DD term = dd_div(dd_neg(x2), 2.0);  // x^(2n)/(2n)! at n = 1
    DD sum = dd_div(term, 2.0);
    const double stop = series_stop(prec);
    for (int n = 1; n < kMaxSeriesTerms; ++n) {
        const double k = 2.0 * n + 1.0;
        term = dd_neg(dd_div(dd_mul(term, x2), k * (k + 1.0)));
        const DD summand = dd_div(term, 2.0 * (n + 1.0));
        sum = dd_add(sum, summand);
        if (std::abs(summand.hi) < stop) break;
    }
    return kEulerGamma + std::log(x) + (sum.hi + sum.lo);
}

// Chebyshev-Pade approximations in y = 1/z^2 of the auxiliary functions,
// relative error below 1e-15 for z >= 4 (coefficients as published on the
// trigonometric-integral reference pages; re-verified here against a
// 30-digit evaluation).
void fg_rational(double z, double& f, double& g) {
    const double y = 1.0 / (z * z);
    const double fn =
        1.0 +
        y * (7.44437068161936700618e2 +
             y * (1.96396372895146869801e5 +
                  y * (2.37750310125431834034e7 +
                       y * (1.43073403821274636888e9 +
                            y * (4.33736238870432522765e10 +
                                 y * (6.40533830574022022911e11 +
                                      y * (4.20968180571076940208e12 +
                                           y * (1.00795182980368574617e13 +
                                                y * (4.94816688199951963482e12 +
                                                     y * (-4.94701168645415959931e11))))))))));
    const double fd =
        1.0 +
        y * (7.46437068161927678031e2 +
             y * (1.97865247031583951450e5 +
                  y * (2.41535670165126845144e7 +
                       y * (1.47478952192985464958e9 +
                            y * (4.58595115847765779830e10 +
                                 y * (7.08501308149515401563e11 +
                                      y * (5.06084464593475076774e12 +
                                           y * (1.43468549171581016479e13 +
                                                y * (1.11535493509914254097e13)))))))));
    const double gn =
        1.0 +
        y * (8.1359520115168615e2 +
             y * (2.35239181626478200e5 +
                  y * (3.12557570795778731e7 +
                       y * (2.06297595146763354e9 +
                            y * (6.83052205423625007e10 +
                                 y * (1.09049528450362786e12 +
                                      y * (7.57664583257834349e12 +
                                           y * (1.81004487464664575e13 +
                                                y * (6.43291613143049485e12 +
                                                     y * (-1.36517137670871689e12))))))))));
    const double gd =
        1.0 +
        y * (8.19595201151451564e2 +
             y * (2.40036752835578777e5 +
                  y * (3.26026661647090822e7 +
                       y * (2.23355543278099360e9 +
                            y * (7.87465017341829930e10 +
                                 y * (1.39866710696414565e12 +
                                      y * (1.17164723371736605e13 +
                                           y * (4.01839087307656620e13 +
                                                y * (3.99653257887490811e13)))))))));
    f = fn / (z * fd);
    g = y * gn / gd;
}

double si_asymptotic(double x) {
    double f, g;
    fg_rational(x, f, g);
    return std::numbers::pi / 2 - f * std::cos(x) - g * std::sin(x);
}

double ci_asymptotic(double x) {
    double f, g;
    fg_rational(x, f, g);
    return f * std::sin(x) - g * std::cos(x);
}

}  // namespace detail

double sine_integral(double x, const EvalPrecision& prec) {
    prec.validate();
    if (!std::isfinite(x))
        throw std::domain_error("sine_integral: argument must be finite");
    const double ax = std::abs(x);
    const double r = ax < prec.series_asymptotic_crossover ? detail::si_series(ax, prec)
                                                           : detail::si_asymptotic(ax);
    return x < 0.0 ? -r : r;
}

double cosine_integral(double x, const EvalPrecision& prec) {
    prec.validate();
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("cosine_integral: argument must be finite and > 0, got " +
                                std::to_string(x));
    return x < prec.series_asymptotic_crossover ? detail::ci_series(x, prec)
                                                : detail::ci_asymptotic(x);
}

double aux_f(double z, const EvalPrecision& prec) {
    prec.validate();
    if (!std::isfinite(z) || z <= 0.0)
        throw std::domain_error("aux_f: argument must be finite and > 0, got " +
                                std::to_string(z));
    if (z >= detail::kFgRationalMin) {
        double f, g;
        detail::fg_rational(z, f, g);
        return f;
    }
    return cosine_integral(z, prec) * std::sin(z) +
           (std::numbers::pi / 2 - sine_integral(z, prec)) * std::cos(z);
}

double aux_g(double z, const EvalPrecision& prec) {
    prec.validate();
    if (!std::isfinite(z) || z <= 0.0)
        throw std::domain_error("aux_g: argument must be finite and > 0, got " +
                                std::to_string(z));
    if (z >= detail::kFgRationalMin) {
        double f, g;
        detail::fg_rational(z, f, g);
        return g;
    }
    return -cosine_integral(z, prec) * std::cos(z) +
           (std::numbers::pi / 2 - sine_integral(z, prec)) * std::sin(z);
}

}  // namespace cpdyn::specfun
