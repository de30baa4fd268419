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
 *
 * Test-only reference evaluation of Si and Ci: the defining power series,
 * up to 200 terms, summed in compensated double-double arithmetic.  Kept
 * deliberately separate from the library implementation (different term
 * recurrence, no crossover, no rational approximations) so it can serve as
 * an independent oracle on x in (0, ~35].
 */
#pragma once

#include <cmath>

namespace series_oracle {

struct Dd {
    double hi;
    double lo;
};

inline Dd make(double a, double b = 0.0) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd add(Dd a, Dd b) {
    double s = a.hi + b.hi;
    double bb = s - a.hi;
    double err = (a.hi - (s - bb)) + (b.hi - bb) + a.lo + b.lo;
    double hi = s + err;
    return {hi, err - (hi - s)};
}

inline Dd mul(Dd a, Dd b) {
    double p = a.hi * b.hi;
    double e = std::fma(a.hi, b.hi, -p) + a.hi * b.lo + a.lo * b.hi;
    double hi = p + e;
    return {hi, e - (hi - p)};
}

inline Dd div(Dd a, double b) {
    double q1 = a.hi / b;
    double p = q1 * b;
    double r = std::fma(q1, b, -p);
    double q2 = (((a.hi - p) - r) + a.lo) / b;
    double hi = q1 + q2;
    return {hi, q2 - (hi - q1)};
}

// Si(x) = sum_{n>=0} (-1)^n x^(2n+1) / ((2n+1) (2n+1)!), whole summands
// carried through the recurrence
//   s_{n+1} = -s_n * x^2 * (2n+1) / ((2n+2)(2n+3)^2).
inline double si(double x) {
    const Dd x2 = mul(make(x), make(x));
    Dd summand = make(x);
    Dd sum = summand;
    for (int n = 0; n < 200; ++n) {
        const double k = 2.0 * n;
        summand = mul(summand, x2);
        summand = div(summand, -((k + 2.0) * (k + 3.0) * (k + 3.0) / (k + 1.0)));
        sum = add(sum, summand);
        if (std::abs(summand.hi) < 1e-34 * std::abs(sum.hi)) break;
    }
    return sum.hi + sum.lo;
}

// Ci(x) = gamma + ln x + sum_{n>=1} (-1)^n x^(2n) / (2n (2n)!), recurrence
//   c_{n+1} = -c_n * x^2 * 2n / ((2n+1)(2n+2)^2).
inline double ci(double x) {
    const Dd x2 = mul(make(x), make(x));
    Dd summand = div(mul(x2, make(-0.25)), 1.0);  // n = 1: -x^2/4
    Dd sum = summand;
    for (int n = 1; n < 200; ++n) {
        const double k = 2.0 * n;
        summand = mul(summand, x2);
        summand = div(summand, -((k + 1.0) * (k + 2.0) * (k + 2.0) / k));
        sum = add(sum, summand);
        if (std::abs(summand.hi) < 1e-34 * (std::abs(sum.hi) + 1e-300)) break;
    }
    const Dd gamma = make(0.57721566490153286061, -1.3533635637576216e-18);
    const Dd total = add(add(gamma, make(std::log(x))), sum);
    return total.hi + total.lo;
}

}  // namespace series_oracle
