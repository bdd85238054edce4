/* Copyright 2026 the emse authors
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

#include "emse/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace emse::specfun {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using wide_real = __float128;
#else
using wide_real = long double;
#endif

}  // namespace

int Poly::degree() const {
    if (std::abs(c2) > 0.0) return 2;
    if (std::abs(c1) > 0.0) return 1;
    return 0;
}

double poly_eval(const Poly& p, double s) { return p(s); }

std::optional<Poly> perfect_square_decompose(const Poly& p, double tol) {
    const int deg = p.degree();
    if (deg == 1) {
        throw std::invalid_argument("perfect_square_decompose: degree-1 input is never a square");
    }
    if (deg == 2 && p.c2 < 0.0) {
        throw std::invalid_argument("perfect_square_decompose: negative leading coefficient");
    }
    if (deg == 0 && p.c0 < 0.0) {
        throw std::invalid_argument("perfect_square_decompose: negative constant");
    }

    const double disc = p.c1 * p.c1 - 4.0 * p.c2 * p.c0;
    const double scale = std::max({1.0, p.c1 * p.c1, std::abs(4.0 * p.c2 * p.c0)});
    if (std::abs(disc) > tol * scale) return std::nullopt;

    if (deg == 0) return Poly(std::sqrt(p.c0), 0.0);
    const double q1 = std::sqrt(p.c2);
    return Poly(p.c1 / (2.0 * q1), q1);
}

LaguerreSpec::LaguerreSpec(int n_, double a_, double scale_) : n(n_), a(a_), scale(scale_) {
    if (n < 0) throw std::invalid_argument("LaguerreSpec: n must be non-negative");
    if (!(scale > 0.0)) throw std::invalid_argument("LaguerreSpec: scale must be positive");
}

double LaguerreSpec::operator()(double s) const { return laguerre_eval(n, a, scale * s); }

double laguerre_eval(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_eval: n must be non-negative");
    if (n == 0) return 1.0;
    double lm2 = 1.0;
    double lm1 = 1.0 + a - x;
    for (int k = 2; k <= n; ++k) {
        const double lk = ((2.0 * k - 1.0 + a - x) * lm1 - (k - 1.0 + a) * lm2) / k;
        lm2 = lm1;
        lm1 = lk;
    }
    return lm1;
}

double laguerre_series(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_series: n must be non-negative");
    const wide_real aw = a;
    const wide_real xw = x;
    wide_real sum = 0;
    wide_real xpow_over_kfact = 1;  // x^k / k!
    for (int k = 0; k <= n; ++k) {
        if (k > 0) xpow_over_kfact *= xw / k;
        // binom(n + a, n - k) as a product; no factorials of non-integers
        wide_real binom = 1;
        for (int j = 1; j <= n - k; ++j) {
            binom *= (wide_real(n) + aw - (j - 1)) / j;
        }
        const wide_real term = binom * xpow_over_kfact;
        sum += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(sum);
}

double laguerre_ode_residual(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_ode_residual: n must be non-negative");
    const double y = laguerre_eval(n, a, x);
    const double yp = (n >= 1) ? -laguerre_eval(n - 1, a + 1.0, x) : 0.0;
    const double ypp = (n >= 2) ? laguerre_eval(n - 2, a + 2.0, x) : 0.0;
    return x * ypp + (a + 1.0 - x) * yp + n * y;
}

double inv_factorial(int n) {
    if (n < 0) throw std::invalid_argument("inv_factorial: n must be non-negative");
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r /= k;
    return r;
}

}  // namespace emse::specfun
