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

#pragma once

#include <optional>

namespace emse::specfun {

/// Dense real polynomial of degree <= 2, value c0 + c1*s + c2*s^2.
struct Poly {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    constexpr Poly() = default;
    constexpr Poly(double a0, double a1 = 0.0, double a2 = 0.0) : c0(a0), c1(a1), c2(a2) {}

    /// Index of the highest coefficient with |c| > 0; the zero polynomial has degree 0.
    int degree() const;

    double operator()(double s) const { return c0 + s * (c1 + s * c2); }

    Poly derivative() const { return Poly(c1, 2.0 * c2, 0.0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        return Poly(a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2);
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        return Poly(a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2);
    }
    friend Poly operator*(double t, const Poly& p) {
        return Poly(t * p.c0, t * p.c1, t * p.c2);
    }
    friend Poly operator-(const Poly& p) { return Poly(-p.c0, -p.c1, -p.c2); }
    friend bool operator==(const Poly& a, const Poly& b) = default;
};

double poly_eval(const Poly& p, double s);

/// Linear q with q*q == p, when p is a perfect square within tolerance.
///
/// Accepts degree-2 input with positive leading coefficient or degree-0 input
/// with c0 >= 0; anything else has no real square root and is rejected with
/// std::invalid_argument. The square test is relative:
/// |c1^2 - 4 c2 c0| <= tol * max(1, c1^2, |4 c2 c0|). The returned q has a
/// non-negative leading coefficient.
std::optional<Poly> perfect_square_decompose(const Poly& p, double tol = 1e-9);

/// Generalized Laguerre polynomial L_n^a evaluated by a fixed scale*s argument.
struct LaguerreSpec {
    int n;
    double a;
    double scale;

    LaguerreSpec(int n_, double a_, double scale_);

    double operator()(double s) const;
};

/// L_n^a(x) via the three-term recurrence
///   k L_k = (2k - 1 + a - x) L_{k-1} - (k - 1 + a) L_{k-2},
/// L_0 = 1, L_1 = 1 + a - x. Defined as a polynomial identity for all real a.
double laguerre_eval(int n, double a, double x);

/// Same value through the explicit finite series
///   sum_{k=0..n} (-1)^k binom(n+a, n-k) x^k / k!
/// with the generalized binomials evaluated as products. This is the
/// independent cross-check path; it accumulates in extended precision so that
/// disagreement with laguerre_eval reflects the recurrence path alone.
double laguerre_series(int n, double a, double x);

/// x y'' + (a + 1 - x) y' + n y for y = L_n^a, using the analytic derivative
/// dL_n^a/dx = -L_{n-1}^{a+1}. Zero up to rounding for every n, a.
double laguerre_ode_residual(int n, double a, double x);

/// 1/n!
double inv_factorial(int n);

}  // namespace emse::specfun
