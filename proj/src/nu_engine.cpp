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

#include "emse/nu_engine.hpp"

#include <algorithm>
#include <cmath>

namespace emse::nu {

NUProblem::NUProblem(Poly tau_tilde_, Poly sigma_tilde_)
    : sigma(0.0, 1.0, 0.0), tau_tilde(tau_tilde_), sigma_tilde(sigma_tilde_) {
    if (tau_tilde.degree() > 1) {
        throw std::invalid_argument("NUProblem: tau_tilde must have degree <= 1");
    }
}

std::vector<NUCandidate> enumerate_candidates(const NUProblem& p, double tol) {
    if (!(p.sigma == Poly(0.0, 1.0, 0.0))) {
        throw std::invalid_argument("enumerate_candidates: engine requires sigma(s) = s");
    }

    // u(s) = (sigma' - tau_tilde)/2; radicand R(s;k) = u^2 - sigma_tilde + k s
    const double u0 = (1.0 - p.tau_tilde.c0) / 2.0;
    const double u1 = -p.tau_tilde.c1 / 2.0;
    const Poly u(u0, u1);

    const double r2 = u1 * u1 - p.sigma_tilde.c2;
    const double r0 = u0 * u0 - p.sigma_tilde.c0;
    const double c = 2.0 * u0 * u1 - p.sigma_tilde.c1;  // R's linear coefficient is k + c

    const double s2 = std::max(1.0, std::abs(u1 * u1) + std::abs(p.sigma_tilde.c2));
    const double s0 = std::max(1.0, std::abs(u0 * u0) + std::abs(p.sigma_tilde.c0));
    const bool r2_zero = std::abs(r2) <= tol * s2;

    // Real k roots of the perfect-square condition (k + c)^2 = 4 r2 r0.
    std::vector<std::pair<double, int>> kroots;  // (k, branch sign)
    if (r2_zero) {
        // R degenerates to (k + c) s + r0; a square only at the double root.
        kroots.emplace_back(-c, 0);
    } else {
        const double prod = r2 * r0;
        if (prod < -tol * s2 * s0) {
            throw NoRealK("enumerate_candidates: perfect-square condition has no real k roots");
        }
        const double t = std::sqrt(std::max(prod, 0.0));
        if (2.0 * t <= tol * std::max(1.0, std::abs(c))) {
            kroots.emplace_back(-c, 0);
        } else {
            kroots.emplace_back(-c - 2.0 * t, -1);
            kroots.emplace_back(-c + 2.0 * t, +1);
        }
    }

    const bool real_square = r2_zero ? (r0 >= -tol * s0) : (r2 > 0.0);

    // clamp coefficients that are zero within tolerance so the square
    // decomposition sees the intended degree
    const double rr2 = r2_zero ? 0.0 : r2;
    const double rr0 = (r2_zero && real_square && r0 < 0.0) ? 0.0 : r0;

    std::vector<NUCandidate> out;
    out.reserve(2 * kroots.size());
    for (const auto& [k, kb] : kroots) {
        Poly radicand(rr0, k + c, rr2);
        if (!real_square) radicand = -radicand;
        auto q = perfect_square_decompose(radicand, std::max(tol, 1e-12));
        if (!q) {
            throw std::logic_error("enumerate_candidates: radicand failed its own square condition");
        }
        for (int pb : {-1, +1}) {
            NUCandidate cand;
            cand.k = k;
            cand.pi = u + static_cast<double>(pb) * (*q);
            cand.tau = p.tau_tilde + 2.0 * cand.pi;
            cand.k_branch = kb;
            cand.pi_branch = pb;
            cand.physical = real_square && (cand.tau.c1 < 0.0);
            out.push_back(cand);
        }
    }

    std::sort(out.begin(), out.end(), [](const NUCandidate& a, const NUCandidate& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.pi_branch < b.pi_branch;
    });
    return out;
}

double quantize(const NUCandidate& c, int n) {
    if (n < 0) throw std::invalid_argument("quantize: n must be non-negative");
    if (!c.physical) throw NotPhysical("quantize: candidate has tau' >= 0");
    const NUQuantization qz(c);
    return qz.nu_lambda - qz.lambda_n(n);
}

FactorizedSolution factorize(const NUCandidate& c, int n) {
    if (n < 0) throw std::invalid_argument("factorize: n must be non-negative");
    if (!c.physical) throw NotPhysical("factorize: candidate has tau' >= 0");
    // phi'/phi = pi/s  ->  phi = s^{pi(0)} e^{pi' s}
    // (s rho)' = tau rho  ->  rho = s^{tau(0)-1} e^{tau' s}
    const double a = c.tau.c0 - 1.0;
    const double scale = -c.tau.c1;
    return FactorizedSolution{c.pi.c0, c.pi.c1, a, c.tau.c1, LaguerreSpec(n, a, scale)};
}

double evaluate_wavefunction(const FactorizedSolution& f, int n, double s) {
    double powterm;
    if (s > 0.0) {
        powterm = std::pow(s, f.phi_power);
    } else {
        const double r = std::round(f.phi_power);
        if (std::abs(f.phi_power - r) > 1e-12) {
            throw std::domain_error("evaluate_wavefunction: s <= 0 with non-integer power");
        }
        if (s == 0.0 && r < 0.0) {
            throw std::domain_error("evaluate_wavefunction: s = 0 with negative power");
        }
        powterm = std::pow(s, r);
    }
    const double y = specfun::laguerre_eval(n, f.laguerre.a, f.laguerre.scale * s);
    return specfun::inv_factorial(n) * powterm * std::exp(f.phi_rate * s) * y;
}

WfDerivs evaluate_wavefunction_derivs(const FactorizedSolution& f, int n, double s) {
    if (!(s > 0.0)) throw std::domain_error("evaluate_wavefunction_derivs: requires s > 0");
    const double p = f.phi_power;
    const double g = f.phi_rate;
    const double cs = f.laguerre.scale;
    const double a = f.laguerre.a;
    const double u = cs * s;

    const double L = specfun::laguerre_eval(n, a, u);
    const double L1 = (n >= 1) ? -specfun::laguerre_eval(n - 1, a + 1.0, u) : 0.0;
    const double L2 = (n >= 2) ? specfun::laguerre_eval(n - 2, a + 2.0, u) : 0.0;

    const double bn = specfun::inv_factorial(n);
    const double e = std::exp(g * s);
    const double sp = std::pow(s, p);
    const double spm1 = sp / s;
    const double spm2 = spm1 / s;

    WfDerivs d;
    d.psi = bn * e * sp * L;
    d.dpsi = bn * e * ((p * spm1 + g * sp) * L + sp * cs * L1);
    d.d2psi = bn * e * ((p * (p - 1.0) * spm2 + 2.0 * p * g * spm1 + g * g * sp) * L +
                        (2.0 * p * spm1 + 2.0 * g * sp) * cs * L1 + sp * cs * cs * L2);
    return d;
}

}  // namespace emse::nu
