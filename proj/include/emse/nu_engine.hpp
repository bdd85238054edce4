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

#include <stdexcept>
#include <vector>

#include "emse/specfun.hpp"

// Nikiforov-Uvarov reduction for second-order equations of the form
//
//   psi'' + (tau_tilde(s)/s) psi' + (sigma_tilde(s)/s^2) psi = 0
//
// restricted to sigma(s) = s, with deg(tau_tilde) <= 1 and
// deg(sigma_tilde) <= 2. For each parameter k that turns the radicand
//
//   ((sigma' - tau_tilde)/2)^2 - sigma_tilde + k*sigma
//
// into a perfect square, the auxiliary polynomial pi(s) and
// tau = tau_tilde + 2*pi define a candidate reduction; bound-state
// candidates are the ones with tau' < 0. Discrete eigenvalues follow from
// k + pi' = -n tau', and the polynomial part of the wavefunction is a
// generalized Laguerre polynomial in -tau' * s.

namespace emse::nu {

using specfun::LaguerreSpec;
using specfun::Poly;

struct NoRealK : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Radicand stays a square for every k. Cannot arise for sigma(s) = s (the
/// k-condition is a monic quadratic in k); retained for interface
/// completeness.
struct DegenerateSquare : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPhysical : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NUProblem {
    Poly sigma;        // fixed to s
    Poly tau_tilde;    // degree <= 1
    Poly sigma_tilde;  // degree <= 2

    NUProblem(Poly tau_tilde_, Poly sigma_tilde_);
};

struct NUCandidate {
    double k = 0.0;
    Poly pi;            // degree <= 1
    Poly tau;           // tau_tilde + 2*pi
    int k_branch = 0;   // sign of the square-root term in k; 0 for a double root
    int pi_branch = 0;  // sign chosen in pi = u +- q
    bool physical = false;  // tau' < 0 and the radicand is a true square

    double nu_lambda() const { return k + pi.c1; }
};

/// Eigenvalue condition bundle: nu_lambda = k + pi' must match
/// lambda_n = -n tau' (sigma'' = 0 here), so lambda_n(0) = 0 is the ground state.
struct NUQuantization {
    double nu_lambda = 0.0;
    double tau_slope = 0.0;

    explicit NUQuantization(const NUCandidate& c) : nu_lambda(c.nu_lambda()), tau_slope(c.tau.c1) {}
    double lambda_n(int n) const { return -static_cast<double>(n) * tau_slope; }
};

/// psi = phi * y with phi = s^phi_power e^{phi_rate s}, weight
/// rho = s^rho_power e^{rho_rate s}, and y_n = (1/n!) L_n^a(scale*s) where
/// a = rho_power and scale = -rho_rate.
struct FactorizedSolution {
    double phi_power;
    double phi_rate;
    double rho_power;
    double rho_rate;
    LaguerreSpec laguerre;
};

/// All (k, pi, tau) candidates, sorted by (k ascending, pi_branch).
///
/// At most four exist: up to two real k roots of the perfect-square
/// condition (a double root yields two candidates, not four) with two pi
/// branches each. Throws NoRealK when the k-condition has no real roots.
/// When the radicand's leading coefficient is negative no real square root
/// exists for any k; the k roots are still reported, with pi/tau built from
/// the decomposition of the negated radicand and physical forced to false.
std::vector<NUCandidate> enumerate_candidates(const NUProblem& p, double tol = 1e-9);

/// Residual (k + pi') - (-n tau'); zero iff index n is a consistent level.
double quantize(const NUCandidate& c, int n);

FactorizedSolution factorize(const NUCandidate& c, int n);

/// psi_n(s) = (1/n!) s^phi_power e^{phi_rate s} L_n^a(scale*s).
double evaluate_wavefunction(const FactorizedSolution& f, int n, double s);

struct WfDerivs {
    double psi = 0.0;
    double dpsi = 0.0;
    double d2psi = 0.0;
};

/// Value and first two s-derivatives of the factorized wavefunction, using
/// dL_n^a/du = -L_{n-1}^{a+1} and d2L_n^a/du2 = L_{n-2}^{a+2}. Requires s > 0.
WfDerivs evaluate_wavefunction_derivs(const FactorizedSolution& f, int n, double s);

}  // namespace emse::nu
