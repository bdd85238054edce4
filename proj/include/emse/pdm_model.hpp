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
#include <stdexcept>

#include "emse/nu_engine.hpp"

// Position-dependent-mass Schroedinger problem with exponential mass profile
//
//   H = -d/dx( (1/m) d/dx ) + V_eff(x),   m(x) = e^{-2 lambda x},
//   V(x) = V0 e^{2 lambda x} - B(2A+1) e^{lambda x},
//   V_eff = V + (1/2)(beta+1) m''/m^2 - A* m'^2/m^3,
//   A* = alpha(alpha+beta+1) + beta + 1.
//
// The substitution phi = m^eta psi followed by s = e^{-lambda x} yields
//
//   psi'' + ((4 eta - 1)/s) psi' + (-xi1 s^2 - xi2 s + xi3)/s^2 psi = 0
//
// with xi1 = -eps/lambda^2, xi2 = -B(2A+1)/lambda^2 and
// xi3 = 4 eta(eta-1) - [V0/lambda^2 + 2(beta+1) - 4 A*]. The combination
// Q = (2 eta - 1)^2 - xi3 is independent of eta, which makes the spectrum
// eta-invariant, and D = sqrt(xi1 Q) >= 0 by convention. The two k roots of
// the NU square condition are labeled Case I (k = -xi2 + 2D) and Case II
// (k = -xi2 - 2D); when Q = 0 they coincide and the single branch is
// reported as Case II.
//
// Physical-frame normalizability is judged in the norm of the original
// Hamiltonian, integral |phi(x)|^2 dx, which transforms to
// integral |psi(s)|^2 s^{4 eta - 1} ds / lambda.

namespace emse::pdm {

struct NoBoundState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Kinetic-ordering exponents; eta is the free exponent of the psi
/// transformation and drops out of every physical quantity.
struct AmbiguityParams {
    double alpha = 0.0;
    double beta = 0.0;
    double eta = 0.5;

    double a_star() const { return alpha * (alpha + beta + 1.0) + beta + 1.0; }
};

struct ExpMassModel {
    double lambda;  // mass decay rate, > 0
    double v0;
    double b;
    double a;

    ExpMassModel(double lambda_, double v0_, double b_, double a_);
};

struct XiParams {
    double xi1 = 0.0;  // -eps / lambda^2
    double xi2 = 0.0;  // -B(2A+1) / lambda^2
    double xi3 = 0.0;
    double q = 0.0;              // (2 eta - 1)^2 - xi3, eta-free
    std::optional<double> d;     // sqrt(xi1 * q) when xi1 >= 0 and q >= 0
};

enum class Branch { CaseI, CaseII };

struct BoundState {
    int n;
    double energy;
    Branch branch;
    nu::FactorizedSolution wf;
    bool normalizable;
};

double mass_at(const ExpMassModel& m, double x);
double potential_at(const ExpMassModel& m, double x);

/// V + 4 lambda^2 e^{2 lambda x} [(beta+1)/2 - A*]; the correction vanishes
/// identically for (alpha, beta) = (0, -1).
double effective_potential_at(const ExpMassModel& m, const AmbiguityParams& p, double x);

/// Reduced-equation coefficients at a trial energy eps. An absent D is a
/// value state (xi1 < 0 or Q < 0), not an error.
XiParams to_xi(const ExpMassModel& m, const AmbiguityParams& p, double eps);

/// Case I level: eps = -(B^2/lambda^2)(2A+1)^2 [2n+1 - 2 sqrt(Q)]^{-2}.
/// Requires Q >= 0, B(2A+1) > 0 and a positive bracket.
double energy_case1(const ExpMassModel& m, const AmbiguityParams& p, int n);

/// Case II level: eps = -(B^2/lambda^2)(2A+1)^2 [2n+1 + 2 sqrt(Q)]^{-2}.
double energy_case2(const ExpMassModel& m, const AmbiguityParams& p, int n);

/// Bound state at index n on the requested branch: solves the branch energy,
/// runs the NU reduction at that energy and selects the matching candidate.
/// psi_n(s) = (1/n!) s^{1 - 2 eta -+ sqrt(Q)} e^{-sqrt(xi1) s}
///            L_n^{-+2 sqrt(Q)}(2 sqrt(xi1) s), upper signs Case I.
BoundState state(const ExpMassModel& m, const AmbiguityParams& p, int n, Branch branch);

/// Same assembly at an explicit energy (no quantization enforced); used to
/// probe residual sensitivity off the spectrum.
BoundState assemble_state(const ExpMassModel& m, const AmbiguityParams& p, int n, Branch branch,
                          double eps);

/// Residual of the reduced s-space equation
/// psi'' + ((4 eta - 1)/s) psi' + (-xi1 s^2 - xi2 s + xi3)/s^2 psi
/// with analytic derivatives; near zero for valid states.
double residual_s_space(const ExpMassModel& m, const AmbiguityParams& p, const BoundState& st,
                        double s);
/// Magnitude scale |t1| + |t2| + |t3| of the three residual terms.
double residual_s_space_scale(const ExpMassModel& m, const AmbiguityParams& p,
                              const BoundState& st, double s);

/// Residual of the original x-space equation
/// -(1/m) phi'' + (m'/m^2) phi' + (V_eff - eps) phi with phi = m^eta psi(s(x)),
/// assembled independently through the chain rule. Closes the loop from the
/// Hamiltonian to the reduced equation for every eta.
double residual_x_space(const ExpMassModel& m, const AmbiguityParams& p, const BoundState& st,
                        double x);
double residual_x_space_scale(const ExpMassModel& m, const AmbiguityParams& p,
                              const BoundState& st, double x);

}  // namespace emse::pdm
