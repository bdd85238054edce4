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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emse/pdm_model.hpp"

// Constant-mass generalized Morse problem
//
//   -(hbar^2/2m) psi'' + (V1 e^{-2 alpha* x} - V2 e^{-alpha* x}) psi = E* psi
//
// mapped by s = sqrt(V1) e^{-alpha* x} onto the same reduced equation as the
// position-dependent-mass family, with xi1 = gamma*^2, xi2 = -(V2/sqrt(V1))
// gamma*^2, xi3 = -4 eps*^2, gamma*^2 = 2m/(hbar alpha*)^2 and
// eps*^2 = -m E* / (2 hbar^2 alpha*^2).
//
// Sign convention: eps* >= 0 for bound states, i.e.
// eps*_n = (1/4)[(V2/sqrt(V1)) gamma* - (2n+1)], which corresponds to the
// k = -xi2 - 2D root with D = 2 gamma* eps* >= 0 and makes every
// wavefunction exponent positive and the state normalizable.

namespace emse::morse {

struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MorseModel {
    double v1;
    double v2;
    double alpha_star;
    double mass;
    double hbar = 1.0;

    MorseModel(double v1_, double v2_, double alpha_star_, double mass_, double hbar_ = 1.0);

    double gamma_star() const { return std::sqrt(2.0 * mass) / (hbar * alpha_star); }
    /// V2/sqrt(V1) * gamma*, the well-depth parameter controlling the level count.
    double depth() const { return v2 / std::sqrt(v1) * gamma_star(); }
};

struct MorseLevel {
    int n = 0;
    double eps_star = 0.0;
    double energy = 0.0;  // E* = -2 hbar^2 alpha*^2 eps*^2 / m
    double laguerre_param = 0.0;
    bool normalizable = true;
};

/// Per-level mapping between a Morse problem and an exponential-mass problem
/// under the lambda = gamma* = 1/alpha* = 1 convention: both share the level
/// eps = -B^2 when V0 is retuned per index.
struct PdmCorrespondence {
    double a = 0.0;            // A, from V2/sqrt(V1) = 2A+1
    double b = 0.0;            // B = (sqrt(V1)/V2)(2A+1)
    double pdm_epsilon = 0.0;  // -B^2
    int n = 0;                 // requested Morse index
    double ambiguity_shift = 0.0;  // 4 alpha(alpha+beta+1) + 2 beta + 1

    double v0_at(int k) const {
        const double t = k - a;
        return t * t + ambiguity_shift;
    }
    double e_star_at(int k) const {
        const double t = k - a;
        return -t * t;
    }
};

struct CorrespondenceMatch {
    pdm::Branch branch = pdm::Branch::CaseII;
    int n = 0;
    double energy = 0.0;
    bool normalizable = false;
};

struct CorrespondenceReport {
    bool found = false;  // NoMatch is a finding, not an error
    std::vector<CorrespondenceMatch> matches;
    double wf_power = 0.0;           // s exponent A - n of the mapped wavefunction
    double wf_laguerre_param = 0.0;  // 2(A - n)
    bool wf_normalizable = false;
};

/// Reduced-equation coefficients at a trial eps*.
nu::NUProblem morse_to_nu(const MorseModel& m, double eps_star);

/// eps*_n; throws std::out_of_range when index n is not a bound level.
double eps_star(const MorseModel& m, int n);

/// Levels while (V2/sqrt(V1)) gamma* - (2n+1) > 0, at most max_levels.
std::vector<MorseLevel> spectrum(const MorseModel& m, int max_levels);

/// psi_n(s) = (1/n!) s^{2 eps*} e^{-gamma* s} L_n^{4 eps*}(2 gamma* s).
double wavefunction(const MorseModel& m, int n, double s);

/// Residual of the reduced equation psi'' + psi'/s + (-xi1 s^2 - xi2 s +
/// xi3)/s^2 psi at an explicit eps* (quantized or not).
double ode_residual_at_eps(const MorseModel& m, int n, double eps, double s);
double ode_residual_scale_at_eps(const MorseModel& m, int n, double eps, double s);
double ode_residual(const MorseModel& m, int n, double s);

/// Requires gamma* = 1 (within 1e-12), else ConventionError.
PdmCorrespondence map_morse_to_pdm(const MorseModel& m, const pdm::AmbiguityParams& p, int n);

/// Builds the exponential-mass model (lambda = 1, V0 = V0(n), B, A) and scans
/// both branches for a level with energy equal to -B^2 within 1e-9.
CorrespondenceReport verify_correspondence(const PdmCorrespondence& c,
                                           const pdm::AmbiguityParams& p, int n);

}  // namespace emse::morse
