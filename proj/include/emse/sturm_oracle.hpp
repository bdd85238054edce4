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

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

// Independent finite-difference verification of the closed-form spectra.
//
// Self-adjoint operators -d/dx(w(x) d/dx) + V(x) are discretized with the
// symmetric 3-point stencil (w at half nodes, Dirichlet boundaries) and the
// lowest eigenvalues extracted by bisection on Sturm-sequence counts. The
// oracle consumes only mass profiles, potentials and reduced-equation
// coefficients; it never touches a closed-form energy, so agreement with the
// analytic spectra is a genuine cross-check. This header has no model
// dependency; the model-struct discretizers live in oracle_adapters.hpp and
// only evaluate m(x), V(x) and V_eff(x).

namespace emse::oracle {

struct GridMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double lo;
    double hi;
    int points;  // interior nodes; h = (hi - lo)/(points + 1)

    GridSpec(double lo_, double hi_, int points_);

    double spacing() const { return (hi - lo) / (points + 1); }
    double node(int i) const { return lo + spacing() * (i + 1); }
};

struct TridiagSym {
    std::vector<double> diag;     // N
    std::vector<double> offdiag;  // N - 1
};

struct OracleResult {
    std::vector<double> eigenvalues;  // ascending
    GridSpec grid;
    std::optional<std::vector<double>> richardson_estimate;
    std::optional<double> convergence_order;
};

/// Symmetric stencil for -d/dx(w d/dx) + V with Dirichlet boundaries:
/// diag_i = (w_{i-1/2} + w_{i+1/2})/h^2 + V(x_i), offdiag_i = -w_{i+1/2}/h^2.
/// Each half-node w is evaluated once and shared by both neighbors.
TridiagSym assemble_sturm_liouville(const GridSpec& g, const std::function<double(double)>& w,
                                    const std::function<double(double)>& potential);

/// -chi'' + (xi2/s + centrifugal/s^2) chi on s in (lo, hi), lo > 0. This is
/// the self-adjoint reduction of the s-space equation via chi = s^{p/2} psi,
/// p the first-derivative coefficient; centrifugal = p(p-2)/4 - xi3.
TridiagSym discretize_radial_s(double xi2, double centrifugal, const GridSpec& g);

/// Number of eigenvalues of t strictly below mu (Sturm-sequence count via
/// LDL^T pivot signs).
int sturm_count(const TridiagSym& t, double mu);

/// k smallest eigenvalues by bisection, each bracketed to width
/// <= tol * max(1, |value|). Deterministic: every index bisects the full
/// Gershgorin interval on a fixed schedule.
std::vector<double> eigen_lowest_k(const TridiagSym& t, int k, double tol);

std::pair<double, double> gershgorin_bounds(const TridiagSym& t);

/// Assemble-and-solve convenience wrapper.
OracleResult solve_lowest(const TridiagSym& t, const GridSpec& g, int k, double tol = 1e-10);

/// Per-eigenvalue extrapolation (r^2 E_fine - E_coarse)/(r^2 - 1) for the
/// second-order stencil, r = h_coarse/h_fine. Requires the same domain and
/// r within [1.9, 2.1] (exact halving is impossible for the interior-node
/// convention, so near-halving grids are extrapolated with the measured
/// ratio).
OracleResult richardson(const OracleResult& coarse, const OracleResult& fine);

/// Three nested grids; also attaches the observed convergence order of the
/// lowest eigenvalue, log(|E_c - E_m| / |E_m - E_f|) / log(h_c/h_m).
OracleResult richardson(const OracleResult& coarse, const OracleResult& mid,
                        const OracleResult& fine);

/// Dirichlet-truncation adequacy heuristic: the potential wall at the domain
/// edge should exceed the deepest sought level tenfold.
bool domain_wall_adequate(double wall_height, double deepest_level);

}  // namespace emse::oracle
