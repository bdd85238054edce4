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

#include "emse/pdm_model.hpp"

#include <cmath>

namespace emse::pdm {

namespace {

double case_bracket(double q, int n, Branch branch) {
    const double root = 2.0 * std::sqrt(q);
    return branch == Branch::CaseI ? (2.0 * n + 1.0 - root) : (2.0 * n + 1.0 + root);
}

double energy_for_branch(const ExpMassModel& m, const AmbiguityParams& p, int n, Branch branch) {
    if (n < 0) throw std::invalid_argument("energy: n must be non-negative");
    const XiParams xi = to_xi(m, p, 0.0);
    if (xi.q < 0.0) {
        throw NoBoundState("energy: Q < 0, square condition has no real root");
    }
    const double neg_xi2 = -xi.xi2;  // B(2A+1)/lambda^2
    if (!(neg_xi2 > 0.0)) {
        throw NoBoundState("energy: B(2A+1) <= 0, no positive sqrt(xi1) solves the level");
    }
    const double bracket = case_bracket(xi.q, n, branch);
    if (!(bracket > 0.0)) {
        throw NoBoundState("energy: quantization bracket <= 0 at this index");
    }
    const double sqrt_xi1 = neg_xi2 / bracket;
    return -m.lambda * m.lambda * sqrt_xi1 * sqrt_xi1;
}

}  // namespace

ExpMassModel::ExpMassModel(double lambda_, double v0_, double b_, double a_)
    : lambda(lambda_), v0(v0_), b(b_), a(a_) {
    if (!(lambda > 0.0)) throw std::invalid_argument("ExpMassModel: lambda must be positive");
}

double mass_at(const ExpMassModel& m, double x) { return std::exp(-2.0 * m.lambda * x); }

double potential_at(const ExpMassModel& m, double x) {
    return m.v0 * std::exp(2.0 * m.lambda * x) -
           m.b * (2.0 * m.a + 1.0) * std::exp(m.lambda * x);
}

double effective_potential_at(const ExpMassModel& m, const AmbiguityParams& p, double x) {
    // m''/m^2 = m'^2/m^3 = 4 lambda^2 e^{2 lambda x} for the exponential profile
    const double correction = (p.beta + 1.0) / 2.0 - p.a_star();
    return potential_at(m, x) +
           4.0 * m.lambda * m.lambda * std::exp(2.0 * m.lambda * x) * correction;
}

XiParams to_xi(const ExpMassModel& m, const AmbiguityParams& p, double eps) {
    const double l2 = m.lambda * m.lambda;
    XiParams xi;
    xi.xi1 = -eps / l2;
    xi.xi2 = -m.b * (2.0 * m.a + 1.0) / l2;
    const double g = m.v0 / l2 + 2.0 * (p.beta + 1.0) - 4.0 * p.a_star();
    xi.xi3 = 4.0 * p.eta * (p.eta - 1.0) - g;
    const double t = 2.0 * p.eta - 1.0;
    xi.q = t * t - xi.xi3;
    if (xi.xi1 >= 0.0 && xi.q >= 0.0) xi.d = std::sqrt(xi.xi1 * xi.q);
    return xi;
}

double energy_case1(const ExpMassModel& m, const AmbiguityParams& p, int n) {
    return energy_for_branch(m, p, n, Branch::CaseI);
}

double energy_case2(const ExpMassModel& m, const AmbiguityParams& p, int n) {
    return energy_for_branch(m, p, n, Branch::CaseII);
}

BoundState assemble_state(const ExpMassModel& m, const AmbiguityParams& p, int n, Branch branch,
                          double eps) {
    if (n < 0) throw std::invalid_argument("assemble_state: n must be non-negative");
    const XiParams xi = to_xi(m, p, eps);
    if (!(xi.xi1 > 0.0) || xi.q < 0.0 || !xi.d) {
        throw NoBoundState("assemble_state: needs eps < 0 and Q >= 0");
    }

    const nu::NUProblem problem(specfun::Poly(4.0 * p.eta - 1.0),
                                specfun::Poly(xi.xi3, -xi.xi2, -xi.xi1));
    const auto candidates = nu::enumerate_candidates(problem);

    // a double k root (Q = 0, as decided by the engine) collapses both cases
    // onto the branch reported as Case II
    const int want_kb = branch == Branch::CaseI ? +1 : -1;
    for (const auto& cand : candidates) {
        if (!cand.physical) continue;
        if (cand.k_branch != want_kb && cand.k_branch != 0) continue;
        const auto wf = nu::factorize(cand, n);
        const bool normalizable = wf.laguerre.a > -1.0 &&
                                  2.0 * wf.phi_power + 4.0 * p.eta - 1.0 > -1.0 &&
                                  wf.phi_rate < 0.0;
        return BoundState{n, eps, cand.k_branch == 0 ? Branch::CaseII : branch, wf,
                          normalizable};
    }
    throw NoBoundState("assemble_state: no physical candidate on the requested branch");
}

BoundState state(const ExpMassModel& m, const AmbiguityParams& p, int n, Branch branch) {
    const double eps = energy_for_branch(m, p, n, branch);
    return assemble_state(m, p, n, branch, eps);
}

double residual_s_space(const ExpMassModel& m, const AmbiguityParams& p, const BoundState& st,
                        double s) {
    if (!(s > 0.0)) throw std::domain_error("residual_s_space: requires s > 0");
    const XiParams xi = to_xi(m, p, st.energy);
    const auto d = nu::evaluate_wavefunction_derivs(st.wf, st.n, s);
    const double w = (-xi.xi1 * s * s - xi.xi2 * s + xi.xi3) / (s * s);
    return d.d2psi + (4.0 * p.eta - 1.0) / s * d.dpsi + w * d.psi;
}

double residual_s_space_scale(const ExpMassModel& m, const AmbiguityParams& p,
                              const BoundState& st, double s) {
    if (!(s > 0.0)) throw std::domain_error("residual_s_space_scale: requires s > 0");
    const XiParams xi = to_xi(m, p, st.energy);
    const auto d = nu::evaluate_wavefunction_derivs(st.wf, st.n, s);
    const double w = (-xi.xi1 * s * s - xi.xi2 * s + xi.xi3) / (s * s);
    return std::abs(d.d2psi) + std::abs((4.0 * p.eta - 1.0) / s * d.dpsi) + std::abs(w * d.psi);
}

namespace {

struct PhiDerivs {
    double phi, dphi, d2phi;
};

// phi(x) = m(x)^eta psi(s(x)), s = e^{-lambda x}, by the chain rule:
//   phi'  = m^eta (-2 lambda eta psi - lambda s psi_s)
//   phi'' = m^eta lambda^2 (s^2 psi_ss + (4 eta + 1) s psi_s + 4 eta^2 psi)
PhiDerivs phi_derivs(const ExpMassModel& m, const AmbiguityParams& p, const BoundState& st,
                     double x) {
    const double lam = m.lambda;
    const double s = std::exp(-lam * x);
    const auto d = nu::evaluate_wavefunction_derivs(st.wf, st.n, s);
    const double meta = std::pow(mass_at(m, x), p.eta);
    PhiDerivs out;
    out.phi = meta * d.psi;
    out.dphi = meta * (-2.0 * lam * p.eta * d.psi - lam * s * d.dpsi);
    out.d2phi = meta * lam * lam *
                (s * s * d.d2psi + (4.0 * p.eta + 1.0) * s * d.dpsi +
                 4.0 * p.eta * p.eta * d.psi);
    return out;
}

}  // namespace

double residual_x_space(const ExpMassModel& m, const AmbiguityParams& p, const BoundState& st,
                        double x) {
    const auto f = phi_derivs(m, p, st, x);
    const double mm = mass_at(m, x);
    const double mprime = -2.0 * m.lambda * mm;
    return -f.d2phi / mm + mprime / (mm * mm) * f.dphi +
           (effective_potential_at(m, p, x) - st.energy) * f.phi;
}

double residual_x_space_scale(const ExpMassModel& m, const AmbiguityParams& p,
                              const BoundState& st, double x) {
    const auto f = phi_derivs(m, p, st, x);
    const double mm = mass_at(m, x);
    const double mprime = -2.0 * m.lambda * mm;
    return std::abs(f.d2phi / mm) + std::abs(mprime / (mm * mm) * f.dphi) +
           std::abs((effective_potential_at(m, p, x) - st.energy) * f.phi);
}

}  // namespace emse::pdm
