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

#include "emse/morse_model.hpp"

#include <cmath>

namespace emse::morse {

namespace {

// Factorized form of the bound solution at an explicit eps*.
nu::FactorizedSolution factorized_at(const MorseModel& m, int n, double eps) {
    const double g = m.gamma_star();
    return nu::FactorizedSolution{2.0 * eps, -g, 4.0 * eps, -2.0 * g,
                                  specfun::LaguerreSpec(n, 4.0 * eps, 2.0 * g)};
}

}  // namespace

MorseModel::MorseModel(double v1_, double v2_, double alpha_star_, double mass_, double hbar_)
    : v1(v1_), v2(v2_), alpha_star(alpha_star_), mass(mass_), hbar(hbar_) {
    if (!(v1 > 0.0 && v2 > 0.0 && alpha_star > 0.0 && mass > 0.0 && hbar > 0.0)) {
        throw std::invalid_argument("MorseModel: all parameters must be positive");
    }
}

nu::NUProblem morse_to_nu(const MorseModel& m, double eps_star) {
    const double g2 = m.gamma_star() * m.gamma_star();
    const double xi2 = -m.v2 / std::sqrt(m.v1) * g2;
    const double xi3 = -4.0 * eps_star * eps_star;
    return nu::NUProblem(specfun::Poly(1.0), specfun::Poly(xi3, -xi2, -g2));
}

double eps_star(const MorseModel& m, int n) {
    if (n < 0) throw std::invalid_argument("eps_star: n must be non-negative");
    const double bracket = m.depth() - (2.0 * n + 1.0);
    if (!(bracket > 0.0)) throw std::out_of_range("eps_star: index n is not a bound level");
    return bracket / 4.0;
}

std::vector<MorseLevel> spectrum(const MorseModel& m, int max_levels) {
    std::vector<MorseLevel> out;
    const double coeff = 2.0 * m.hbar * m.hbar * m.alpha_star * m.alpha_star / m.mass;
    for (int n = 0; n < max_levels; ++n) {
        const double bracket = m.depth() - (2.0 * n + 1.0);
        if (!(bracket > 0.0)) break;
        MorseLevel lvl;
        lvl.n = n;
        lvl.eps_star = bracket / 4.0;
        lvl.energy = -coeff * lvl.eps_star * lvl.eps_star;
        lvl.laguerre_param = 4.0 * lvl.eps_star;
        lvl.normalizable = true;
        out.push_back(lvl);
    }
    return out;
}

double wavefunction(const MorseModel& m, int n, double s) {
    if (!(s > 0.0)) throw std::domain_error("wavefunction: requires s > 0");
    return nu::evaluate_wavefunction(factorized_at(m, n, eps_star(m, n)), n, s);
}

double ode_residual_at_eps(const MorseModel& m, int n, double eps, double s) {
    const double g2 = m.gamma_star() * m.gamma_star();
    const double xi2 = -m.v2 / std::sqrt(m.v1) * g2;
    const double xi3 = -4.0 * eps * eps;
    const auto d = nu::evaluate_wavefunction_derivs(factorized_at(m, n, eps), n, s);
    const double w = (-g2 * s * s - xi2 * s + xi3) / (s * s);
    return d.d2psi + d.dpsi / s + w * d.psi;
}

double ode_residual_scale_at_eps(const MorseModel& m, int n, double eps, double s) {
    const double g2 = m.gamma_star() * m.gamma_star();
    const double xi2 = -m.v2 / std::sqrt(m.v1) * g2;
    const double xi3 = -4.0 * eps * eps;
    const auto d = nu::evaluate_wavefunction_derivs(factorized_at(m, n, eps), n, s);
    const double w = (-g2 * s * s - xi2 * s + xi3) / (s * s);
    return std::abs(d.d2psi) + std::abs(d.dpsi / s) + std::abs(w * d.psi);
}

double ode_residual(const MorseModel& m, int n, double s) {
    return ode_residual_at_eps(m, n, eps_star(m, n), s);
}

PdmCorrespondence map_morse_to_pdm(const MorseModel& m, const pdm::AmbiguityParams& p, int n) {
    if (std::abs(m.gamma_star() - 1.0) > 1e-12) {
        throw ConventionError("map_morse_to_pdm: requires gamma* = 1 (lambda = 1/alpha* = 1)");
    }
    PdmCorrespondence c;
    const double ratio = m.v2 / std::sqrt(m.v1);
    c.a = (ratio - 1.0) / 2.0;
    c.b = std::sqrt(m.v1) / m.v2 * (2.0 * c.a + 1.0);
    c.pdm_epsilon = -c.b * c.b;
    c.n = n;
    c.ambiguity_shift = 4.0 * p.alpha * (p.alpha + p.beta + 1.0) + 2.0 * p.beta + 1.0;
    return c;
}

CorrespondenceReport verify_correspondence(const PdmCorrespondence& c,
                                           const pdm::AmbiguityParams& p, int n) {
    constexpr int kScanLimit = 64;
    const pdm::ExpMassModel model(1.0, c.v0_at(n), c.b, c.a);
    const double target = c.pdm_epsilon;
    const double tol = 1e-9 * std::max(1.0, std::abs(target));

    CorrespondenceReport report;
    for (pdm::Branch branch : {pdm::Branch::CaseI, pdm::Branch::CaseII}) {
        for (int idx = 0; idx < kScanLimit; ++idx) {
            double eps;
            try {
                eps = branch == pdm::Branch::CaseI ? pdm::energy_case1(model, p, idx)
                                                   : pdm::energy_case2(model, p, idx);
            } catch (const pdm::NoBoundState&) {
                continue;
            }
            if (std::abs(eps - target) <= tol) {
                const auto st = pdm::state(model, p, idx, branch);
                report.matches.push_back({st.branch, idx, eps, st.normalizable});
            }
        }
    }
    report.found = !report.matches.empty();
    report.wf_power = c.a - n;
    report.wf_laguerre_param = 2.0 * (c.a - n);
    report.wf_normalizable =
        report.wf_laguerre_param > -1.0 && 2.0 * report.wf_power + 1.0 > -1.0;
    return report;
}

}  // namespace emse::morse
