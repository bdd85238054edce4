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

#include <doctest.h>

#include <cmath>
#include <random>

#include "emse/pdm_model.hpp"
#include "quad_util.hpp"

using namespace emse;
using namespace emse::pdm;

namespace {

// lambda=1, eta=1/2, alpha=0, beta=-1, V0=-3/4, B=1, A=2: the reduced
// self-adjoint equation is hydrogen-like with levels -25/(2n+2)^2
const ExpMassModel kCoulombModel(1.0, -0.75, 1.0, 2.0);
const AmbiguityParams kCoulombParams{0.0, -1.0, 0.5};

// same ambiguity setup with V0=3: Q = 4
const ExpMassModel kDeepModel(1.0, 3.0, 1.0, 2.0);

}  // namespace

TEST_CASE("mass profile") {
    const ExpMassModel m(1.0, 0.0, 1.0, 2.0);
    CHECK(mass_at(m, 0.0) == 1.0);
    CHECK(mass_at(m, 1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    const ExpMassModel mhalf(0.5, 0.0, 1.0, 2.0);
    CHECK(mass_at(mhalf, -2.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(ExpMassModel(0.0, 0.0, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(ExpMassModel(-1.0, 0.0, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("potential") {
    CHECK(potential_at(ExpMassModel(1.0, 0.0, 1.0, 2.0), 0.0) == doctest::Approx(-5.0));
    CHECK(potential_at(ExpMassModel(1.0, 3.0, 1.0, 2.0), 0.0) == doctest::Approx(-2.0));
    CHECK(potential_at(ExpMassModel(1.0, -0.75, 1.0, 2.0), std::log(2.0)) ==
          doctest::Approx(-13.0).epsilon(1e-14));
}

TEST_CASE("effective potential") {
    SUBCASE("alpha=0, beta=-1 leaves the bare potential") {
        const ExpMassModel m(1.0, -0.75, 1.0, 2.0);
        const AmbiguityParams p{0.0, -1.0, 0.5};
        for (double x : {-2.0, 0.0, 1.5}) {
            CHECK(effective_potential_at(m, p, x) == doctest::Approx(potential_at(m, x)));
        }
    }
    SUBCASE("alpha=0, beta=0 at the origin") {
        const ExpMassModel m(1.0, 0.0, 1.0, 2.0);
        const AmbiguityParams p{0.0, 0.0, 0.5};
        CHECK(effective_potential_at(m, p, 0.0) == doctest::Approx(-7.0));
    }
    SUBCASE("correction vanishes as x -> -inf") {
        const ExpMassModel m(1.0, 0.0, 1.0, 2.0);
        const AmbiguityParams p{0.7, 0.3, 0.5};
        const double corr = effective_potential_at(m, p, -20.0) - potential_at(m, -20.0);
        CHECK(std::abs(corr) < 1e-15);
    }
}

TEST_CASE("reduced-equation coefficients") {
    SUBCASE("hydrogen-like model at its ground energy") {
        const auto xi = to_xi(kCoulombModel, kCoulombParams, -6.25);
        CHECK(xi.xi1 == doctest::Approx(6.25));
        CHECK(xi.xi2 == doctest::Approx(-5.0));
        CHECK(xi.q == doctest::Approx(0.25).epsilon(1e-14));
        REQUIRE(xi.d.has_value());
        CHECK(*xi.d == doctest::Approx(1.25).epsilon(1e-14));
    }
    SUBCASE("zero energy") {
        const auto xi = to_xi(kCoulombModel, kCoulombParams, 0.0);
        CHECK(xi.xi1 == 0.0);
        REQUIRE(xi.d.has_value());
        CHECK(*xi.d == 0.0);
    }
    SUBCASE("Q = 1 for V0 = 0, beta = -1, alpha = 0") {
        const ExpMassModel m(1.0, 0.0, 1.0, 2.0);
        const auto xi = to_xi(m, kCoulombParams, 0.0);
        CHECK(xi.q == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("positive energy leaves D absent") {
        const auto xi = to_xi(kCoulombModel, kCoulombParams, 2.0);
        CHECK_FALSE(xi.d.has_value());
    }
}

TEST_CASE("Case I energies on the Q = 4 model") {
    CHECK(energy_case1(kDeepModel, kCoulombParams, 4) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(energy_case1(kDeepModel, kCoulombParams, 3) ==
          doctest::Approx(-25.0 / 9.0).epsilon(1e-14));
    CHECK_THROWS_AS(energy_case1(kDeepModel, kCoulombParams, 0), NoBoundState);
    CHECK_THROWS_AS(energy_case1(kDeepModel, kCoulombParams, 1), NoBoundState);
    // n = 2 has bracket 2n+1-2sqrt(Q) = 1 > 0 and yields a formal level
    CHECK(energy_case1(kDeepModel, kCoulombParams, 2) == doctest::Approx(-25.0).epsilon(1e-14));
}

TEST_CASE("Case II energies reproduce the hydrogen-like ladder") {
    CHECK(energy_case2(kCoulombModel, kCoulombParams, 0) ==
          doctest::Approx(-6.25).epsilon(1e-14));
    CHECK(energy_case2(kCoulombModel, kCoulombParams, 1) ==
          doctest::Approx(-1.5625).epsilon(1e-14));
    CHECK(energy_case2(kCoulombModel, kCoulombParams, 2) ==
          doctest::Approx(-25.0 / 36.0).epsilon(1e-14));
}

TEST_CASE("quantization bracket identities") {
    const double q = to_xi(kDeepModel, kCoulombParams, 0.0).q;
    const double c = 25.0;  // (B(2A+1)/lambda)^2
    for (int n = 2; n <= 6; ++n) {
        const double b1 = 2.0 * n + 1.0 - 2.0 * std::sqrt(q);
        CHECK(energy_case1(kDeepModel, kCoulombParams, n) ==
              doctest::Approx(-c / (b1 * b1)).epsilon(1e-13));
    }
    for (int n = 0; n <= 6; ++n) {
        const double b2 = 2.0 * n + 1.0 + 2.0 * std::sqrt(q);
        CHECK(energy_case2(kDeepModel, kCoulombParams, n) ==
              doctest::Approx(-c / (b2 * b2)).epsilon(1e-13));
    }
}

TEST_CASE("bound-state assembly") {
    SUBCASE("Case II ground state of the hydrogen-like model") {
        const auto st = state(kCoulombModel, kCoulombParams, 0, Branch::CaseII);
        CHECK(st.energy == doctest::Approx(-6.25));
        CHECK(st.branch == Branch::CaseII);
        CHECK(st.wf.phi_power == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(st.wf.phi_rate == doctest::Approx(-2.5).epsilon(1e-13));
        CHECK(st.wf.laguerre.a == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(st.wf.laguerre.scale == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(st.normalizable);
    }
    SUBCASE("Case I states on the same model are not normalizable") {
        const auto st = state(kCoulombModel, kCoulombParams, 1, Branch::CaseI);
        CHECK(st.energy == doctest::Approx(-6.25));
        CHECK(st.wf.laguerre.a == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK_FALSE(st.normalizable);
    }
    SUBCASE("n = 0 is a pure power-exponential") {
        const auto st = state(kCoulombModel, kCoulombParams, 0, Branch::CaseII);
        for (double s : {0.3, 1.0, 2.0}) {
            const double direct = std::pow(s, 0.5) * std::exp(-2.5 * s);
            CHECK(nu::evaluate_wavefunction(st.wf, 0, s) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
    }
    SUBCASE("degenerate Q = 0 reports a single Case II branch") {
        const ExpMassModel m(1.0, -1.0, 1.0, 2.0);  // Q = -1 + 0 + 1 = 0
        CHECK(to_xi(m, kCoulombParams, 0.0).q == doctest::Approx(0.0));
        const auto st1 = state(m, kCoulombParams, 0, Branch::CaseI);
        const auto st2 = state(m, kCoulombParams, 0, Branch::CaseII);
        CHECK(st1.branch == Branch::CaseII);
        CHECK(st2.branch == Branch::CaseII);
        CHECK(st1.energy == doctest::Approx(st2.energy));
    }
}

namespace {

double max_rel_residual_s(const ExpMassModel& m, const AmbiguityParams& p, const BoundState& st,
                          std::initializer_list<double> pts) {
    double worst = 0.0;
    for (double s : pts) {
        const double rel = std::abs(residual_s_space(m, p, st, s)) /
                           residual_s_space_scale(m, p, st, s);
        worst = std::max(worst, rel);
    }
    return worst;
}

double max_rel_residual_x(const ExpMassModel& m, const AmbiguityParams& p, const BoundState& st,
                          std::initializer_list<double> pts) {
    double worst = 0.0;
    for (double x : pts) {
        const double rel = std::abs(residual_x_space(m, p, st, x)) /
                           residual_x_space_scale(m, p, st, x);
        worst = std::max(worst, rel);
    }
    return worst;
}

}  // namespace

TEST_CASE("reduced-equation residual vanishes on valid states") {
    for (int n : {0, 1, 2}) {
        const auto st = state(kCoulombModel, kCoulombParams, n, Branch::CaseII);
        CHECK(max_rel_residual_s(kCoulombModel, kCoulombParams, st, {0.5, 1.0, 2.0, 5.0}) <=
              1e-8);
    }
}

TEST_CASE("residual is sensitive to an energy perturbation") {
    const auto good = state(kCoulombModel, kCoulombParams, 1, Branch::CaseII);
    const auto bad = assemble_state(kCoulombModel, kCoulombParams, 1, Branch::CaseII,
                                    good.energy * (1.0 + 1e-3));
    const double r_good = std::abs(residual_s_space(kCoulombModel, kCoulombParams, good, 1.0)) /
                          residual_s_space_scale(kCoulombModel, kCoulombParams, good, 1.0);
    const double r_bad = std::abs(residual_s_space(kCoulombModel, kCoulombParams, bad, 1.0)) /
                         residual_s_space_scale(kCoulombModel, kCoulombParams, bad, 1.0);
    CHECK(r_bad >= 10.0 * std::max(r_good, 1e-300));

    const double rx_good = std::abs(residual_x_space(kCoulombModel, kCoulombParams, good, 0.0)) /
                           residual_x_space_scale(kCoulombModel, kCoulombParams, good, 0.0);
    const double rx_bad = std::abs(residual_x_space(kCoulombModel, kCoulombParams, bad, 0.0)) /
                          residual_x_space_scale(kCoulombModel, kCoulombParams, bad, 0.0);
    CHECK(rx_bad >= 10.0 * std::max(rx_good, 1e-300));
}

TEST_CASE("x-space equation closes for every eta, not only 1/2") {
    // the free transformation exponent must drop out of the physics
    for (double eta : {0.0, 0.25, 0.5, 1.0}) {
        const AmbiguityParams p{0.0, -1.0, eta};
        for (int n : {0, 1}) {
            const auto st = state(kCoulombModel, p, n, Branch::CaseII);
            CHECK(max_rel_residual_x(kCoulombModel, p, st, {-1.0, 0.0, 1.0}) <= 1e-10);
            CHECK(max_rel_residual_s(kCoulombModel, p, st, {0.5, 1.0, 2.0}) <= 1e-10);
        }
    }
}

TEST_CASE("spectrum is invariant under the transformation exponent") {
    for (int n : {0, 1, 2}) {
        const double ref = energy_case2(kCoulombModel, {0.0, -1.0, 0.5}, n);
        for (double eta : {0.0, 0.25, 1.0}) {
            const double e = energy_case2(kCoulombModel, {0.0, -1.0, eta}, n);
            CHECK(std::abs(e - ref) <= 1e-12 * std::abs(ref));
        }
    }
}

TEST_CASE("Case II energies increase strictly toward zero") {
    double prev = -1e300;
    for (int n = 0; n < 8; ++n) {
        const double e = energy_case2(kDeepModel, kCoulombParams, n);
        CHECK(e > prev);
        CHECK(e < 0.0);
        prev = e;
    }
}

TEST_CASE("self-adjoint-frame eigenfunctions are orthogonal") {
    const auto st0 = state(kCoulombModel, kCoulombParams, 0, Branch::CaseII);
    const auto st1 = state(kCoulombModel, kCoulombParams, 1, Branch::CaseII);
    const double pcoef = 4.0 * kCoulombParams.eta - 1.0;

    auto chi = [&](const BoundState& st, double s) {
        return std::pow(s, pcoef / 2.0) * nu::evaluate_wavefunction(st.wf, st.n, s);
    };
    const double S = 40.0;  // integrand tail < 1e-12 beyond
    const double inner = testutil::integrate_from_zero(
        [&](double s) { return chi(st0, s) * chi(st1, s); }, S, 80);
    const double n0 = testutil::integrate_from_zero(
        [&](double s) { return chi(st0, s) * chi(st0, s); }, S, 80);
    const double n1 = testutil::integrate_from_zero(
        [&](double s) { return chi(st1, s) * chi(st1, s); }, S, 80);
    CHECK(std::abs(inner) / std::sqrt(n0 * n1) <= 1e-6);
}

TEST_CASE("randomized valid models keep both residuals small") {
    std::mt19937 rng(314);
    std::uniform_real_distribution<double> lamd(0.5, 2.0);
    std::uniform_real_distribution<double> bd(0.5, 2.0);
    std::uniform_real_distribution<double> ad(0.25, 3.0);
    std::uniform_real_distribution<double> alphad(-0.5, 0.5);
    std::uniform_real_distribution<double> betad(-1.5, -0.5);
    std::uniform_real_distribution<double> etad(0.0, 1.0);
    std::uniform_real_distribution<double> v0d(-1.0, 3.0);

    int built = 0;
    while (built < 10) {
        const ExpMassModel m(lamd(rng), v0d(rng), bd(rng), ad(rng));
        const AmbiguityParams p{alphad(rng), betad(rng), etad(rng)};
        if (to_xi(m, p, 0.0).q < 1e-3) continue;
        ++built;
        for (int n : {0, 1}) {
            const auto st = state(m, p, n, Branch::CaseII);
            const double sc = std::sqrt(-st.energy) / m.lambda;  // sqrt(xi1)
            for (int j = 1; j <= 8; ++j) {
                const double s = 0.5 * j / sc;
                const double rels = std::abs(residual_s_space(m, p, st, s)) /
                                    residual_s_space_scale(m, p, st, s);
                CHECK(rels <= 1e-8);
                const double x = -std::log(s) / m.lambda;
                const double relx = std::abs(residual_x_space(m, p, st, x)) /
                                    residual_x_space_scale(m, p, st, x);
                CHECK(relx <= 1e-8);
            }
        }
    }
}
