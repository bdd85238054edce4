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

// Assembly core and Sturm bisection. This translation unit must stay free of
// any model include: it sees callables and raw coefficients only.

#include "emse/sturm_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace emse::oracle {

GridSpec::GridSpec(double lo_, double hi_, int points_) : lo(lo_), hi(hi_), points(points_) {
    if (!(hi > lo)) throw std::invalid_argument("GridSpec: requires hi > lo");
    if (points < 16) throw std::invalid_argument("GridSpec: requires at least 16 interior nodes");
}

TridiagSym assemble_sturm_liouville(const GridSpec& g, const std::function<double(double)>& w,
                                    const std::function<double(double)>& potential) {
    const int n = g.points;
    const double h = g.spacing();
    const double h2 = h * h;

    std::vector<double> whalf(n + 1);
    for (int i = 0; i <= n; ++i) whalf[i] = w(g.lo + h * (i + 0.5));

    TridiagSym t;
    t.diag.resize(n);
    t.offdiag.resize(n - 1);
    for (int i = 0; i < n; ++i) {
        t.diag[i] = (whalf[i] + whalf[i + 1]) / h2 + potential(g.node(i));
        if (i < n - 1) t.offdiag[i] = -whalf[i + 1] / h2;
    }
    return t;
}

TridiagSym discretize_radial_s(double xi2, double centrifugal, const GridSpec& g) {
    if (!(g.lo > 0.0)) throw std::invalid_argument("discretize_radial_s: requires lo > 0");
    return assemble_sturm_liouville(
        g, [](double) { return 1.0; },
        [xi2, centrifugal](double s) { return xi2 / s + centrifugal / (s * s); });
}

int sturm_count(const TridiagSym& t, double mu) {
    const auto& a = t.diag;
    const auto& b = t.offdiag;
    double bmax2 = 0.0;
    for (double bi : b) bmax2 = std::max(bmax2, bi * bi);
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, bmax2);

    int count = 0;
    double d = a[0] - mu;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (std::abs(d) < pivmin) d = -pivmin;
        d = (a[i] - mu) - b[i - 1] * b[i - 1] / d;
        if (d < 0.0) ++count;
    }
    return count;
}

std::pair<double, double> gershgorin_bounds(const TridiagSym& t) {
    const int n = static_cast<int>(t.diag.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.offdiag[i - 1]);
        if (i < n - 1) r += std::abs(t.offdiag[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    return {lo, hi};
}

std::vector<double> eigen_lowest_k(const TridiagSym& t, int k, double tol) {
    const int n = static_cast<int>(t.diag.size());
    if (t.offdiag.size() + 1 != t.diag.size()) {
        throw std::invalid_argument("eigen_lowest_k: offdiag must have N-1 entries");
    }
    if (k < 1 || k > n) throw std::out_of_range("eigen_lowest_k: k out of range");

    auto [glo, ghi] = gershgorin_bounds(t);
    const double pad = 1e-12 * std::max({1.0, std::abs(glo), std::abs(ghi)});
    glo -= pad;
    ghi += pad;

    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        double lo = glo;
        double hi = ghi;
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (hi - lo <= tol * std::max(1.0, std::abs(mid))) break;
            if (sturm_count(t, mid) >= j + 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out[j] = 0.5 * (lo + hi);
    }
    return out;
}

OracleResult solve_lowest(const TridiagSym& t, const GridSpec& g, int k, double tol) {
    return OracleResult{eigen_lowest_k(t, k, tol), g, std::nullopt, std::nullopt};
}

namespace {

double grid_ratio_checked(const OracleResult& coarse, const OracleResult& fine) {
    const double span = std::max(std::abs(coarse.grid.hi - coarse.grid.lo), 1.0);
    if (std::abs(coarse.grid.lo - fine.grid.lo) > 1e-12 * span ||
        std::abs(coarse.grid.hi - fine.grid.hi) > 1e-12 * span) {
        throw GridMismatch("richardson: grids cover different domains");
    }
    const double r = coarse.grid.spacing() / fine.grid.spacing();
    if (r < 1.9 || r > 2.1) {
        throw GridMismatch("richardson: fine spacing must be about half the coarse spacing");
    }
    return r;
}

}  // namespace

OracleResult richardson(const OracleResult& coarse, const OracleResult& fine) {
    const double r = grid_ratio_checked(coarse, fine);
    const double r2 = r * r;
    const std::size_t m = std::min(coarse.eigenvalues.size(), fine.eigenvalues.size());
    std::vector<double> est(m);
    for (std::size_t i = 0; i < m; ++i) {
        est[i] = (r2 * fine.eigenvalues[i] - coarse.eigenvalues[i]) / (r2 - 1.0);
    }
    OracleResult out = fine;
    out.richardson_estimate = std::move(est);
    return out;
}

OracleResult richardson(const OracleResult& coarse, const OracleResult& mid,
                        const OracleResult& fine) {
    grid_ratio_checked(coarse, mid);
    OracleResult out = richardson(mid, fine);
    if (!coarse.eigenvalues.empty() && !mid.eigenvalues.empty() && !fine.eigenvalues.empty()) {
        const double d1 = std::abs(coarse.eigenvalues[0] - mid.eigenvalues[0]);
        const double d2 = std::abs(mid.eigenvalues[0] - fine.eigenvalues[0]);
        if (d1 > 0.0 && d2 > 0.0) {
            out.convergence_order =
                std::log(d1 / d2) / std::log(coarse.grid.spacing() / mid.grid.spacing());
        }
    }
    return out;
}

bool domain_wall_adequate(double wall_height, double deepest_level) {
    return wall_height >= 10.0 * std::abs(deepest_level);
}

}  // namespace emse::oracle
