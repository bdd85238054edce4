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

#include "emse/oracle_adapters.hpp"

#include <cmath>

namespace emse::oracle {

TridiagSym discretize_pdm_x(const pdm::ExpMassModel& m, const pdm::AmbiguityParams& p,
                            const GridSpec& g) {
    return assemble_sturm_liouville(
        g, [&m](double x) { return 1.0 / pdm::mass_at(m, x); },
        [&m, &p](double x) { return pdm::effective_potential_at(m, p, x); });
}

TridiagSym discretize_morse_x(const morse::MorseModel& m, const GridSpec& g) {
    const double w = m.hbar * m.hbar / (2.0 * m.mass);
    return assemble_sturm_liouville(
        g, [w](double) { return w; },
        [&m](double x) {
            return m.v1 * std::exp(-2.0 * m.alpha_star * x) -
                   m.v2 * std::exp(-m.alpha_star * x);
        });
}

}  // namespace emse::oracle
