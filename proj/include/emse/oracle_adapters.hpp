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

#include "emse/morse_model.hpp"
#include "emse/pdm_model.hpp"
#include "emse/sturm_oracle.hpp"

// Model-struct front ends for the oracle. They evaluate mass and potential
// profiles only and forward to assemble_sturm_liouville.

namespace emse::oracle {

/// BenDaniel-Duke stencil -d/dx((1/m) d/dx) + V_eff for the exponential-mass
/// model, 1/m evaluated at half nodes.
TridiagSym discretize_pdm_x(const pdm::ExpMassModel& m, const pdm::AmbiguityParams& p,
                            const GridSpec& g);

/// (hbar^2/2m)(-psi'') + V(x) for the Morse model.
TridiagSym discretize_morse_x(const morse::MorseModel& m, const GridSpec& g);

}  // namespace emse::oracle
