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
#include <string>

namespace emse::cli {

enum class Format { Json, Csv };

// Exit codes: 0 success, 2 validation error, 3 verify-* disagreement beyond
// tolerance.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct RunConfig {
    std::string command;
    Format format = Format::Json;
    std::string output;  // empty writes to stdout

    // exponential-mass model
    double lambda = 1.0;
    double v0 = 0.0;
    double b = 1.0;
    double a = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double eta = 0.5;

    // Morse model
    double v1 = 1.0;
    double v2 = 1.0;
    double alpha_star = 1.0;
    double mass = 0.5;
    double hbar = 1.0;

    // generic reduced equation (nu-solve)
    double tt0 = 1.0;
    double tt1 = 0.0;
    double st0 = 0.0;
    double st1 = 0.0;
    double st2 = 0.0;
    double square_tol = 1e-9;

    int levels = 8;
    int level = 0;
    int samples = 200;
    std::string case_label = "II";

    std::optional<double> xlo;
    std::optional<double> xhi;
    double slo = 1e-4;
    double shi = 60.0;
    int grid_n = 4000;
    double tol = 1e-3;
    bool xspace = false;
    int corr_n = 0;
};

/// Dispatch a parsed, validated config.
int run(const RunConfig& cfg);

/// Parse argv and dispatch.
int run_main(int argc, const char* const argv[]);

}  // namespace emse::cli
