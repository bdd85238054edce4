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

#include "emse/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emse/morse_model.hpp"
#include "emse/nu_engine.hpp"
#include "emse/oracle_adapters.hpp"
#include "emse/pdm_model.hpp"
#include "emse/sturm_oracle.hpp"

namespace emse::cli {

namespace {

using nlohmann::json;

std::string num_str(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string branch_label(pdm::Branch b) { return b == pdm::Branch::CaseI ? "I" : "II"; }

pdm::ExpMassModel pdm_model(const RunConfig& c) {
    return pdm::ExpMassModel(c.lambda, c.v0, c.b, c.a);
}

pdm::AmbiguityParams ambiguity(const RunConfig& c) { return {c.alpha, c.beta, c.eta}; }

morse::MorseModel morse_model(const RunConfig& c) {
    return morse::MorseModel(c.v1, c.v2, c.alpha_star, c.mass, c.hbar);
}

json pdm_model_json(const RunConfig& c) {
    return json{{"lambda", c.lambda}, {"v0", c.v0},       {"b", c.b},      {"a", c.a},
                {"alpha", c.alpha},   {"beta", c.beta},   {"eta", c.eta}};
}

json morse_model_json(const RunConfig& c) {
    return json{{"v1", c.v1},
                {"v2", c.v2},
                {"alpha_star", c.alpha_star},
                {"mass", c.mass},
                {"hbar", c.hbar}};
}

json level_json(int n, double energy, const std::string& branch, bool normalizable,
                double laguerre_param) {
    return json{{"n", n},
                {"energy", energy},
                {"branch", branch},
                {"normalizable", normalizable},
                {"laguerre_param", laguerre_param}};
}

int emit(const RunConfig& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(c.output);
    if (!out) {
        std::cerr << "emse: cannot open output path '" << c.output << "'\n";
        return kExitUsage;
    }
    out << text;
    return out ? kExitOk : kExitUsage;
}

std::string levels_csv(const json& levels) {
    std::ostringstream os;
    os << "n,energy,branch,normalizable,laguerre_param\n";
    for (const auto& l : levels) {
        os << l["n"].get<int>() << ',' << num_str(l["energy"].get<double>()) << ','
           << l["branch"].get<std::string>() << ',' << (l["normalizable"].get<bool>() ? 1 : 0)
           << ',' << num_str(l["laguerre_param"].get<double>()) << '\n';
    }
    return os.str();
}

int emit_levels(const RunConfig& c, json model, const json& levels) {
    if (c.format == Format::Csv) return emit(c, levels_csv(levels));
    json doc{{"model", std::move(model)}, {"method", "nikiforov-uvarov"}, {"levels", levels}};
    return emit(c, doc.dump(2) + "\n");
}

// ---------------------------------------------------------------------------

int cmd_pdm_spectrum(const RunConfig& c) {
    const auto m = pdm_model(c);
    const auto p = ambiguity(c);
    const bool degenerate = pdm::to_xi(m, p, 0.0).q <= 1e-12;

    struct Row {
        double energy;
        json j;
    };
    std::vector<Row> rows;
    for (pdm::Branch branch : {pdm::Branch::CaseI, pdm::Branch::CaseII}) {
        if (degenerate && branch == pdm::Branch::CaseI) continue;
        for (int n = 0; n < c.levels; ++n) {
            try {
                const auto st = pdm::state(m, p, n, branch);
                rows.push_back({st.energy, level_json(n, st.energy, branch_label(st.branch),
                                                      st.normalizable, st.wf.laguerre.a)});
            } catch (const pdm::NoBoundState&) {
                continue;
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.j["branch"].get<std::string>() < b.j["branch"].get<std::string>();
    });
    json levels = json::array();
    for (auto& r : rows) levels.push_back(std::move(r.j));
    return emit_levels(c, pdm_model_json(c), levels);
}

int cmd_morse_spectrum(const RunConfig& c) {
    const auto m = morse_model(c);
    json levels = json::array();
    for (const auto& lvl : morse::spectrum(m, c.levels)) {
        levels.push_back(
            level_json(lvl.n, lvl.energy, "II", lvl.normalizable, lvl.laguerre_param));
    }
    return emit_levels(c, morse_model_json(c), levels);
}

int cmd_pdm_wavefunction(const RunConfig& c) {
    const auto m = pdm_model(c);
    const auto p = ambiguity(c);
    const auto branch = c.case_label == "I" ? pdm::Branch::CaseI : pdm::Branch::CaseII;
    const auto st = pdm::state(m, p, c.level, branch);

    const double xlo = c.xlo.value_or(-5.0);
    const double xhi = c.xhi.value_or(5.0);
    json samples = json::array();
    std::ostringstream csv;
    csv << "x,s,psi,phi\n";
    for (int i = 0; i < c.samples; ++i) {
        const double x =
            c.samples == 1 ? xlo : xlo + (xhi - xlo) * static_cast<double>(i) / (c.samples - 1);
        const double s = std::exp(-c.lambda * x);
        const double psi = nu::evaluate_wavefunction(st.wf, st.n, s);
        const double phi = std::pow(pdm::mass_at(m, x), p.eta) * psi;
        if (c.format == Format::Csv) {
            csv << num_str(x) << ',' << num_str(s) << ',' << num_str(psi) << ',' << num_str(phi)
                << '\n';
        } else {
            samples.push_back(json{{"x", x}, {"s", s}, {"psi", psi}, {"phi", phi}});
        }
    }
    if (c.format == Format::Csv) return emit(c, csv.str());
    json doc{{"model", pdm_model_json(c)},
             {"method", "nikiforov-uvarov"},
             {"samples", std::move(samples)}};
    return emit(c, doc.dump(2) + "\n");
}

int cmd_morse_wavefunction(const RunConfig& c) {
    const auto m = morse_model(c);
    const double xlo = c.xlo.value_or(-3.0);
    const double xhi = c.xhi.value_or(8.0);
    json samples = json::array();
    std::ostringstream csv;
    csv << "x,s,psi\n";
    for (int i = 0; i < c.samples; ++i) {
        const double x =
            c.samples == 1 ? xlo : xlo + (xhi - xlo) * static_cast<double>(i) / (c.samples - 1);
        const double s = std::sqrt(c.v1) * std::exp(-c.alpha_star * x);
        const double psi = morse::wavefunction(m, c.level, s);
        if (c.format == Format::Csv) {
            csv << num_str(x) << ',' << num_str(s) << ',' << num_str(psi) << '\n';
        } else {
            samples.push_back(json{{"x", x}, {"s", s}, {"psi", psi}});
        }
    }
    if (c.format == Format::Csv) return emit(c, csv.str());
    json doc{{"model", morse_model_json(c)},
             {"method", "nikiforov-uvarov"},
             {"samples", std::move(samples)}};
    return emit(c, doc.dump(2) + "\n");
}

int cmd_nu_solve(const RunConfig& c) {
    const nu::NUProblem problem(specfun::Poly(c.tt0, c.tt1), specfun::Poly(c.st0, c.st1, c.st2));
    json model{{"tau_tilde", {c.tt0, c.tt1}}, {"sigma_tilde", {c.st0, c.st1, c.st2}}};
    json candidates = json::array();
    std::string note = "";
    try {
        for (const auto& cand : nu::enumerate_candidates(problem, c.square_tol)) {
            candidates.push_back(json{{"k", cand.k},
                                      {"k_branch", cand.k_branch},
                                      {"pi_branch", cand.pi_branch},
                                      {"pi", {cand.pi.c0, cand.pi.c1}},
                                      {"tau", {cand.tau.c0, cand.tau.c1}},
                                      {"physical", cand.physical},
                                      {"nu_lambda", cand.nu_lambda()}});
        }
    } catch (const nu::NoRealK&) {
        note = "no-real-k";
    } catch (const nu::DegenerateSquare&) {
        note = "degenerate-square";
    }
    if (c.format == Format::Csv) {
        std::ostringstream os;
        os << "k,k_branch,pi_branch,pi0,pi1,tau0,tau1,physical,nu_lambda\n";
        for (const auto& cand : candidates) {
            os << num_str(cand["k"].get<double>()) << ',' << cand["k_branch"].get<int>() << ','
               << cand["pi_branch"].get<int>() << ',' << num_str(cand["pi"][0].get<double>())
               << ',' << num_str(cand["pi"][1].get<double>()) << ','
               << num_str(cand["tau"][0].get<double>()) << ','
               << num_str(cand["tau"][1].get<double>()) << ','
               << (cand["physical"].get<bool>() ? 1 : 0) << ','
               << num_str(cand["nu_lambda"].get<double>()) << '\n';
        }
        return emit(c, os.str());
    }
    json doc{{"model", std::move(model)},
             {"method", "nikiforov-uvarov"},
             {"candidates", std::move(candidates)}};
    if (!note.empty()) doc["note"] = note;
    return emit(c, doc.dump(2) + "\n");
}

struct VerifyOutcome {
    json verification;
    bool pass = true;
};

VerifyOutcome compare_levels(const std::vector<double>& closed, const oracle::OracleResult& fine,
                             const oracle::OracleResult& extrapolated, double tol) {
    const auto& rich = *extrapolated.richardson_estimate;
    const std::size_t k = std::min(closed.size(), rich.size());
    json diff = json::array();
    double max_rel = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double rel = std::abs(rich[i] - closed[i]) / std::abs(closed[i]);
        diff.push_back(rel);
        max_rel = std::max(max_rel, rel);
    }
    VerifyOutcome out;
    out.pass = max_rel <= tol;
    out.verification = json{{"closed_form", closed},
                            {"oracle", fine.eigenvalues},
                            {"richardson", rich},
                            {"diff", std::move(diff)},
                            {"max_rel_err", max_rel},
                            {"tolerance", tol},
                            {"pass", out.pass}};
    return out;
}

std::string verification_csv(const json& v) {
    std::ostringstream os;
    os << "level,closed_form,oracle,richardson,rel_err\n";
    const auto& closed = v["closed_form"];
    for (std::size_t i = 0; i < closed.size(); ++i) {
        os << i << ',' << num_str(closed[i].get<double>()) << ','
           << num_str(v["oracle"][i].get<double>()) << ','
           << num_str(v["richardson"][i].get<double>()) << ','
           << num_str(v["diff"][i].get<double>()) << '\n';
    }
    return os.str();
}

int emit_verification(const RunConfig& c, json model, const VerifyOutcome& out) {
    int rc = kExitOk;
    if (c.format == Format::Csv) {
        rc = emit(c, verification_csv(out.verification));
    } else {
        json doc{{"model", std::move(model)},
                 {"method", "sturm-bisection-fd"},
                 {"verification", out.verification}};
        rc = emit(c, doc.dump(2) + "\n");
    }
    if (rc != kExitOk) return rc;
    return out.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_morse(const RunConfig& c) {
    const auto m = morse_model(c);
    std::vector<double> closed;
    for (const auto& lvl : morse::spectrum(m, c.levels)) closed.push_back(lvl.energy);
    if (closed.empty()) {
        std::cerr << "emse: model has no bound states to verify\n";
        return kExitUsage;
    }
    const double xlo = c.xlo.value_or(-4.0);
    const double xhi = c.xhi.value_or(16.0);

    const double wall = c.v1 * std::exp(-2.0 * c.alpha_star * xlo) -
                        c.v2 * std::exp(-c.alpha_star * xlo);
    if (!oracle::domain_wall_adequate(wall, closed.front())) {
        std::cerr << "emse: warning: potential wall at xlo is below 10x the deepest level; "
                     "consider extending the domain\n";
    }

    const oracle::GridSpec gc(xlo, xhi, c.grid_n / 2);
    const oracle::GridSpec gf(xlo, xhi, c.grid_n);
    const int k = static_cast<int>(closed.size());
    const auto coarse = oracle::solve_lowest(oracle::discretize_morse_x(m, gc), gc, k);
    const auto fine = oracle::solve_lowest(oracle::discretize_morse_x(m, gf), gf, k);
    const auto extra = oracle::richardson(coarse, fine);

    return emit_verification(c, morse_model_json(c), compare_levels(closed, fine, extra, c.tol));
}

int cmd_verify_pdm(const RunConfig& c) {
    const auto m = pdm_model(c);
    const auto p = ambiguity(c);

    std::vector<double> closed;
    for (int n = 0; n < c.levels; ++n) {
        try {
            closed.push_back(pdm::energy_case2(m, p, n));
        } catch (const pdm::NoBoundState&) {
            break;
        }
    }
    if (closed.empty()) {
        std::cerr << "emse: model has no bound states to verify\n";
        return kExitUsage;
    }

    // Self-adjoint s-space reduction; the Dirichlet oracle selects the
    // principal (Case II) branch.
    const auto xi = pdm::to_xi(m, p, 0.0);
    const double pcoef = 4.0 * p.eta - 1.0;
    const double centrifugal = pcoef * (pcoef - 2.0) / 4.0 - xi.xi3;

    const oracle::GridSpec gc(c.slo, c.shi, c.grid_n / 2);
    const oracle::GridSpec gf(c.slo, c.shi, c.grid_n);
    const int k = static_cast<int>(closed.size());
    // The reduced equation's eigenvalue is eps/lambda^2; rescale the oracle
    // output so the report carries physical energies throughout.
    auto solve_physical = [&](const oracle::GridSpec& g) {
        auto res = oracle::solve_lowest(oracle::discretize_radial_s(xi.xi2, centrifugal, g), g, k);
        for (double& e : res.eigenvalues) e *= c.lambda * c.lambda;
        return res;
    };
    const auto coarse = solve_physical(gc);
    const auto fine = solve_physical(gf);
    const auto extra = oracle::richardson(coarse, fine);

    auto out = compare_levels(closed, fine, extra, c.tol);

    if (c.xspace) {
        // Secondary consistency check on a bounded x window; the vanishing
        // mass side is truncation-sensitive, hence the loose 1e-2 tolerance.
        const double xlo = c.xlo.value_or(-4.0);
        const double xhi = c.xhi.value_or(10.0);
        const oracle::GridSpec gx(xlo, xhi, c.grid_n);
        const auto xres = oracle::solve_lowest(oracle::discretize_pdm_x(m, p, gx), gx, k);
        json xdiff = json::array();
        double xmax = 0.0;
        for (std::size_t i = 0; i < closed.size(); ++i) {
            const double rel = std::abs(xres.eigenvalues[i] - closed[i]) / std::abs(closed[i]);
            xdiff.push_back(rel);
            xmax = std::max(xmax, rel);
        }
        const double xtol = 1e-2;
        const bool xpass = xmax <= xtol;
        out.verification["xspace"] = json{{"oracle", xres.eigenvalues},
                                          {"diff", std::move(xdiff)},
                                          {"max_rel_err", xmax},
                                          {"tolerance", xtol},
                                          {"pass", xpass}};
        out.pass = out.pass && xpass;
    }

    return emit_verification(c, pdm_model_json(c), out);
}

int cmd_map(const RunConfig& c) {
    const auto m = morse_model(c);
    const pdm::AmbiguityParams p{c.alpha, c.beta, 0.5};
    const auto corr = morse::map_morse_to_pdm(m, p, c.corr_n);
    const auto report = morse::verify_correspondence(corr, p, c.corr_n);

    json matches = json::array();
    for (const auto& match : report.matches) {
        matches.push_back(json{{"branch", branch_label(match.branch)},
                               {"n", match.n},
                               {"energy", match.energy},
                               {"normalizable", match.normalizable}});
    }
    if (c.format == Format::Csv) {
        std::ostringstream os;
        os << "branch,n,energy,normalizable\n";
        for (const auto& match : report.matches) {
            os << branch_label(match.branch) << ',' << match.n << ',' << num_str(match.energy)
               << ',' << (match.normalizable ? 1 : 0) << '\n';
        }
        return emit(c, os.str());
    }

    json model = morse_model_json(c);
    model["alpha"] = c.alpha;
    model["beta"] = c.beta;
    json doc{{"model", std::move(model)},
             {"method", "morse-pdm-correspondence"},
             {"correspondence",
              json{{"a", corr.a},
                   {"b", corr.b},
                   {"pdm_epsilon", corr.pdm_epsilon},
                   {"n", corr.n},
                   {"v0", corr.v0_at(c.corr_n)},
                   {"e_star", corr.e_star_at(c.corr_n)},
                   {"found", report.found},
                   {"matches", std::move(matches)},
                   {"wavefunction", json{{"power", report.wf_power},
                                         {"laguerre_param", report.wf_laguerre_param},
                                         {"normalizable", report.wf_normalizable}}}}}};
    return emit(c, doc.dump(2) + "\n");
}

bool all_finite(std::initializer_list<double> vals) {
    for (double v : vals) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace

int run(const RunConfig& c) {
    if (!all_finite({c.lambda, c.v0, c.b, c.a, c.alpha, c.beta, c.eta, c.v1, c.v2, c.alpha_star,
                     c.mass, c.hbar, c.tt0, c.tt1, c.st0, c.st1, c.st2, c.slo, c.shi, c.tol,
                     c.xlo.value_or(0.0), c.xhi.value_or(0.0)})) {
        std::cerr << "emse: parameters must be finite\n";
        return kExitUsage;
    }
    try {
        if (c.command == "pdm-spectrum") return cmd_pdm_spectrum(c);
        if (c.command == "pdm-wavefunction") return cmd_pdm_wavefunction(c);
        if (c.command == "morse-spectrum") return cmd_morse_spectrum(c);
        if (c.command == "morse-wavefunction") return cmd_morse_wavefunction(c);
        if (c.command == "nu-solve") return cmd_nu_solve(c);
        if (c.command == "verify-pdm") return cmd_verify_pdm(c);
        if (c.command == "verify-morse") return cmd_verify_morse(c);
        if (c.command == "map") return cmd_map(c);
    } catch (const std::exception& e) {
        std::cerr << "emse: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "emse: unknown command '" << c.command << "'\n";
    return kExitUsage;
}

int run_main(int argc, const char* const argv[]) {
    RunConfig cfg;
    CLI::App app{"Bound-state spectra for exponential-mass and generalized Morse problems via "
                 "the Nikiforov-Uvarov reduction, with finite-difference verification"};
    app.require_subcommand(1);

    std::string format = "json";

    auto opt_window = [](CLI::App* sub, const char* name, std::optional<double>& slot,
                         const char* desc) {
        sub->add_option(
            name,
            [&slot](const CLI::results_t& res) {
                char* end = nullptr;
                const double v = std::strtod(res[0].c_str(), &end);
                if (end == res[0].c_str() || *end != '\0') return false;
                slot = v;
                return true;
            },
            desc);
    };

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", cfg.output, "output path (default: stdout)");
    };
    auto add_pdm_model = [&](CLI::App* sub) {
        sub->add_option("--lambda", cfg.lambda, "mass decay rate");
        sub->add_option("--v0", cfg.v0);
        sub->add_option("--b", cfg.b);
        sub->add_option("--a", cfg.a);
        sub->add_option("--alpha", cfg.alpha);
        sub->add_option("--beta", cfg.beta);
        sub->add_option("--eta", cfg.eta);
    };
    auto add_morse_model = [&](CLI::App* sub) {
        sub->add_option("--v1", cfg.v1);
        sub->add_option("--v2", cfg.v2);
        sub->add_option("--alpha-star", cfg.alpha_star);
        sub->add_option("--mass", cfg.mass);
        sub->add_option("--hbar", cfg.hbar);
    };

    auto* ps = app.add_subcommand("pdm-spectrum", "closed-form exponential-mass levels");
    add_pdm_model(ps);
    add_common(ps);
    ps->add_option("--levels", cfg.levels, "maximum index to scan");

    auto* pw = app.add_subcommand("pdm-wavefunction", "sample one bound state");
    add_pdm_model(pw);
    add_common(pw);
    pw->add_option("--level", cfg.level);
    pw->add_option("--case", cfg.case_label)->check(CLI::IsMember({"I", "II"}));
    pw->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
    opt_window(pw, "--xlo", cfg.xlo, "sampling window start (default -5)");
    opt_window(pw, "--xhi", cfg.xhi, "sampling window end (default 5)");

    auto* ms = app.add_subcommand("morse-spectrum", "closed-form Morse levels");
    add_morse_model(ms);
    add_common(ms);
    ms->add_option("--levels", cfg.levels);

    auto* mw = app.add_subcommand("morse-wavefunction", "sample one Morse bound state");
    add_morse_model(mw);
    add_common(mw);
    mw->add_option("--level", cfg.level);
    mw->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
    opt_window(mw, "--xlo", cfg.xlo, "sampling window start (default -3)");
    opt_window(mw, "--xhi", cfg.xhi, "sampling window end (default 8)");

    auto* nus = app.add_subcommand("nu-solve", "enumerate reduction candidates");
    add_common(nus);
    nus->add_option("--tt0", cfg.tt0, "tau_tilde constant term");
    nus->add_option("--tt1", cfg.tt1, "tau_tilde slope");
    nus->add_option("--st0", cfg.st0, "sigma_tilde constant term");
    nus->add_option("--st1", cfg.st1, "sigma_tilde linear term");
    nus->add_option("--st2", cfg.st2, "sigma_tilde quadratic term");
    nus->add_option("--tol", cfg.square_tol, "perfect-square tolerance");

    auto* vp = app.add_subcommand("verify-pdm", "closed form vs finite-difference oracle");
    add_pdm_model(vp);
    add_common(vp);
    vp->add_option("--levels", cfg.levels);
    vp->add_option("--slo", cfg.slo);
    vp->add_option("--shi", cfg.shi);
    vp->add_option("--n", cfg.grid_n, "fine-grid interior nodes")->check(CLI::PositiveNumber);
    vp->add_option("--tol", cfg.tol);
    vp->add_flag("--xspace", cfg.xspace, "also run the bounded-window x-space check");
    opt_window(vp, "--xlo", cfg.xlo, "x-space window start (default -4)");
    opt_window(vp, "--xhi", cfg.xhi, "x-space window end (default 10)");

    auto* vm = app.add_subcommand("verify-morse", "closed form vs finite-difference oracle");
    add_morse_model(vm);
    add_common(vm);
    vm->add_option("--levels", cfg.levels);
    vm->add_option("--n", cfg.grid_n, "fine-grid interior nodes")->check(CLI::PositiveNumber);
    vm->add_option("--tol", cfg.tol);
    opt_window(vm, "--xlo", cfg.xlo, "domain start (default -4)");
    opt_window(vm, "--xhi", cfg.xhi, "domain end (default 16)");

    auto* mp = app.add_subcommand("map", "Morse level to exponential-mass correspondence");
    add_morse_model(mp);
    add_common(mp);
    mp->add_option("--alpha", cfg.alpha);
    mp->add_option("--beta", cfg.beta);
    mp->add_option("--n", cfg.corr_n, "Morse level index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    return run(cfg);
}

}  // namespace emse::cli
