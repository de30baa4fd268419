/*
 * This file is part of cpdyn
 *
 * Copyright 2026 cpdyn authors
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
 *
 * cpdyn -- time-dependent Casimir-Polder force between an initially bare
 * ground-state two-level atom and a perfectly conducting wall.
 *
 * Subcommands: static, force, sweep, figure, validate.
 * Exit codes: 0 success, 1 usage or I/O error, 2 singular point,
 *             3 validation failure.
 */
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpdyn/dynamics.hpp"
#include "cpdyn/errors.hpp"
#include "cpdyn/oracle.hpp"
#include "cpdyn/specfun.hpp"
#include "cpdyn/statics.hpp"
#include "cpdyn/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSingular = 2;
constexpr int kExitValidation = 3;

using cpdyn::sweep::format_sig;

bool write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return false;
    }
    f << text;
    if (!f.flush()) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return false;
    }
    return true;
}

int run_static(double d, double k0, double mu) {
    const double force = cpdyn::statics::static_force({d, k0, mu});
    const double reduced = cpdyn::statics::static_force_reduced(2.0 * k0 * d);
    std::string out = "{";
    out += "\"d\": " + format_sig(d, 17);
    out += ", \"k0\": " + format_sig(k0, 17);
    out += ", \"mu\": " + format_sig(mu, 17);
    out += ", \"x0\": " + format_sig(2.0 * k0 * d, 17);
    out += ", \"force\": " + format_sig(force, 17);
    out += ", \"force_reduced\": " + format_sig(reduced, 17);
    out += "}\n";
    std::cout << out;
    return kExitOk;
}

int run_force(double d, double t, double k0, double mu, double guard_band) {
    const cpdyn::dynamics::AtomWallConfig config(d, t, k0, mu);
    const auto result = cpdyn::dynamics::dynamic_force(config, guard_band);
    std::string out = "{";
    out += "\"t\": " + format_sig(t, 17);
    out += ", \"d\": " + format_sig(d, 17);
    out += ", \"k0\": " + format_sig(k0, 17);
    out += ", \"mu\": " + format_sig(mu, 17);
    out += ", \"a\": " + format_sig(config.a, 17);
    out += ", \"x0\": " + format_sig(config.x0, 17);
    out += ", \"force\": " + format_sig(result.force, 17);
    out += ", \"force_reduced\": " + format_sig(result.force_reduced, 17);
    out += std::string(", \"regime\": \"") +
           (result.regime.tag == cpdyn::dynamics::RegimeTag::PreBackReaction ? "pre"
                                                                             : "post") +
           "\"}\n";
    std::cout << out;
    return kExitOk;
}

int emit_sweep(const cpdyn::sweep::SweepResult& result, const std::string& format,
               const std::string& out_path) {
    const std::string text =
        format == "json" ? cpdyn::sweep::to_json(result) : cpdyn::sweep::to_csv(result);
    return write_output(text, out_path) ? kExitOk : kExitUsage;
}

struct ValidateOptions {
    double d = 0.0;
    double t = -1.0;
    double k0 = 1.0;
    double mu = 1.0;
    double tol_energy = 1e-4;
    double tol_force = 1e-3;
    double tol_integral = 1e-6;
    double abs_tol = 1e-9;
    double truncation_periods = 0.0;  // 0 = automatic
};

int run_validate(const ValidateOptions& opt) {
    cpdyn::oracle::QuadratureSettings qs;
    qs.abs_tol = opt.abs_tol;

    auto settings_for = [&](double x0) {
        cpdyn::oracle::QuadratureSettings s = qs;
        if (opt.truncation_periods > 0.0)
            s.truncation_u_max = x0 + opt.truncation_periods * 2.0 * std::numbers::pi;
        return s;
    };

    struct Check {
        std::string name;
        double max_rel = 0.0;
        double tol = 0.0;
        int n = 0;
        bool failed = false;
        std::vector<std::string> diagnostics;
    };
    std::vector<Check> checks;

    const bool single_point = opt.t >= 0.0 && opt.d > 0.0;

    // -- closed-form m-integral vs regularized quadrature ---------------
    {
        Check c{"base-integral closed-vs-quadrature", 0.0, opt.tol_integral, 0, false, {}};
        struct P {
            double m, x0, a;
        };
        const std::vector<P> pts = {{1.0, 20.0, 0.5}, {1.0, 5.0, 2.0}, {0.999, 8.0, 0.25}};
        for (const auto& p : pts) {
            try {
                const double iq =
                    cpdyn::oracle::base_integral(p.m, p.x0, p.a, settings_for(p.x0));
                const double ic =
                    cpdyn::dynamics::detail::m_integral_reduced(p.m, p.x0, p.a);
                c.max_rel = std::max(c.max_rel, std::abs(iq - ic) / std::abs(ic));
                ++c.n;
            } catch (const cpdyn::convergence_error& e) {
                c.failed = true;
                c.diagnostics.push_back(e.what());
            }
        }
        checks.push_back(std::move(c));
    }

    // -- energy: closed form vs quadrature -------------------------------
    {
        Check c{"energy closed-vs-quadrature", 0.0, opt.tol_energy, 0, false, {}};
        std::vector<cpdyn::dynamics::AtomWallConfig> grid;
        if (single_point) {
            grid.emplace_back(opt.d, opt.t, opt.k0, opt.mu);
        } else {
            for (double a : {0.25, 0.5, 2.0, 4.0})
                for (double x0 : {2.0, 20.0, 60.0})
                    grid.emplace_back(1.0, 2.0 * a, x0 / 2.0, 1.0);
        }
        std::vector<double> devs(grid.size(), 0.0);
        std::vector<std::string> errors(grid.size());
        cpdyn::sweep::parallel_for_index(grid.size(), [&](std::size_t i) {
            try {
                const double eq = cpdyn::oracle::energy_shift_quadrature(
                    grid[i], settings_for(grid[i].x0));
                const double ec = cpdyn::dynamics::energy_shift_closed(grid[i]);
                devs[i] = std::abs(eq - ec) / std::abs(ec);
            } catch (const cpdyn::convergence_error& e) {
                errors[i] = e.what();
            }
        });
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!errors[i].empty()) {
                c.failed = true;
                c.diagnostics.push_back(errors[i]);
            } else {
                c.max_rel = std::max(c.max_rel, devs[i]);
                ++c.n;
            }
        }
        checks.push_back(std::move(c));
    }

    // -- force: closed form vs finite difference of quadrature energy ----
    {
        Check c{"force closed-vs-finite-difference", 0.0, opt.tol_force, 0, false, {}};
        std::vector<cpdyn::dynamics::AtomWallConfig> grid;
        if (single_point)
            grid.emplace_back(opt.d, opt.t, opt.k0, opt.mu);
        else
            for (double t : {5.0, 40.0}) grid.emplace_back(10.0, t, 1.0, 1.0);
        std::vector<double> devs(grid.size(), 0.0);
        std::vector<std::string> errors(grid.size());
        cpdyn::sweep::parallel_for_index(grid.size(), [&](std::size_t i) {
            try {
                const double fq = cpdyn::oracle::force_finite_difference(
                    grid[i], settings_for(grid[i].x0));
                const double fc = cpdyn::dynamics::dynamic_force(grid[i]).force;
                devs[i] = std::abs(fq - fc) / std::abs(fc);
            } catch (const cpdyn::convergence_error& e) {
                errors[i] = e.what();
            }
        });
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!errors[i].empty()) {
                c.failed = true;
                c.diagnostics.push_back(errors[i]);
            } else {
                c.max_rel = std::max(c.max_rel, devs[i]);
                ++c.n;
            }
        }
        checks.push_back(std::move(c));
    }

    bool all_ok = true;
    for (const auto& c : checks) {
        const bool within = !c.failed && c.max_rel <= c.tol;
        all_ok = all_ok && within;
        std::printf("%-40s n=%-3d max_rel_dev=%.3e tol=%.1e %s\n", c.name.c_str(), c.n,
                    c.max_rel, c.tol, within ? "PASS" : "FAIL");
        for (const auto& diag : c.diagnostics)
            std::printf("    convergence failure: %s\n", diag.c_str());
    }
    std::printf("validate: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cpdyn -- dynamical Casimir-Polder force between a two-level atom and a "
        "conducting wall (natural units, c = 1; negative force = attraction)"};
    app.set_config("--config", "", "flat key = value configuration file");
    app.require_subcommand(1);

    auto* cmd_static = app.add_subcommand("static", "stationary force for a dressed atom");
    double s_d = 0.0, s_k0 = 1.0, s_mu = 1.0;
    cmd_static->add_option("--d", s_d, "atom-wall distance")->required();
    cmd_static->add_option("--k0", s_k0, "transition wavenumber");
    cmd_static->add_option("--mu", s_mu, "dipole moment");

    auto* cmd_force =
        app.add_subcommand("force", "dynamical force at one (d, t) point, JSON output");
    double f_d = 0.0, f_t = 0.0, f_k0 = 1.0, f_mu = 1.0;
    double f_guard = cpdyn::dynamics::kDefaultGuardBand;
    cmd_force->add_option("--d", f_d, "atom-wall distance")->required();
    cmd_force->add_option("--t", f_t, "time since the bare state was prepared")->required();
    cmd_force->add_option("--k0", f_k0, "transition wavenumber");
    cmd_force->add_option("--mu", f_mu, "dipole moment");
    cmd_force->add_option("--guard-band", f_guard,
                          "half width of the excluded band at a = 1");

    auto* cmd_sweep = app.add_subcommand("sweep", "force on a uniform time grid");
    double w_d = 0.0, w_tmin = 0.0, w_tmax = 0.0, w_k0 = 1.0, w_mu = 1.0;
    double w_guard = cpdyn::dynamics::kDefaultGuardBand;
    int w_steps = 0;
    std::string w_format = "csv", w_out = "-";
    cmd_sweep->add_option("--d", w_d, "atom-wall distance")->required();
    cmd_sweep->add_option("--t-min", w_tmin, "first time")->required();
    cmd_sweep->add_option("--t-max", w_tmax, "last time")->required();
    cmd_sweep->add_option("--steps", w_steps, "number of grid points (>= 2)")->required();
    cmd_sweep->add_option("--k0", w_k0, "transition wavenumber");
    cmd_sweep->add_option("--mu", w_mu, "dipole moment");
    cmd_sweep->add_option("--guard-band", w_guard,
                          "half width of the excluded band at a = 1");
    cmd_sweep->add_option("--format", w_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--out", w_out, "output path ('-' = stdout)");

    auto* cmd_figure = app.add_subcommand(
        "figure", "sweep behind one of the two standard plots (d = 10, k0 = 1, mu = 1)");
    int g_which = 1, g_steps = 200;
    std::string g_format = "csv", g_out = "-";
    cmd_figure->add_option("--which", g_which, "1: t in [0.1, 19.8]; 2: t in [20.2, 120]")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    cmd_figure->add_option("--steps", g_steps, "number of grid points");
    cmd_figure->add_option("--format", g_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_figure->add_option("--out", g_out, "output path ('-' = stdout)");

    auto* cmd_validate = app.add_subcommand(
        "validate", "cross-check the closed form against the quadrature oracle");
    ValidateOptions v;
    cmd_validate->add_option("--d", v.d, "single-point mode: atom-wall distance");
    cmd_validate->add_option("--t", v.t, "single-point mode: time");
    cmd_validate->add_option("--k0", v.k0, "transition wavenumber");
    cmd_validate->add_option("--mu", v.mu, "dipole moment");
    cmd_validate->add_option("--tol-energy", v.tol_energy, "energy agreement tolerance");
    cmd_validate->add_option("--tol-force", v.tol_force, "force agreement tolerance");
    cmd_validate->add_option("--tol-integral", v.tol_integral,
                             "base-integral agreement tolerance");
    cmd_validate->add_option("--abs-tol", v.abs_tol, "oracle quadrature tolerance");
    cmd_validate->add_option("--truncation-periods", v.truncation_periods,
                             "override the integral cutoff, in periods past x0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error.
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_static->parsed()) return run_static(s_d, s_k0, s_mu);
        if (cmd_force->parsed()) return run_force(f_d, f_t, f_k0, f_mu, f_guard);
        if (cmd_sweep->parsed()) {
            const auto result = cpdyn::sweep::evaluate_sweep(w_d, w_tmin, w_tmax, w_steps,
                                                             w_k0, w_mu, w_guard);
            return emit_sweep(result, w_format, w_out);
        }
        if (cmd_figure->parsed()) {
            const double t_min = g_which == 1 ? 0.1 : 20.2;
            const double t_max = g_which == 1 ? 19.8 : 120.0;
            const auto result = cpdyn::sweep::evaluate_sweep(
                10.0, t_min, t_max, g_steps, 1.0, 1.0, cpdyn::dynamics::kDefaultGuardBand);
            return emit_sweep(result, g_format, g_out);
        }
        if (cmd_validate->parsed()) return run_validate(v);
    } catch (const cpdyn::singular_band_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const cpdyn::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
