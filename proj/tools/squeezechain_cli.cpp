/*
 * Copyright 2026 The squeezechain authors
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

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "squeezechain/observables.hpp"
#include "squeezechain/oracle.hpp"
#include "squeezechain/parallel.hpp"
#include "squeezechain/version.hpp"

namespace {

using nlohmann::json;
using namespace squeezechain;

// locale-independent, 17 significant digits (round-trippable doubles)
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_table(const Table& table, const std::string& path,
                 const std::string& format) {
    std::ostringstream body;
    if (format == "csv") {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            body << (c ? "," : "") << table.columns[c];
        }
        body << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                body << (c ? "," : "") << format_double(row[c]);
            }
            body << "\n";
        }
    } else {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json obj;
            for (std::size_t c = 0; c < row.size(); ++c) {
                obj[table.columns[c]] = row[c];
            }
            rows.push_back(obj);
        }
        body << rows.dump(2) << "\n";
    }
    if (path.empty() || path == "-") {
        std::cout << body.str();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file: " + path);
    }
    out << body.str();
}

void write_manifest(const std::string& output_path, const json& manifest) {
    if (output_path.empty() || output_path == "-") {
        std::cerr << "manifest: " << manifest.dump() << "\n";
        return;
    }
    std::ofstream out(output_path + ".manifest.json", std::ios::binary);
    if (!out) {
        throw Error("cannot open manifest file: " + output_path +
                    ".manifest.json");
    }
    out << manifest.dump(2) << "\n";
}

json base_manifest(const std::string& subcommand, double delta, int workers,
                   const std::string& output, const std::string& format) {
    json m;
    m["subcommand"] = subcommand;
    m["version"] = kVersion;
    m["delta"] = delta;
    m["workers"] = resolve_workers(workers);
    m["output"] = output;
    m["format"] = format;
    return m;
}

struct CommonOpts {
    double delta = 0.8;
    int n_sites = 100;
    std::string output;
    std::string format = "csv";
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_sites = true) {
    cmd->add_option("--delta", opts.delta, "anisotropy in (0, 1]")
        ->capture_default_str();
    if (with_sites) {
        cmd->add_option("--n-sites", opts.n_sites, "chain length N")
            ->capture_default_str();
    }
    cmd->add_option("--output", opts.output,
                    "output file path ('-' or empty for stdout)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--workers", opts.workers,
                    "worker threads (0 = SQUEEZECHAIN_WORKERS or hardware)");
}

int run_ground_sweep(const CommonOpts& opts, double h_min, double h_max,
                     int steps) {
    if (steps < 1 || !(h_max > h_min)) {
        throw InvalidParameterError("ground sweep needs h-max > h-min and "
                                    "steps >= 1");
    }
    const ModelParams params(opts.n_sites, opts.delta);
    std::vector<double> h_list;
    h_list.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        h_list.push_back(h_min + (h_max - h_min) * i / steps);
    }
    const GroundSweep sweep = ground_state_sweep(params, h_list, opts.workers);
    Table table{{"h", "xi2"}, {}};
    for (std::size_t i = 0; i < sweep.h_values.size(); ++i) {
        table.rows.push_back({sweep.h_values[i], sweep.xi2[i]});
    }
    write_table(table, opts.output, opts.format);
    json manifest = base_manifest("ground-sweep", opts.delta, opts.workers,
                                  opts.output, opts.format);
    manifest["n_sites"] = opts.n_sites;
    manifest["h_min"] = h_min;
    manifest["h_max"] = h_max;
    manifest["steps"] = steps;
    manifest["columns"] = table.columns;
    write_manifest(opts.output, manifest);
    return 0;
}

int run_quench(const CommonOpts& opts, double h1, double h2, double t_min,
               double t_max, double dt) {
    if (!(dt > 0.0) || !(t_max >= t_min) || t_min < 0.0) {
        throw InvalidParameterError("quench needs t-max >= t-min >= 0, dt > 0");
    }
    const ModelParams params(opts.n_sites, opts.delta);
    const QuenchSpec quench = make_quench(params, h1, h2);
    std::vector<double> grid;
    for (double t = t_min; t <= t_max + 1e-12; t += dt) grid.push_back(t);
    const Trajectory traj = evolve(params, quench, grid, opts.workers);
    Table table{{"t", "xi2", "var_jz", "mz"}, {}};
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        table.rows.push_back(
            {traj.times[i], traj.xi2[i], traj.var_jz[i], traj.mz[i]});
    }
    write_table(table, opts.output, opts.format);
    json manifest = base_manifest("quench", opts.delta, opts.workers,
                                  opts.output, opts.format);
    manifest["n_sites"] = opts.n_sites;
    manifest["h1"] = h1;
    manifest["h2"] = h2;
    manifest["t_min"] = t_min;
    manifest["t_max"] = t_max;
    manifest["dt"] = dt;
    manifest["columns"] = table.columns;
    write_manifest(opts.output, manifest);
    return 0;
}

int run_average_sweep(const CommonOpts& opts, double h1, double h2_min,
                      double h2_max, int h2_steps,
                      const std::vector<double>& window_opt, double avg_step) {
    if (h2_steps < 1 || !(h2_max > h2_min)) {
        throw InvalidParameterError(
            "average sweep needs h2-max > h2-min and h2-steps >= 1");
    }
    const ModelParams params(opts.n_sites, opts.delta);
    std::vector<double> h2_list;
    for (int i = 0; i <= h2_steps; ++i) {
        h2_list.push_back(h2_min + (h2_max - h2_min) * i / h2_steps);
    }
    std::optional<AveragingWindow> window;
    if (!window_opt.empty()) {
        if (window_opt.size() != 2) {
            throw InvalidParameterError("--avg-window takes two values");
        }
        window = AveragingWindow{window_opt[0], window_opt[1], avg_step};
    }
    const AverageCurve curve =
        average_sweep(params, h1, h2_list, window, opts.workers);
    Table table{{"h2", "xi2_avg", "var_avg"}, {}};
    for (std::size_t i = 0; i < curve.h2_values.size(); ++i) {
        table.rows.push_back(
            {curve.h2_values[i], curve.xi2_avg[i], curve.var_avg[i]});
    }
    write_table(table, opts.output, opts.format);
    json manifest = base_manifest("average-sweep", opts.delta, opts.workers,
                                  opts.output, opts.format);
    manifest["n_sites"] = opts.n_sites;
    manifest["h1"] = h1;
    manifest["h2_min"] = h2_min;
    manifest["h2_max"] = h2_max;
    manifest["h2_steps"] = h2_steps;
    manifest["window"] = {{"t_min", curve.window.t_min},
                          {"t_max", curve.window.t_max},
                          {"step", curve.window.step}};
    manifest["columns"] = table.columns;
    write_manifest(opts.output, manifest);
    return 0;
}

int run_revival_scan(const CommonOpts& opts, double h1, double h2,
                     const std::vector<int>& sizes, double dt) {
    const RevivalFit fit =
        revival_scan(opts.delta, h1, h2, sizes, dt, opts.workers);
    Table table{{"n_sites", "t_rev"}, {}};
    for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
        table.rows.push_back(
            {static_cast<double>(fit.sizes[i]), fit.revival_times[i]});
    }
    write_table(table, opts.output, opts.format);
    for (int skipped : fit.skipped) {
        std::cerr << "warning: no revival found for N = " << skipped
                  << "; excluded from fit\n";
    }
    std::cout << "k = " << format_double(fit.slope) << " +/- "
              << format_double(fit.slope_err) << "\n";
    json manifest = base_manifest("revival-scan", opts.delta, opts.workers,
                                  opts.output, opts.format);
    manifest["h1"] = h1;
    manifest["h2"] = h2;
    manifest["sizes"] = sizes;
    manifest["dt"] = dt;
    manifest["slope"] = fit.slope;
    manifest["slope_err"] = fit.slope_err;
    manifest["max_rel_residual"] = fit.max_rel_residual;
    manifest["skipped"] = fit.skipped;
    manifest["columns"] = table.columns;
    write_manifest(opts.output, manifest);
    return 0;
}

int run_oracle_check(double delta_unused, int tuples, unsigned seed,
                     const std::string& output, int workers) {
    (void)delta_unused;
    (void)workers;
    constexpr double kTolerance = 1e-9;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> delta_dist(0.2, 1.0);
    std::uniform_real_distribution<double> field_dist(0.0, 2.0);
    std::uniform_real_distribution<double> time_dist(0.0, 3.0);

    json report;
    report["version"] = kVersion;
    report["tolerance"] = kTolerance;
    report["cases"] = json::array();

    double worst = 0.0;
    for (int i = 0; i < tuples; ++i) {
        const double delta = delta_dist(rng);
        const double h1 = field_dist(rng);
        const double h2 = field_dist(rng);
        const double t = time_dist(rng);
        for (int n : {4, 6, 8}) {
            const ModelParams params(n, delta);
            const oracle::OracleComparison cmp =
                oracle::compare_against_oracle(params, h1, h2, t);
            worst = std::max(worst, cmp.worst);
            report["cases"].push_back({{"n_sites", n},
                                       {"delta", delta},
                                       {"h1", h1},
                                       {"h2", h2},
                                       {"t", t},
                                       {"worst_kernel", cmp.worst_kernel},
                                       {"worst_correlator", cmp.worst_correlator},
                                       {"worst_observable", cmp.worst_observable}});
            std::cout << "N=" << n << " delta=" << format_double(delta)
                      << " h1=" << format_double(h1)
                      << " h2=" << format_double(h2)
                      << " t=" << format_double(t)
                      << " worst=" << format_double(cmp.worst) << "\n";
        }
    }
    report["worst"] = worst;
    report["pass"] = worst < kTolerance;
    if (!output.empty() && output != "-") {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw Error("cannot open output file: " + output);
        out << report.dump(2) << "\n";
    }
    std::cout << (worst < kTolerance ? "PASS" : "FAIL")
              << " worst mismatch = " << format_double(worst) << "\n";
    return worst < kTolerance ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spin-squeezing dynamics of the transverse-field XY "
                 "chain (free-fermion Pfaffian method)"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a config file");
    app.set_version_flag("--version", kVersion);

    CommonOpts gs_opts, q_opts, avg_opts, rev_opts;

    auto* gs = app.add_subcommand("ground-sweep",
                                  "ground-state xi_s^2 versus field h");
    add_common(gs, gs_opts);
    double h_min = 0.0, h_max = 2.0;
    int steps = 200;
    gs->add_option("--h-min", h_min, "sweep start")->capture_default_str();
    gs->add_option("--h-max", h_max, "sweep end")->capture_default_str();
    gs->add_option("--steps", steps, "number of grid intervals")
        ->capture_default_str();

    auto* q = app.add_subcommand("quench",
                                 "post-quench trajectory xi_s^2, nu(J_z), M_z");
    add_common(q, q_opts);
    double q_h1 = 0.8, q_h2 = 1.0, t_min = 0.0, t_max = 50.0, dt = 0.1;
    q->add_option("--h1", q_h1, "pre-quench field")->capture_default_str();
    q->add_option("--h2", q_h2, "post-quench field")->capture_default_str();
    q->add_option("--t-min", t_min, "first time")->capture_default_str();
    q->add_option("--t-max", t_max, "last time")->capture_default_str();
    q->add_option("--dt", dt, "time step")->capture_default_str();

    auto* avg = app.add_subcommand(
        "average-sweep", "long-time averages versus post-quench field");
    add_common(avg, avg_opts);
    double a_h1 = 0.8, h2_min = 0.1, h2_max = 3.0, avg_step = 0.1;
    int h2_steps = 29;
    std::vector<double> window_opt;
    avg->add_option("--h1", a_h1, "pre-quench field")->capture_default_str();
    avg->add_option("--h2-min", h2_min, "sweep start")->capture_default_str();
    avg->add_option("--h2-max", h2_max, "sweep end")->capture_default_str();
    avg->add_option("--h2-steps", h2_steps, "number of grid intervals")
        ->capture_default_str();
    avg->add_option("--avg-window", window_opt,
                    "averaging window t_min t_max (default: [5, 0.8 T_rev])")
        ->expected(2);
    avg->add_option("--avg-step", avg_step, "averaging time step")
        ->capture_default_str();

    auto* rev = app.add_subcommand("revival-scan",
                                   "first-revival times and linear size fit");
    add_common(rev, rev_opts, /*with_sites=*/false);
    double r_h1 = 0.9, r_h2 = 1.0, r_dt = 0.25;
    std::vector<int> sizes;
    rev->add_option("--h1", r_h1, "pre-quench field")->capture_default_str();
    rev->add_option("--h2", r_h2, "post-quench field")->capture_default_str();
    rev->add_option("--sizes", sizes, "chain sizes (comma separated, >= 80)")
        ->delimiter(',')
        ->required();
    rev->add_option("--dt", r_dt, "trajectory time step")->capture_default_str();

    auto* oc = app.add_subcommand(
        "oracle-check", "validate kernels, correlators and observables "
                        "against the 2^N Fock oracle (N <= 8)");
    int oc_tuples = 20;
    unsigned oc_seed = 20260810;
    std::string oc_output;
    int oc_workers = 0;
    oc->add_option("--tuples", oc_tuples, "random parameter tuples")
        ->capture_default_str();
    oc->add_option("--seed", oc_seed, "RNG seed")->capture_default_str();
    oc->add_option("--output", oc_output, "JSON report path");
    oc->add_option("--workers", oc_workers, "unused; accepted for symmetry");

    try {
        app.parse(argc, argv);
        if (gs->parsed()) return run_ground_sweep(gs_opts, h_min, h_max, steps);
        if (q->parsed()) return run_quench(q_opts, q_h1, q_h2, t_min, t_max, dt);
        if (avg->parsed()) {
            return run_average_sweep(avg_opts, a_h1, h2_min, h2_max, h2_steps,
                                     window_opt, avg_step);
        }
        if (rev->parsed()) {
            return run_revival_scan(rev_opts, r_h1, r_h2, sizes, r_dt);
        }
        if (oc->parsed()) {
            return run_oracle_check(0.0, oc_tuples, oc_seed, oc_output,
                                    oc_workers);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
