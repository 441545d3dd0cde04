// Copyright 2026 The qfim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qfim: build graph/hypergraph/GHZ/parametric spin-basis states, compute
// QFI-based sensitivity metrics and concurrence, and run parameter sweeps.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfim/hypergraph.hpp"
#include "qfim/io.hpp"
#include "qfim/sweep.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnnormalized = 4;

int max_qubits_from_env() {
    const char *env = std::getenv("QFIM_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return qfim::kDefaultMaxQubits;
    }
    try {
        const int v = std::stoi(env);
        if (v >= 1 && v <= 62) {
            return v;
        }
    } catch (const std::exception &) {
    }
    std::cerr << "warning: ignoring invalid QFIM_MAX_QUBITS='" << env << "'\n";
    return qfim::kDefaultMaxQubits;
}

struct StateSourceFlags {
    std::string graph;
    std::string hypergraph;
    int ghz = 0;
    std::string params_json;
    std::string state_file;
    bool from_stdin = false;
    std::string edges;
    int vertices = 0;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--graph", graph, "edge-list text, e.g. \"3; 1 2; 2 3; 3 1\"");
        cmd->add_option("--hypergraph", hypergraph, "edge-list text, e.g. \"3; 1 2 3\"");
        cmd->add_option("--ghz", ghz, "GHZ state on n qubits");
        cmd->add_option("--params", params_json,
                        "spin-basis parameter JSON {\"alpha\":..,...}");
        cmd->add_option("--state-file", state_file, "path to a state JSON file");
        cmd->add_flag("--stdin", from_stdin, "read a state JSON from standard input");
        cmd->add_option("--edges", edges, "comma-separated edges, e.g. \"1 2,2 3,3 1\"");
        cmd->add_option("--vertices", vertices, "vertex count for --edges");
    }

    qfim::QubitState resolve(int max_qubits) const {
        int sources = 0;
        sources += !graph.empty();
        sources += !hypergraph.empty();
        sources += ghz > 0;
        sources += !params_json.empty();
        sources += !state_file.empty();
        sources += from_stdin;
        sources += !edges.empty();
        if (sources != 1) {
            throw qfim::ParseError("exactly one state source is required "
                                   "(--graph | --hypergraph | --ghz | --params | --state-file | "
                                   "--stdin | --edges with --vertices)",
                                   1, 1);
        }
        if (!graph.empty()) {
            return qfim::build_state(qfim::parse_hypergraph(graph), max_qubits);
        }
        if (!hypergraph.empty()) {
            return qfim::build_state(qfim::parse_hypergraph(hypergraph), max_qubits);
        }
        if (!edges.empty()) {
            if (vertices < 1) {
                throw qfim::ParseError("--edges needs --vertices", 1, 1);
            }
            return qfim::build_state(qfim::parse_hypergraph_flags(vertices, edges), max_qubits);
        }
        if (ghz > 0) {
            return qfim::ghz_state(ghz, max_qubits);
        }
        if (!params_json.empty()) {
            return qfim::realize(qfim::params_from_json(params_json));
        }
        std::string text;
        if (from_stdin) {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(state_file);
            if (!in) {
                throw qfim::ParseError("cannot open state file '" + state_file + "'", 1, 1);
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        return qfim::state_from_json(text, 1e-6, max_qubits);
    }
};

void write_output(const std::string &out_path, const std::string &payload) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw qfim::Error("cannot open output file '" + out_path + "'");
    }
    out << payload;
}

std::string pick_format(const std::string &format) {
    if (!format.empty()) {
        return format;
    }
    return isatty(STDOUT_FILENO) ? "table" : "json";
}

qfim::Constraint parse_constraint(const std::string &dependent, const std::string &sign) {
    qfim::Constraint c;
    if (dependent == "gamma") {
        c.dependent = qfim::Constraint::Dependent::Gamma;
    } else if (dependent == "delta") {
        c.dependent = qfim::Constraint::Dependent::Delta;
    } else if (dependent == "none" || dependent.empty()) {
        c.dependent = qfim::Constraint::Dependent::None;
    } else {
        throw qfim::ParseError("unknown dependent amplitude '" + dependent + "'", 1, 1);
    }
    if (sign == "-" || sign == "neg" || sign == "-1") {
        c.sign = -1;
    } else if (sign == "+" || sign == "pos" || sign == "+1" || sign.empty()) {
        c.sign = +1;
    } else {
        throw qfim::ParseError("unknown dependent sign '" + sign + "'", 1, 1);
    }
    return c;
}

qfim::ParamValues fixed_values_from_json(const std::string &text) {
    // The sweep base may be deliberately unnormalized (the constraint fills
    // the dependent amplitude), so this bypasses SpinParams validation.
    auto j = nlohmann::json::parse(text);
    qfim::ParamValues v;
    v.alpha = j.value("alpha", 0.0);
    v.beta = j.value("beta", 0.0);
    v.gamma = j.value("gamma", 0.0);
    v.delta = j.value("delta", 0.0);
    v.mu = j.value("mu", 0.0);
    v.nu = j.value("nu", 0.0);
    v.eta = j.value("eta", 0.0);
    return v;
}

int run(int argc, char **argv) {
    CLI::App app{"graph/hypergraph state sensitivity metrics and sweeps"};
    app.require_subcommand(1);
    app.fallthrough();
    const int max_qubits = max_qubits_from_env();

    std::string out_path;
    std::string format;
    app.add_option("--out", out_path, "output file (default: stdout)")->configurable(false);
    app.add_option("--format", format, "json | csv | table (default: table on a TTY, else json)")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    // ---- state ----
    auto *cmd_state = app.add_subcommand("state", "construct a state and print its JSON");
    StateSourceFlags state_src;
    state_src.add_to(cmd_state);

    // ---- metrics ----
    auto *cmd_metrics =
        app.add_subcommand("metrics", "QFI, chi^2, statistical speed, flags, concurrence");
    StateSourceFlags metrics_src;
    metrics_src.add_to(cmd_metrics);

    // ---- concurrence ----
    auto *cmd_conc = app.add_subcommand("concurrence", "bipartition concurrence report");
    StateSourceFlags conc_src;
    conc_src.add_to(cmd_conc);
    std::vector<std::string> extra_cuts;
    cmd_conc->add_option("--cut", extra_cuts,
                         "extra subset cut, e.g. --cut \"1 3\" (repeatable)");

    // ---- sweep ----
    auto *cmd_sweep = app.add_subcommand("sweep", "1-D chi^2 sweep over one parameter");
    std::string sweep_params, sweep_vary = "delta", sweep_dep = "none", sweep_sign = "+";
    double sweep_start = 0.0, sweep_stop = 0.0, sweep_step = 1e-4, refine_tol = 1e-6;
    bool sweep_locate = false;
    std::string sweep_locate_kind = "min";
    cmd_sweep->add_option("--params", sweep_params, "fixed parameter JSON (may omit the dependent)")
        ->required();
    cmd_sweep->add_option("--vary", sweep_vary, "delta | gamma | mu | nu | eta")->required();
    cmd_sweep->add_option("--start", sweep_start)->required();
    cmd_sweep->add_option("--stop", sweep_stop)->required();
    cmd_sweep->add_option("--step", sweep_step, "grid step (default 1e-4)");
    cmd_sweep->add_option("--dependent", sweep_dep, "gamma | delta | none");
    cmd_sweep->add_option("--dependent-sign", sweep_sign, "+ | -");
    cmd_sweep->add_flag("--locate", sweep_locate, "also refine and print the extremum");
    cmd_sweep->add_option("--extremum", sweep_locate_kind, "min | max (with --locate)");
    cmd_sweep->add_option("--refine-tol", refine_tol, "extremum refinement tolerance");

    // ---- phase-sweep ----
    auto *cmd_phase = app.add_subcommand("phase-sweep", "2-D chi^2 grid: phase x amplitude");
    std::string ph_params, ph_vary = "eta", ph_amp = "delta", ph_dep = "gamma", ph_sign = "+";
    double ph_start = 0.0, ph_stop = 6.283185307179586, ph_step = 0.0062831853071795865;
    double amp_start = 0.0, amp_stop = 0.7071067811865476;
    int amp_grid = 200;
    cmd_phase->add_option("--params", ph_params, "fixed parameter JSON")->required();
    cmd_phase->add_option("--vary", ph_vary, "mu | nu | eta")->required();
    cmd_phase->add_option("--amp", ph_amp, "delta | gamma (second axis)");
    cmd_phase->add_option("--start", ph_start, "phase start (default 0)");
    cmd_phase->add_option("--stop", ph_stop, "phase stop (default 2pi)");
    cmd_phase->add_option("--step", ph_step, "phase step (default pi/500)");
    cmd_phase->add_option("--amp-start", amp_start);
    cmd_phase->add_option("--amp-stop", amp_stop);
    cmd_phase->add_option("--grid", amp_grid, "amplitude axis intervals (default 200)");
    cmd_phase->add_option("--dependent", ph_dep, "gamma | delta | none");
    cmd_phase->add_option("--dependent-sign", ph_sign, "+ | -");

    // ---- reproduce ----
    auto *cmd_rep = app.add_subcommand("reproduce", "run a preset sweep and check its extrema");
    std::string target;
    std::string out_dir = ".";
    double rep_step = 1e-4, rep_refine = 1e-6;
    cmd_rep->add_option("target", target, "table1 | table2 | fig5 | fig6 | fig7")->required();
    cmd_rep->add_option("--out-dir", out_dir, "directory for CSV artifacts (default .)");
    cmd_rep->add_option("--step", rep_step, "amplitude grid step (default 1e-4)");
    cmd_rep->add_option("--refine-tol", rep_refine, "extremum refinement tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    if (cmd_state->parsed()) {
        const qfim::QubitState st = state_src.resolve(max_qubits);
        write_output(out_path, qfim::state_to_json(st));
        return 0;
    }

    if (cmd_metrics->parsed()) {
        const qfim::QubitState st = metrics_src.resolve(max_qubits);
        const qfim::MetricReport rep = qfim::metric_report(st);
        const qfim::ConcurrenceReport conc =
            st.n_qubits() >= 2 ? qfim::total_concurrence(st) : qfim::ConcurrenceReport{};
        const std::string fmt = pick_format(format);
        write_output(out_path, fmt == "table" ? qfim::combined_metrics_table(rep, conc)
                                              : qfim::combined_metrics_json(rep, conc));
        return 0;
    }

    if (cmd_conc->parsed()) {
        const qfim::QubitState st = conc_src.resolve(max_qubits);
        qfim::ConcurrenceReport rep = qfim::total_concurrence(st);
        for (const std::string &cut : extra_cuts) {
            std::istringstream in(cut);
            std::vector<int> subset;
            int q;
            while (in >> q) {
                subset.push_back(q);
            }
            std::string label = cut + "|rest";
            rep.per_cut.emplace_back(label, qfim::concurrence_cut(st, subset));
        }
        const std::string fmt = pick_format(format);
        if (fmt == "table") {
            std::ostringstream out;
            for (const auto &[label, e] : rep.per_cut) {
                out << label << "  " << e << "\n";
            }
            out << "total (1-vs-rest)  " << rep.total << "\n";
            write_output(out_path, out.str());
        } else {
            write_output(out_path, qfim::concurrence_to_json(rep));
        }
        return 0;
    }

    if (cmd_sweep->parsed()) {
        qfim::SweepSpec spec;
        spec.fixed = fixed_values_from_json(sweep_params);
        const auto vp = qfim::param_from_name(sweep_vary);
        if (!vp) {
            throw qfim::ParseError("unknown sweep parameter '" + sweep_vary + "'", 1, 1);
        }
        spec.vary = *vp;
        spec.start = sweep_start;
        spec.stop = sweep_stop;
        spec.step = sweep_step;
        spec.constraint = parse_constraint(sweep_dep, sweep_sign);
        const qfim::SweepResult res = qfim::run_sweep(spec);
        write_output(out_path, qfim::sweep_csv(spec, res));
        if (sweep_locate) {
            const auto kind = sweep_locate_kind == "max" ? qfim::ExtremumKind::Max
                                                         : qfim::ExtremumKind::Min;
            const qfim::Extremum ext = qfim::locate_extremum(spec, refine_tol, kind);
            std::cerr << "extremum (" << sweep_locate_kind << "): " << sweep_vary << " = "
                      << ext.parameter << ", chi2 = " << ext.chi2
                      << (ext.on_boundary ? " [boundary, unrefined]" : "") << "\n";
        }
        return 0;
    }

    if (cmd_phase->parsed()) {
        qfim::PhaseSweepSpec spec;
        spec.fixed = fixed_values_from_json(ph_params);
        const auto vp = qfim::param_from_name(ph_vary);
        const auto ap = qfim::param_from_name(ph_amp);
        if (!vp || !ap) {
            throw qfim::ParseError("unknown parameter name", 1, 1);
        }
        spec.phase = *vp;
        spec.amplitude = *ap;
        spec.phase_start = ph_start;
        spec.phase_stop = ph_stop;
        spec.phase_step = ph_step;
        spec.amp_start = amp_start;
        spec.amp_stop = amp_stop;
        spec.amp_step = (amp_stop - amp_start) / amp_grid;
        spec.constraint = parse_constraint(ph_dep, ph_sign);
        const qfim::GridResult res = qfim::run_phase_sweep(spec);
        write_output(out_path, qfim::phase_sweep_csv(spec, res));
        std::cerr << "grid max chi2 = " << res.rows[res.argmax].chi2 << " at " << ph_vary << " = "
                  << res.rows[res.argmax].phase << ", " << ph_amp << " = "
                  << res.rows[res.argmax].amplitude << "\n";
        return 0;
    }

    if (cmd_rep->parsed()) {
        const qfim::ReproduceReport rep = qfim::reproduce(target, rep_step, rep_refine);
        std::filesystem::create_directories(out_dir);
        for (const auto &art : rep.artifacts) {
            std::ofstream out(std::filesystem::path(out_dir) / art.name);
            out << art.csv;
        }
        std::ostringstream sum;
        sum << "# " << rep.target << ": " << rep.artifacts.size() << " CSV artifact(s) in '"
            << out_dir << "'\n";
        for (const auto &c : rep.checks) {
            sum << (c.pass ? "PASS" : "FAIL") << "  " << c.label << ": measured " << c.measured
                << ", expected " << c.expected << " +/- " << c.tolerance << "\n";
        }
        write_output(out_path, sum.str());
        return rep.all_pass ? 0 : 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const qfim::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qfim::NormalizationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnnormalized;
    } catch (const qfim::RangeDomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const qfim::InvalidSizeError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const qfim::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
