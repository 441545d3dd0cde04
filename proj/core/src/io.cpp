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

#include "qfim/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace qfim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double require_number(const nlohmann::json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ParseError(std::string("missing or non-numeric field '") + key + "'", 1, 1);
    }
    return j.at(key).get<double>();
}

}  // namespace

std::string state_to_json(const QubitState &state) {
    std::ostringstream out;
    out << "{\"n_qubits\": " << state.n_qubits() << ", \"amplitudes\": [";
    for (std::size_t i = 0; i < state.dim(); i++) {
        if (i) {
            out << ", ";
        }
        out << '[' << fmt17(state.amplitude(i).real()) << ", " << fmt17(state.amplitude(i).imag())
            << ']';
    }
    out << "]}";
    return out.str();
}

QubitState state_from_json(const std::string &text, double norm_tol, int max_qubits) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("state JSON: ") + e.what(), 1, 1);
    }
    if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
        throw ParseError("state JSON needs an integer 'n_qubits'", 1, 1);
    }
    const int n = j["n_qubits"].get<int>();
    if (n < 1 || n > max_qubits) {
        throw InvalidSizeError("n_qubits " + std::to_string(n) + " outside [1, " +
                               std::to_string(max_qubits) + "]");
    }
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw ParseError("state JSON needs an 'amplitudes' array", 1, 1);
    }
    std::vector<cplx> amps;
    amps.reserve(j["amplitudes"].size());
    for (const auto &entry : j["amplitudes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ParseError("each amplitude must be a [re, im] pair", 1, 1);
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return QubitState(n, std::move(amps), norm_tol);
}

std::string metric_report_to_json(const MetricReport &rep) {
    ordered_json j;
    j["n"] = rep.n;
    j["f_q"] = rep.f_q;
    if (rep.no_sensitivity) {
        j["chi2"] = nullptr;
        j["no_sensitivity"] = true;
    } else {
        j["chi2"] = rep.chi_squared;
    }
    j["v_f"] = rep.v_f;
    j["var_max"] = rep.var_max;
    j["degenerate_frame"] = rep.degenerate_frame;
    j["shot_noise_beaten"] = rep.shot_noise_beaten;
    j["heisenberg_attained"] = rep.heisenberg_attained;
    return j.dump();
}

std::string concurrence_to_json(const ConcurrenceReport &rep) {
    ordered_json cuts = ordered_json::object();
    for (const auto &[label, e] : rep.per_cut) {
        cuts[label] = e;
    }
    ordered_json j;
    j["cuts"] = cuts;
    j["total"] = rep.total;
    return j.dump();
}

std::string combined_metrics_json(const MetricReport &rep, const ConcurrenceReport &conc) {
    ordered_json j = ordered_json::parse(metric_report_to_json(rep));
    if (!rep.no_sensitivity) {
        j["delta_theta_qcr"] = rep.delta_theta_qcr;
    } else {
        j["delta_theta_qcr"] = nullptr;
    }
    j["concurrence"] = ordered_json::parse(concurrence_to_json(conc));
    return j.dump();
}

std::string combined_metrics_table(const MetricReport &rep, const ConcurrenceReport &conc) {
    std::ostringstream out;
    out << "n qubits              " << rep.n << "\n";
    out << "F_Q                   " << fmt6(rep.f_q) << "\n";
    if (rep.no_sensitivity) {
        out << "chi^2                 inf (no sensitivity)\n";
        out << "delta theta (QCR)     inf\n";
    } else {
        out << "chi^2                 " << fmt6(rep.chi_squared) << "\n";
        out << "delta theta (QCR)     " << fmt6(rep.delta_theta_qcr) << "\n";
    }
    out << "statistical speed v_F " << fmt6(rep.v_f) << "\n";
    out << "max perp variance     " << fmt6(rep.var_max) << "\n";
    out << "degenerate frame      " << (rep.degenerate_frame ? "yes" : "no") << "\n";
    out << "F_Q > N               " << (rep.shot_noise_beaten ? "yes" : "no") << "\n";
    out << "F_Q = N^2             " << (rep.heisenberg_attained ? "yes" : "no") << "\n";
    for (const auto &[label, e] : conc.per_cut) {
        out << "concurrence " << label << "       " << fmt6(e) << "\n";
    }
    out << "concurrence total     " << fmt6(conc.total) << "\n";
    return out.str();
}

SpinParams params_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("parameter JSON: ") + e.what(), 1, 1);
    }
    try {
        const double alpha = require_number(j, "alpha");
        const double beta = require_number(j, "beta");
        const double gamma = require_number(j, "gamma");
        const double delta = require_number(j, "delta");
        const double mu = j.value("mu", 0.0);
        const double nu = j.value("nu", 0.0);
        const double eta = j.value("eta", 0.0);
        return SpinParams(alpha, beta, gamma, delta, mu, nu, eta, 1e-6);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("parameter JSON: ") + e.what(), 1, 1);
    }
}

std::string params_to_json(const SpinParams &p) {
    std::ostringstream out;
    out << "{\"alpha\": " << fmt17(p.alpha) << ", \"beta\": " << fmt17(p.beta)
        << ", \"gamma\": " << fmt17(p.gamma) << ", \"delta\": " << fmt17(p.delta)
        << ", \"mu\": " << fmt17(p.mu) << ", \"nu\": " << fmt17(p.nu)
        << ", \"eta\": " << fmt17(p.eta) << "}";
    return out.str();
}

}  // namespace qfim
