// Copyright 2026 The subsys Authors
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

#include "subsys/cli.h"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "subsys/code_builder.h"
#include "subsys/io.h"
#include "subsys/recovery.h"
#include "subsys/simulator.h"

namespace subsys {

using nlohmann::json;

namespace {

void write_json(const json &v, std::string &out, int indent) {
    auto pad = [&](int level) { out.append(static_cast<std::size_t>(level) * 2, ' '); };
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto &[key, item] : v.items()) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                pad(indent + 1);
                out += json(key).dump();
                out += ": ";
                write_json(item, out, indent + 1);
            }
            out += '\n';
            pad(indent);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0) {
                    out += ",\n";
                }
                pad(indent + 1);
                write_json(v[i], out, indent + 1);
            }
            out += '\n';
            pad(indent);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", v.get<double>());
            out += buf;
            return;
        }
        default:
            out += v.dump();
            return;
    }
}

json optional_json(const std::optional<std::size_t> &v) { return v ? json(*v) : json(nullptr); }

json params_json(std::size_t n, std::size_t k, const std::optional<std::size_t> &d) {
    return {{"n", n}, {"k", k}, {"d", optional_json(d)}};
}

json ops_json(std::span<const PauliGrid> ops) {
    json arr = json::array();
    for (const auto &op : ops) {
        arr.push_back(op.str());
    }
    return arr;
}

json matrix_json(const BitMatrix &m) { return m.row_strings(); }

struct CodePair {
    std::string c1;
    std::string c2;
};

void add_code_options(CLI::App *cmd, CodePair &pair) {
    cmd->add_option("--c1", pair.c1, "First classical code (rep:<n>, hamming:7-4, generator:<file>, parity:<file>)")
        ->required();
    cmd->add_option("--c2", pair.c2, "Second classical code")->required();
}

json info_report(const std::string &spec) {
    auto code = resolve_code_spec(spec);
    return {{"code", spec},
            {"n", code.n()},
            {"k", code.k()},
            {"d", optional_json(code.distance())},
            {"G", matrix_json(code.generator())},
            {"P", matrix_json(code.parity())},
            {"P_c", matrix_json(code.parity_complement())},
            {"G_c", matrix_json(code.generator_complement())}};
}

json counts_json(const CodeCounts &c) {
    return {{"total", c.stabilizers()}, {"z_type", c.z_stabilizers}, {"x_type", c.x_stabilizers}};
}

json build_report(const CodePair &pair, bool shor, bool verbose) {
    auto c1 = resolve_code_spec(pair.c1);
    auto c2 = resolve_code_spec(pair.c2);
    json report;
    if (shor) {
        auto code = build_shor(c1, c2);
        report = {{"construction", "shor"},
                  {"n", code.n()},
                  {"k", code.k()},
                  {"distance", optional_json(code.distance())},
                  {"stabilizers", counts_json(code.counts())},
                  {"logical_operators", code.logical_xs().size() + code.logical_zs().size()}};
        if (verbose) {
            report["stabilizer_generators"] = ops_json(code.stabilizers());
            report["logical_x"] = ops_json(code.logical_xs());
            report["logical_z"] = ops_json(code.logical_zs());
        }
    } else {
        auto code = build_subsystem(c1, c2);
        report = {{"construction", "subsystem"},
                  {"n", code.n()},
                  {"k", code.k()},
                  {"gauge_qubits", code.gauge_qubits()},
                  {"distance", optional_json(code.distance())},
                  {"stabilizers", counts_json(code.counts())},
                  {"gauge_generators", code.gauge_generators().size()},
                  {"logical_operators", code.logical_xs().size() + code.logical_zs().size()}};
        if (verbose) {
            report["stabilizer_generators"] = ops_json(code.stabilizers());
            report["gauge_generator_list"] = ops_json(code.gauge_generators());
            report["logical_x"] = ops_json(code.logical_xs());
            report["logical_z"] = ops_json(code.logical_zs());
        }
    }
    return report;
}

json distance_report(const CodePair &pair, std::size_t w_max, std::size_t workers) {
    auto code = build_subsystem(resolve_code_spec(pair.c1), resolve_code_spec(pair.c2));
    auto d = distance_bruteforce(code, w_max, workers);
    return {{"n", code.n()}, {"k", code.k()}, {"w_max", w_max}, {"distance", optional_json(d)}, {"above_bound", !d}};
}

json decode_report(const CodePair &pair, const std::string &error_text) {
    auto code = build_subsystem(resolve_code_spec(pair.c1), resolve_code_spec(pair.c2));
    auto error = parse_pauli_string(error_text, code.n1(), code.n2());
    auto syndrome = extract_syndrome(code, error);
    auto outcome = recover(code, error);
    return {{"error", error.str()},
            {"syndrome", {{"s_z", matrix_json(syndrome.s_z)}, {"s_x", matrix_json(syndrome.s_x)}}},
            {"correction", outcome.correction.str()},
            {"residual_u", matrix_json(outcome.residual_u)},
            {"residual_v", matrix_json(outcome.residual_v)},
            {"logical_ok", outcome.logical_ok}};
}

json simulate_report(const CodePair &pair, const std::string &model, double p, std::uint64_t trials,
                     std::uint64_t seed, std::size_t workers) {
    auto code = build_subsystem(resolve_code_spec(pair.c1), resolve_code_spec(pair.c2));
    auto noise = parse_noise_model(model, p);
    auto r = run_trials(code, noise, trials, seed, workers);
    return {{"trials", r.trials},
            {"logical_failures", r.logical_failures},
            {"rate", r.rate},
            {"std_error", r.std_error},
            {"seed", r.seed},
            {"noise", {{"model", noise.name()}, {"p", p}}},
            {"code",
             {{"n", r.code_params.n},
              {"k", r.code_params.k},
              {"gauge_qubits", r.code_params.gauge_qubits},
              {"stabilizer_count", r.code_params.stabilizers()}}}};
}

json compare_json(const CodePair &pair) {
    auto r = compare_report(resolve_code_spec(pair.c1), resolve_code_spec(pair.c2));
    json report = {{"c1", params_json(r.c1.n, r.c1.k, r.c1.d)},
                   {"c2", params_json(r.c2.n, r.c2.k, r.c2.d)},
                   {"quantum", params_json(r.quantum.n, r.quantum.k, r.quantum.d)},
                   {"gauge_qubits", r.gauge_qubits},
                   {"subsystem_stabilizers", r.subsystem.stabilizers()},
                   {"shor_stabilizers", r.shor.stabilizers()},
                   {"subsystem", counts_json(r.subsystem)},
                   {"shor", counts_json(r.shor)},
                   {"savings", r.savings}};
    if (r.composed) {
        const auto &s = *r.composed;
        report["composed"] = {{"base_stabilizers", s.base_stabilizers},
                              {"redundancy_layer_16", s.redundancy_layer},
                              {"redundancy_layer_9", s.redundancy_layer_9},
                              {"with_redundancy_layer_16", s.with_redundancy_layer},
                              {"with_redundancy_layer_9", s.with_redundancy_layer_9},
                              {"steane_inner", s.steane_inner},
                              {"steane_outer", s.steane_outer},
                              {"concatenated_steane", s.concatenated_steane}};
    }
    return report;
}

}  // namespace

std::string to_stable_json(const json &value) {
    std::string out;
    write_json(value, out, 0);
    out += '\n';
    return out;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Subsystem codes from pairs of classical linear codes"};
    app.require_subcommand(1);

    std::string info_spec;
    auto *info = app.add_subcommand("info", "Show a classical code and its complements");
    info->add_option("codespec", info_spec, "rep:<n>, hamming:7-4, generator:<file> or parity:<file>")->required();

    CodePair build_pair;
    bool shor = false;
    bool verbose = false;
    auto *build = app.add_subcommand("build", "Construct the subsystem (or generalized Shor) code");
    add_code_options(build, build_pair);
    build->add_flag("--shor", shor, "Build the generalized Shor subspace code instead");
    build->add_flag("--verbose", verbose, "List every generator");

    CodePair distance_pair;
    std::size_t w_max = 0;
    std::size_t distance_workers = 1;
    auto *distance = app.add_subcommand("distance", "Brute-force distance of the subsystem code");
    add_code_options(distance, distance_pair);
    distance->add_option("--wmax", w_max, "Largest operator weight searched")->required();
    distance->add_option("--workers", distance_workers, "Search threads")->check(CLI::Range(1, 256));

    CodePair decode_pair;
    std::string error_text;
    auto *decode = app.add_subcommand("decode", "Run one recovery on a given Pauli error");
    add_code_options(decode, decode_pair);
    decode->add_option("--error", error_text, "Error such as X@(0,0),Z@(1,2)")->required();

    CodePair sim_pair;
    std::string model;
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t sim_workers = 1;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo logical error rate");
    add_code_options(simulate, sim_pair);
    simulate->add_option("--noise", model, "depolarizing, independent_xz, x_only or z_only")->required();
    simulate->add_option("--p", p, "Physical error probability")->required();
    simulate->add_option("--trials", trials, "Number of trials")->required();
    simulate->add_option("--seed", seed, "64-bit seed")->required();
    simulate->add_option("--workers", sim_workers, "Worker threads; results do not depend on this")
        ->check(CLI::Range(1, 256));

    CodePair compare_pair;
    auto *compare = app.add_subcommand("compare", "Stabilizer counts, subsystem vs generalized Shor");
    add_code_options(compare, compare_pair);

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        json report;
        if (info->parsed()) {
            report = info_report(info_spec);
        } else if (build->parsed()) {
            report = build_report(build_pair, shor, verbose);
        } else if (distance->parsed()) {
            report = distance_report(distance_pair, w_max, distance_workers);
        } else if (decode->parsed()) {
            report = decode_report(decode_pair, error_text);
        } else if (simulate->parsed()) {
            report = simulate_report(sim_pair, model, p, trials, seed, sim_workers);
        } else if (compare->parsed()) {
            report = compare_json(compare_pair);
        }
        out << to_stable_json(report);
        return kExitOk;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace subsys
