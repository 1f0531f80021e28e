// Copyright 2026 The bellport authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the bellport shared library. Talks to the
// library exclusively through the C API in bellport/bellport.h.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration or parse
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellport/bellport.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;

struct MatrixDeleter {
    void operator()(bp_matrix *m) const { bp_matrix_free(m); }
};
struct InputDeleter {
    void operator()(bp_input *i) const { bp_input_free(i); }
};
struct StateDeleter {
    void operator()(bp_state *s) const { bp_state_free(s); }
};
using MatrixPtr = std::unique_ptr<bp_matrix, MatrixDeleter>;
using InputPtr = std::unique_ptr<bp_input, InputDeleter>;
using StatePtr = std::unique_ptr<bp_state, StateDeleter>;

// Managed view of a char* returned by the library.
std::string take_string(char *s) {
    std::string out = s == nullptr ? std::string() : std::string(s);
    bp_string_free(s);
    return out;
}

[[noreturn]] void fail_config(const std::string &message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitConfigError);
}

void expect_ok(bp_status status, const std::string &context) {
    if (status != BP_OK) {
        fail_config(context + ": " + bp_last_error_message() + " [" + bp_status_name(status) + "]");
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail_config("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << "\n";
        }
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        fail_config("cannot write " + out_path);
    }
    out << text;
}

json parse_config_json(const std::string &path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        fail_config(path + ": " + e.what());
    }
}

double number_field(const json &j, const std::string &where) {
    if (!j.is_number()) {
        fail_config(where + " must be a number");
    }
    return j.get<double>();
}

struct RunConfig {
    int n_ports = 0;
    MatrixPtr unitary;
    InputPtr input;  // null when the config has no "inputs"
};

// {"n_ports": int, "unitary": "bell" | {"entries": [[[re,im],...],...]},
//  "inputs": [{"plus": [re,im], "minus": [re,im]}, ...]}
RunConfig load_config(const std::string &path, bool require_inputs) {
    const json config = parse_config_json(path);
    if (!config.is_object() || !config.contains("n_ports") || !config["n_ports"].is_number_integer()) {
        fail_config(path + ": config needs an integer \"n_ports\" field");
    }

    RunConfig run;
    run.n_ports = config["n_ports"].get<int>();
    if (run.n_ports < 1) {
        fail_config(path + ": n_ports must be positive");
    }

    if (!config.contains("unitary")) {
        fail_config(path + ": config needs a \"unitary\" field (\"bell\" or {\"entries\": ...})");
    }
    const json &unitary = config["unitary"];
    if (unitary.is_string() && unitary.get<std::string>() == "bell") {
        bp_matrix *m = nullptr;
        expect_ok(bp_matrix_bell(run.n_ports, &m), path + ": unitary");
        run.unitary.reset(m);
    } else if (unitary.is_object() && unitary.contains("entries")) {
        const json &rows = unitary["entries"];
        if (!rows.is_array() || rows.size() != static_cast<size_t>(run.n_ports)) {
            fail_config(path + ": unitary.entries must be an n_ports x n_ports array");
        }
        std::vector<double> flat;
        flat.reserve(static_cast<size_t>(2 * run.n_ports) * run.n_ports);
        for (size_t r = 0; r < rows.size(); r++) {
            if (!rows[r].is_array() || rows[r].size() != static_cast<size_t>(run.n_ports)) {
                fail_config(path + ": unitary.entries row " + std::to_string(r) + " must have n_ports entries");
            }
            for (size_t c = 0; c < rows[r].size(); c++) {
                const json &e = rows[r][c];
                if (!e.is_array() || e.size() != 2) {
                    fail_config(path + ": unitary.entries[" + std::to_string(r) + "][" + std::to_string(c) +
                                "] must be [re, im]");
                }
                flat.push_back(number_field(e[0], "unitary entry re"));
                flat.push_back(number_field(e[1], "unitary entry im"));
            }
        }
        bp_matrix *m = nullptr;
        expect_ok(bp_matrix_create(run.n_ports, flat.data(), &m), path + ": unitary");
        run.unitary.reset(m);
    } else {
        fail_config(path + ": unitary must be \"bell\" or an object with \"entries\"");
    }

    if (config.contains("inputs")) {
        const json &inputs = config["inputs"];
        if (!inputs.is_array() || inputs.size() != static_cast<size_t>(run.n_ports)) {
            fail_config(path + ": inputs must list exactly n_ports photons");
        }
        std::vector<double> amps;
        amps.reserve(static_cast<size_t>(4 * run.n_ports));
        for (size_t i = 0; i < inputs.size(); i++) {
            const json &photon = inputs[i];
            const std::string where = path + ": inputs[" + std::to_string(i) + "]";
            if (!photon.is_object() || !photon.contains("plus") || !photon.contains("minus") ||
                !photon["plus"].is_array() || photon["plus"].size() != 2 || !photon["minus"].is_array() ||
                photon["minus"].size() != 2) {
                fail_config(where + " needs \"plus\": [re, im] and \"minus\": [re, im]");
            }
            amps.push_back(number_field(photon["plus"][0], where + ".plus re"));
            amps.push_back(number_field(photon["plus"][1], where + ".plus im"));
            amps.push_back(number_field(photon["minus"][0], where + ".minus re"));
            amps.push_back(number_field(photon["minus"][1], where + ".minus im"));
        }
        bp_input *input = nullptr;
        expect_ok(bp_input_create(run.n_ports, amps.data(), &input), path + ": inputs");
        run.input.reset(input);
    } else if (require_inputs) {
        fail_config(path + ": config needs an \"inputs\" array");
    }

    return run;
}

json state_report(const bp_state *state) {
    char *text = nullptr;
    expect_ok(bp_state_to_json(state, &text), "state serialization");
    return json::parse(take_string(text));
}

json fidelity_or_null(const bp_state *state, bp_canonical_kind kind, int n) {
    bp_state *reference = nullptr;
    if (bp_canonical_state(kind, n, &reference) != BP_OK) {
        return nullptr;  // kind undefined at this port count
    }
    const StatePtr guard(reference);
    double f = 0.0;
    if (bp_state_fidelity(state, reference, &f) != BP_OK) {
        return nullptr;  // empty state has no direction to compare
    }
    return f;
}

int run_simulate(const std::string &config_path, const std::string &out_path) {
    const RunConfig run = load_config(config_path, /*require_inputs=*/true);

    bp_state *raw = nullptr;
    expect_ok(bp_postselect(run.unitary.get(), run.input.get(), &raw), config_path);
    const StatePtr state(raw);

    double p = 0.0;
    expect_ok(bp_state_success_probability(state.get(), &p), "success probability");

    int32_t term_count = 0;
    expect_ok(bp_state_term_count(state.get(), &term_count), "term count");

    json report;
    report["n_ports"] = run.n_ports;
    report["empty"] = term_count == 0;
    report["success_probability"] = p;

    char *rational = nullptr;
    expect_ok(bp_rational_label(p, 64, &rational), "probability label");
    report["success_probability_rational"] = rational == nullptr ? json(nullptr) : json(take_string(rational));

    report["state_raw"] = state_report(state.get());

    bp_state *unit = nullptr;
    if (bp_state_normalized(state.get(), &unit) == BP_OK) {
        const StatePtr unit_guard(unit);
        report["state_normalized"] = state_report(unit);
    } else {
        report["state_normalized"] = nullptr;
    }

    json fidelities;
    fidelities["w"] = fidelity_or_null(state.get(), BP_CANONICAL_W, run.n_ports);
    fidelities["w_prime"] = fidelity_or_null(state.get(), BP_CANONICAL_W_PRIME, run.n_ports);
    if (run.n_ports == 4) {
        fidelities["ghz4"] = fidelity_or_null(state.get(), BP_CANONICAL_GHZ4, 4);
        fidelities["double_singlet4"] = fidelity_or_null(state.get(), BP_CANONICAL_DOUBLE_SINGLET4, 4);
    }
    report["fidelities"] = std::move(fidelities);

    if (run.n_ports == 4) {
        bp_decomposition d;
        expect_ok(bp_decompose4(run.input.get(), &d), "decomposition");
        char *text = nullptr;
        expect_ok(bp_decomposition_to_json(&d, &text), "decomposition");
        report["decomposition"] = json::parse(take_string(text));
    }

    write_output(report.dump(2), out_path);
    return kExitOk;
}

int run_sweep(int n_min, int n_max, const std::string &out_path) {
    char *csv = nullptr;
    expect_ok(bp_sweep_w_csv(n_min, n_max, &csv), "sweep");
    write_output(take_string(csv), out_path);
    return kExitOk;
}

int run_fit(const std::string &in_path, const std::string &out_path) {
    bp_fit_result fit;
    expect_ok(bp_fit_csv(read_file(in_path).c_str(), &fit), in_path);
    char *text = nullptr;
    expect_ok(bp_fit_to_json(&fit, &text), "fit serialization");
    write_output(take_string(text), out_path);
    return kExitOk;
}

int run_verify(int max_n, const std::string &config_path) {
    MatrixPtr configured;
    if (!config_path.empty()) {
        RunConfig run = load_config(config_path, /*require_inputs=*/false);
        configured = std::move(run.unitary);
    }
    char *text = nullptr;
    int32_t all_passed = 0;
    expect_ok(bp_verify(max_n, configured.get(), &text, &all_passed), "verify");
    std::cout << take_string(text);
    std::cout << (all_passed ? "all checks passed\n" : "verification FAILED\n");
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multiport single-photon interference simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    auto *simulate = app.add_subcommand("simulate", "Postselected output state of a configured run");
    simulate->add_option("--config", config_path, "JSON run configuration")->required();
    simulate->add_option("--out", out_path, "write the JSON report here instead of stdout");

    int n_min = 2;
    int n_max = 18;
    std::string sweep_out;
    auto *sweep = app.add_subcommand("sweep", "W-state success probabilities over a range of port counts");
    sweep->add_option("--min", n_min, "smallest port count")->capture_default_str();
    sweep->add_option("--max", n_max, "largest port count")->capture_default_str();
    sweep->add_option("--out", sweep_out, "write the CSV here instead of stdout");

    std::string fit_in;
    std::string fit_out;
    auto *fit = app.add_subcommand("fit", "exponential fit of a sweep CSV");
    fit->add_option("--in", fit_in, "sweep CSV path")->required();
    fit->add_option("--out", fit_out, "write the JSON fit here instead of stdout");

    int max_n = 5;
    std::string verify_config;
    auto *verify = app.add_subcommand("verify", "cross-check the simulator against brute-force references");
    verify->add_option("--max-n", max_n, "largest port count to verify (2..7)")->required();
    verify->add_option("--config", verify_config, "also check this config's unitary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfigError;
    }

    if (*simulate) {
        return run_simulate(config_path, out_path);
    }
    if (*sweep) {
        return run_sweep(n_min, n_max, sweep_out);
    }
    if (*fit) {
        return run_fit(fit_in, fit_out);
    }
    return run_verify(max_n, verify_config);
}
