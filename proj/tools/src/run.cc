// Copyright 2026 The Quantromon Toolkit Authors
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

#include "run.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "quantromon/errors.h"
#include "quantromon/shot_io.h"

namespace quantromon::cli {

namespace {

double relative_delta(double analytic, double numeric) {
    if (analytic == 0.0) {
        return numeric == 0.0 ? 0.0 : std::copysign(INFINITY, numeric);
    }
    return (numeric - analytic) / std::abs(analytic);
}

std::int64_t as_int(int v) {
    return static_cast<std::int64_t>(v);
}

Truncation parse_trunc(const std::string &text) {
    auto x = text.find('x');
    Truncation t;
    try {
        if (x == std::string::npos) {
            throw std::invalid_argument(text);
        }
        std::size_t used = 0;
        t.n_q = std::stoi(text.substr(0, x), &used);
        if (used != x) {
            throw std::invalid_argument(text);
        }
        auto rest = text.substr(x + 1);
        t.n_r = std::stoi(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument(text);
        }
    } catch (const std::logic_error &) {
        throw ValidationError("--trunc: expected <nq>x<nr>, got '" + text + "'");
    }
    t.check();
    return t;
}

void require_file(const std::string &path, const std::string &what) {
    if (!std::filesystem::is_regular_file(path)) {
        throw ValidationError(what + ": no such file '" + path + "'");
    }
}

void require_parent_dir(const std::string &path, const std::string &what) {
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
        throw ValidationError(what + ": directory '" + parent.string() + "' does not exist");
    }
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open '" + path + "' for writing");
    }
    out << text;
}

}  // namespace

Table energies_table(const RunConfig &cfg) {
    auto en = derive_energies(cfg.circuit);
    Table t{"energies", {"e_j", "e_lr", "e_cq", "e_cr", "e_jq", "e_jr", "e_jsigma", "b", "d_j", "inductive_ratio"}, {}};
    t.add({en.e_j, en.e_lr, en.e_cq, en.e_cr, en.e_jq, en.e_jr, en.e_jsigma(), en.b, en.d_j, en.inductive_ratio()});
    return t;
}

Table spectrum_table(const RunConfig &cfg) {
    auto en = derive_energies(cfg.circuit);
    auto a = dressed_spectrum(en);
    auto n = numeric_spectrum(en, cfg.trunc);
    Table t{"spectrum", {"quantity", "analytic", "numeric", "rel_delta"}, {}};
    auto row = [&](const char *name, double av, double nv) {
        t.add({std::string(name), av, nv, relative_delta(av, nv)});
    };
    row("omega_q_t", a.omega_q_t, n.omega_q_t);
    row("omega_r_t", a.omega_r_t, n.omega_r_t);
    row("delta", a.delta(), n.delta());
    row("alpha_q", a.alpha_q, n.alpha_q);
    row("two_chi", a.two_chi, n.two_chi);
    row("g_asymm", a.g_asymm, n.g_asymm);
    row("two_chi_total", a.two_chi_total, n.two_chi_total);
    return t;
}

Table chi_sweep_table(const RunConfig &cfg, std::ostream &warn) {
    auto rows = sweep(cfg.circuit, resolve_flux(cfg), cfg.flux.n_list, cfg.coherence);
    Table t{"chi-sweep",
            {"n", "ok", "e_jsigma", "d_j", "omega_q_t", "omega_r_t", "delta", "two_chi", "g_asymm", "two_chi_total",
             "error"},
            {}};
    for (const auto &r : rows) {
        if (!r.ok) {
            warn << "warning: n = " << r.n << ": " << r.error << "\n";
        }
        const auto &s = r.spectrum;
        t.add({as_int(r.n), r.ok, r.e_jsigma, r.d_j, s.omega_q_t, s.omega_r_t, s.delta(), s.two_chi, s.g_asymm,
               s.two_chi_total, r.error});
    }
    return t;
}

Table t1_model_table(const RunConfig &cfg, std::ostream &warn) {
    auto rows = sweep(cfg.circuit, resolve_flux(cfg), cfg.flux.n_list, cfg.coherence);
    Table t{"t1-model",
            {"n", "ok", "omega_q_t", "delta", "two_chi_total", "t1_diel", "t1_asymm", "t1_model", "t1_transmon_purcell",
             "error"},
            {}};
    for (const auto &r : rows) {
        if (!r.ok) {
            warn << "warning: n = " << r.n << ": " << r.error << "\n";
        }
        const auto &c = r.coherence;
        t.add({as_int(r.n), r.ok, r.omega_q_t(), r.delta(), r.two_chi_total(), c.t1_diel, c.t1_asymm, c.t1_model,
               c.t1_transmon_purcell, r.error});
    }
    return t;
}

Table readout_table(const std::vector<IntegrationRow> &rows) {
    Table t{"readout",
            {"tau", "threshold", "p01", "p10", "fidelity", "eps_id", "eps_01", "eps_10", "degenerate"},
            {}};
    for (const auto &row : rows) {
        const auto &r = row.report;
        t.add({row.tau, r.threshold, r.p01, r.p10, r.fidelity, r.eps_id, r.eps_01, r.eps_10, r.degenerate});
    }
    return t;
}

Table phase_table(const RunConfig &cfg) {
    const auto &p = cfg.readout;
    Table t{"phase", {"two_chi", "kappa_ext", "kappa_int", "phase_separation_deg"}, {}};
    t.add({p.two_chi, p.kappa_ext, p.kappa_int, phase_separation(p.two_chi, p.kappa_ext, p.kappa_int)});
    return t;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantromon qubit-resonator toolkit", args.empty() ? "quantromon" : args.front()};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_path;
    std::string format_text = "csv";
    std::optional<std::uint64_t> seed;
    std::string trunc_text;
    std::optional<int> shots;
    std::string shots0_path;
    std::string shots1_path;

    app.add_option("--config", config_path, "YAML device/run configuration");
    app.add_option("--out", out_path, "Write the result table here instead of stdout");
    app.add_option("--format", format_text, "Output format: csv or json");
    app.add_option("--seed", seed, "RNG seed (overrides run.seed)");
    app.add_option("--trunc", trunc_text, "Fock truncation <nq>x<nr> (overrides numeric)");
    app.add_option("--shots", shots, "Shots per prepared state (overrides run.shots)");
    app.add_option("--shots0", shots0_path, "Shot CSV for the state-0 preparation");
    app.add_option("--shots1", shots1_path, "Shot CSV for the state-1 preparation");

    std::vector<std::pair<std::string, std::string>> commands{
        {"energies", "Mode energies derived from the circuit"},
        {"spectrum", "Analytic and numeric spectrum side by side"},
        {"chi-sweep", "Dispersive shift and detuning over integer flux quanta"},
        {"t1-model", "T1 budget over integer flux quanta"},
        {"readout-sim", "Simulate single shots and report the readout errors"},
        {"readout-fit", "Report the readout errors of imported shot CSVs"},
        {"phase", "Reflected phase separation of the two pointer states"},
    };
    for (const auto &[name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitValidation;
    }
    std::string command = app.get_subcommands().front()->get_name();

    try {
        auto format = parse_format(format_text);
        if (!config_path.empty()) {
            require_file(config_path, "--config");
        }
        if (!out_path.empty()) {
            require_parent_dir(out_path, "--out");
        }
        if (command == "readout-fit") {
            if (shots0_path.empty() || shots1_path.empty()) {
                throw ValidationError("readout-fit: --shots0 and --shots1 are required");
            }
            require_file(shots0_path, "--shots0");
            require_file(shots1_path, "--shots1");
        }
        if (command == "readout-sim") {
            if (!shots0_path.empty()) {
                require_parent_dir(shots0_path, "--shots0");
            }
            if (!shots1_path.empty()) {
                require_parent_dir(shots1_path, "--shots1");
            }
        }

        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (seed) {
            cfg.seed = *seed;
        }
        if (!trunc_text.empty()) {
            cfg.trunc = parse_trunc(trunc_text);
        }
        if (shots) {
            if (*shots < 1) {
                throw ValidationError("--shots: need at least one shot");
            }
            cfg.shots = *shots;
        }
        for (const auto &w : validate(cfg.circuit).warnings) {
            err << "warning: " << w << "\n";
        }

        Table table;
        if (command == "energies") {
            table = energies_table(cfg);
        } else if (command == "spectrum") {
            table = spectrum_table(cfg);
        } else if (command == "chi-sweep") {
            table = chi_sweep_table(cfg, err);
        } else if (command == "t1-model") {
            table = t1_model_table(cfg, err);
        } else if (command == "readout-sim") {
            const auto &p = cfg.readout;
            if (!shots0_path.empty()) {
                save_shots_csv(shots0_path, simulate_shots(p, 0, cfg.shots, cfg.seed));
            }
            if (!shots1_path.empty()) {
                save_shots_csv(shots1_path, simulate_shots(p, 1, cfg.shots, cfg.seed));
            }
            auto taus = cfg.tau_list.empty() ? std::vector<double>{p.tau} : cfg.tau_list;
            table = readout_table(error_vs_integration(p, taus, cfg.shots, cfg.seed));
            table.command = "readout-sim";
        } else if (command == "readout-fit") {
            auto s0 = load_shots_csv(shots0_path);
            auto s1 = load_shots_csv(shots1_path);
            if (s0.prepared_state != 0 || s1.prepared_state != 1) {
                throw ValidationError("readout-fit: --shots0 / --shots1 must hold prepared states 0 / 1");
            }
            table = readout_table({{s0.params.tau, analyze_shots(s0.values, s1.values)}});
            table.command = "readout-fit";
        } else {
            table = phase_table(cfg);
        }

        auto text = render(table, format);
        if (out_path.empty()) {
            out << text;
        } else {
            write_text(out_path, text);
        }
        return kExitOk;
    } catch (const ValidationError &ex) {
        err << "error: " << command << ": " << ex.what() << "\n";
        return kExitValidation;
    } catch (const NumericalError &ex) {
        err << "error: " << command << ": numerical failure: " << ex.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace quantromon::cli
