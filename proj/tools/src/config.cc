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

#include "config.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "quantromon/errors.h"
#include "yaml-cpp/yaml.h"

namespace quantromon::cli {

namespace {

class Reader {
   public:
    explicit Reader(std::string source) : source_(std::move(source)) {
    }

    [[noreturn]] void fail(const YAML::Node &node, const std::string &key, const std::string &what) const {
        auto mark = node.Mark();
        std::ostringstream msg;
        msg << source_;
        if (mark.line >= 0) {
            msg << ":" << mark.line + 1 << ":" << mark.column + 1;
        }
        msg << ": " << key << ": " << what;
        throw ValidationError(msg.str());
    }

    /// Rejects keys outside the allowed set and remembers where each key is.
    void check_keys(const YAML::Node &map, const std::string &section, const std::set<std::string> &allowed) {
        if (!map.IsMap()) {
            fail(map, section, "expected a mapping");
        }
        for (const auto &kv : map) {
            auto key = kv.first.as<std::string>();
            if (!allowed.contains(key)) {
                std::string list;
                for (const auto &a : allowed) {
                    list += (list.empty() ? "" : ", ") + a;
                }
                fail(kv.first, section.empty() ? key : section + "." + key, "unknown key (expected one of " + list + ")");
            }
            lines_[section.empty() ? key : section + "." + key] = kv.second;
        }
    }

    double number(const YAML::Node &node, const std::string &key) const {
        if (!node.IsScalar()) {
            fail(node, key, "expected a number");
        }
        try {
            return node.as<double>();
        } catch (const YAML::Exception &) {
            fail(node, key, "expected a number, got '" + node.Scalar() + "'");
        }
    }

    long long integer(const YAML::Node &node, const std::string &key) const {
        if (!node.IsScalar()) {
            fail(node, key, "expected an integer");
        }
        try {
            return node.as<long long>();
        } catch (const YAML::Exception &) {
            fail(node, key, "expected an integer, got '" + node.Scalar() + "'");
        }
    }

    void read(const YAML::Node &map, const std::string &section, const char *name, double &out) const {
        if (auto n = map[name]) {
            out = number(n, section + "." + name);
        }
    }

    void read(const YAML::Node &map, const std::string &section, const char *name, std::optional<double> &out) const {
        if (auto n = map[name]) {
            out = number(n, section + "." + name);
        }
    }

    template <typename T>
    std::vector<T> list(const YAML::Node &node, const std::string &key, const std::function<T(const YAML::Node &)> &item) {
        if (!node.IsSequence()) {
            fail(node, key, "expected a list");
        }
        std::vector<T> out;
        for (const auto &x : node) {
            out.push_back(item(x));
        }
        return out;
    }

    /// Re-raises a range violation at the line of the key it names.
    [[noreturn]] void fail_at(const std::string &key, const std::string &what) const {
        auto it = lines_.find(key);
        if (it != lines_.end()) {
            fail(it->second, key, what);
        }
        throw ValidationError(source_ + ": " + key + ": " + what);
    }

   private:
    std::string source_;
    std::map<std::string, YAML::Node> lines_;
};

void read_circuit(Reader &r, const YAML::Node &node, CircuitParams &c) {
    r.check_keys(node, "circuit", {"l_j", "c_j", "l_r", "c_r", "b", "d_j"});
    r.read(node, "circuit", "l_j", c.l_j);
    r.read(node, "circuit", "c_j", c.c_j);
    r.read(node, "circuit", "l_r", c.l_r);
    r.read(node, "circuit", "c_r", c.c_r);
    r.read(node, "circuit", "b", c.b);
    r.read(node, "circuit", "d_j", c.d_j);
}

void read_flux(Reader &r, const YAML::Node &node, FluxSpec &f) {
    r.check_keys(node, "flux", {"mode", "e_j1_zero", "e_j2_zero", "area_ratio_a", "n", "fit"});
    if (auto n = node["mode"]) {
        try {
            f.mode = parse_flux_mode(n.as<std::string>());
        } catch (const ValidationError &ex) {
            r.fail(n, "flux.mode", ex.what());
        }
    }
    r.read(node, "flux", "e_j1_zero", f.e_j1_zero);
    r.read(node, "flux", "e_j2_zero", f.e_j2_zero);
    r.read(node, "flux", "area_ratio_a", f.area_ratio_a);
    if (auto n = node["n"]) {
        f.n_list = r.list<int>(n, "flux.n", [&](const YAML::Node &x) {
            auto v = r.integer(x, "flux.n");
            if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
                r.fail(x, "flux.n", "flux quantum count out of range");
            }
            return static_cast<int>(v);
        });
    }
    if (auto fit = node["fit"]) {
        r.check_keys(fit, "flux.fit", {"omega_q_zero", "d_j_zero", "anchor_n", "anchor_d_j"});
        for (const char *k : {"omega_q_zero", "d_j_zero", "anchor_n", "anchor_d_j"}) {
            if (!fit[k]) {
                r.fail(fit, std::string("flux.fit.") + k, "required key missing");
            }
        }
        OneSquidTarget t;
        r.read(fit, "flux.fit", "omega_q_zero", t.omega_q_zero);
        r.read(fit, "flux.fit", "d_j_zero", t.d_j_zero);
        t.anchor_n = static_cast<int>(r.integer(fit["anchor_n"], "flux.fit.anchor_n"));
        r.read(fit, "flux.fit", "anchor_d_j", t.anchor_d_j);
        f.fit = t;
    }
}

void read_readout(Reader &r, const YAML::Node &node, RunConfig &cfg) {
    r.check_keys(
        node, "readout",
        {"omega_r", "two_chi", "kappa_ext", "kappa_int", "nbar", "tau", "t1", "readout_freq", "efficiency",
         "thermal_population", "tau_list"});
    auto &p = cfg.readout;
    r.read(node, "readout", "omega_r", p.omega_r);
    r.read(node, "readout", "two_chi", p.two_chi);
    r.read(node, "readout", "kappa_ext", p.kappa_ext);
    r.read(node, "readout", "kappa_int", p.kappa_int);
    r.read(node, "readout", "nbar", p.nbar);
    r.read(node, "readout", "tau", p.tau);
    r.read(node, "readout", "t1", p.t1);
    r.read(node, "readout", "efficiency", p.efficiency);
    r.read(node, "readout", "thermal_population", p.thermal_population);
    // Probe at the midpoint of the two pulled resonances unless told otherwise.
    p.readout_freq = p.omega_r - p.two_chi / 2.0;
    r.read(node, "readout", "readout_freq", p.readout_freq);
    if (auto n = node["tau_list"]) {
        cfg.tau_list = r.list<double>(n, "readout.tau_list", [&](const YAML::Node &x) {
            double tau = r.number(x, "readout.tau_list");
            if (!(tau > 0.0)) {
                r.fail(x, "readout.tau_list", "integration times must be positive");
            }
            return tau;
        });
    }
}

void validate_all(Reader &r, const RunConfig &cfg) {
    auto report = validate(cfg.circuit);
    if (!report.ok()) {
        const auto &v = report.violations.front();
        r.fail_at("circuit." + v.substr(0, v.find(' ')), v);
    }
    try {
        cfg.coherence.check();
    } catch (const ValidationError &ex) {
        std::string what = ex.what();
        r.fail_at("coherence." + what.substr(0, what.find(' ')), what);
    }
    try {
        cfg.readout.check();
    } catch (const ValidationError &ex) {
        r.fail_at("readout", ex.what());
    }
    try {
        cfg.trunc.check();
    } catch (const ValidationError &ex) {
        r.fail_at("numeric", ex.what());
    }
    if (cfg.shots < 1) {
        r.fail_at("run.shots", "need at least one shot");
    }
    const auto &f = cfg.flux;
    if (f.mode != FluxMode::Fixed && !f.area_ratio_a && !f.fit) {
        r.fail_at("flux.area_ratio_a", "required for flux mode " + std::string(to_string(f.mode)));
    }
    if (f.fit) {
        if (f.mode != FluxMode::OneSquid) {
            r.fail_at("flux.fit", "only supported for flux mode one_squid");
        }
        if (f.e_j1_zero || f.e_j2_zero || f.area_ratio_a) {
            r.fail_at("flux.fit", "conflicts with explicit e_j1_zero / e_j2_zero / area_ratio_a");
        }
    }
    if (f.e_j1_zero.has_value() != f.e_j2_zero.has_value()) {
        r.fail_at(f.e_j1_zero ? "flux.e_j1_zero" : "flux.e_j2_zero", "e_j1_zero and e_j2_zero must be given together");
    }
}

}  // namespace

RunConfig parse_config(const std::string &text, const std::string &source) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException &ex) {
        throw ValidationError(
            source + ":" + std::to_string(ex.mark.line + 1) + ":" + std::to_string(ex.mark.column + 1) +
            ": malformed YAML: " + ex.msg);
    }
    RunConfig cfg;
    if (root.IsNull()) {
        return cfg;
    }
    Reader r(source);
    r.check_keys(root, "", {"circuit", "flux", "coherence", "readout", "numeric", "run"});
    if (auto n = root["circuit"]) {
        read_circuit(r, n, cfg.circuit);
    }
    if (auto n = root["flux"]) {
        read_flux(r, n, cfg.flux);
    }
    if (auto n = root["coherence"]) {
        r.check_keys(n, "coherence", {"q_diel", "kappa"});
        r.read(n, "coherence", "q_diel", cfg.coherence.q_diel);
        r.read(n, "coherence", "kappa", cfg.coherence.kappa);
    }
    if (auto n = root["readout"]) {
        read_readout(r, n, cfg);
    }
    if (auto n = root["numeric"]) {
        r.check_keys(n, "numeric", {"n_q", "n_r"});
        if (auto x = n["n_q"]) {
            cfg.trunc.n_q = static_cast<int>(r.integer(x, "numeric.n_q"));
        }
        if (auto x = n["n_r"]) {
            cfg.trunc.n_r = static_cast<int>(r.integer(x, "numeric.n_r"));
        }
    }
    if (auto n = root["run"]) {
        r.check_keys(n, "run", {"seed", "shots"});
        if (auto x = n["seed"]) {
            try {
                cfg.seed = x.as<std::uint64_t>();
            } catch (const YAML::Exception &) {
                r.fail(x, "run.seed", "expected an unsigned 64-bit integer, got '" + x.Scalar() + "'");
            }
        }
        if (auto x = n["shots"]) {
            auto v = r.integer(x, "run.shots");
            if (v < 1 || v > std::numeric_limits<int>::max()) {
                r.fail(x, "run.shots", "need between 1 and 2^31 - 1 shots");
            }
            cfg.shots = static_cast<int>(v);
        }
    }
    validate_all(r, cfg);
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open config '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path);
}

std::string emit_config(const RunConfig &cfg) {
    YAML::Emitter e;
    e.SetDoublePrecision(17);
    e << YAML::BeginMap;

    auto kv = [&](const char *k, double v) {
        e << YAML::Key << k << YAML::Value << v;
    };

    e << YAML::Key << "circuit" << YAML::Value << YAML::BeginMap;
    kv("l_j", cfg.circuit.l_j);
    kv("c_j", cfg.circuit.c_j);
    kv("l_r", cfg.circuit.l_r);
    kv("c_r", cfg.circuit.c_r);
    kv("b", cfg.circuit.b);
    kv("d_j", cfg.circuit.d_j);
    e << YAML::EndMap;

    const auto &f = cfg.flux;
    e << YAML::Key << "flux" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "mode" << YAML::Value << to_string(f.mode);
    if (f.e_j1_zero) {
        kv("e_j1_zero", *f.e_j1_zero);
    }
    if (f.e_j2_zero) {
        kv("e_j2_zero", *f.e_j2_zero);
    }
    if (f.area_ratio_a) {
        kv("area_ratio_a", *f.area_ratio_a);
    }
    e << YAML::Key << "n" << YAML::Value << YAML::Flow << f.n_list;
    if (f.fit) {
        e << YAML::Key << "fit" << YAML::Value << YAML::BeginMap;
        kv("omega_q_zero", f.fit->omega_q_zero);
        kv("d_j_zero", f.fit->d_j_zero);
        e << YAML::Key << "anchor_n" << YAML::Value << f.fit->anchor_n;
        kv("anchor_d_j", f.fit->anchor_d_j);
        e << YAML::EndMap;
    }
    e << YAML::EndMap;

    e << YAML::Key << "coherence" << YAML::Value << YAML::BeginMap;
    kv("q_diel", cfg.coherence.q_diel);
    kv("kappa", cfg.coherence.kappa);
    e << YAML::EndMap;

    const auto &p = cfg.readout;
    e << YAML::Key << "readout" << YAML::Value << YAML::BeginMap;
    kv("omega_r", p.omega_r);
    kv("two_chi", p.two_chi);
    kv("kappa_ext", p.kappa_ext);
    kv("kappa_int", p.kappa_int);
    kv("nbar", p.nbar);
    kv("tau", p.tau);
    kv("t1", p.t1);
    kv("readout_freq", p.readout_freq);
    kv("efficiency", p.efficiency);
    kv("thermal_population", p.thermal_population);
    if (!cfg.tau_list.empty()) {
        e << YAML::Key << "tau_list" << YAML::Value << YAML::Flow << cfg.tau_list;
    }
    e << YAML::EndMap;

    e << YAML::Key << "numeric" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "n_q" << YAML::Value << cfg.trunc.n_q;
    e << YAML::Key << "n_r" << YAML::Value << cfg.trunc.n_r;
    e << YAML::EndMap;

    e << YAML::Key << "run" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "seed" << YAML::Value << cfg.seed;
    e << YAML::Key << "shots" << YAML::Value << cfg.shots;
    e << YAML::EndMap;

    e << YAML::EndMap;
    return std::string(e.c_str()) + "\n";
}

FluxConfig resolve_flux(const RunConfig &cfg) {
    const auto &f = cfg.flux;
    if (f.fit) {
        auto base = derive_energies(cfg.circuit);
        return fit_one_squid(base, f.fit->omega_q_zero, f.fit->d_j_zero, f.fit->anchor_n, f.fit->anchor_d_j).config;
    }
    auto out = FluxConfig::from_circuit(cfg.circuit, f.mode, f.area_ratio_a.value_or(0.0));
    if (f.e_j1_zero) {
        out.e_j1_zero = *f.e_j1_zero;
        out.e_j2_zero = *f.e_j2_zero;
    }
    out.check();
    return out;
}

}  // namespace quantromon::cli
