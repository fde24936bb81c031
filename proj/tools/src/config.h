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
#ifndef QUANTROMON_TOOLS_CONFIG_H
#define QUANTROMON_TOOLS_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantromon/coherence.h"
#include "quantromon/flux.h"
#include "quantromon/numeric.h"
#include "quantromon/params.h"
#include "quantromon/readout.h"

namespace quantromon::cli {

/// Observables a single-SQUID device is reconstructed from (see fit_one_squid).
struct OneSquidTarget {
    double omega_q_zero = 0.0;
    double d_j_zero = 0.0;
    int anchor_n = 0;
    double anchor_d_j = 0.0;

    bool operator==(const OneSquidTarget &) const = default;
};

/// Junction energies left unset are split from the circuit by its d_j, or
/// reconstructed when a fit target is given.
struct FluxSpec {
    FluxMode mode = FluxMode::Fixed;
    std::optional<double> e_j1_zero;
    std::optional<double> e_j2_zero;
    std::optional<double> area_ratio_a;
    std::vector<int> n_list{0};
    std::optional<OneSquidTarget> fit;

    bool operator==(const FluxSpec &) const = default;
};

struct RunConfig {
    CircuitParams circuit = CircuitParams::table_one();
    FluxSpec flux;
    CoherenceConfig coherence;
    ReadoutParams readout = ReadoutParams::sample_c();
    /// Integration times for readout-sim; empty means just readout.tau.
    std::vector<double> tau_list;
    Truncation trunc;
    std::uint64_t seed = 1;
    int shots = 20000;

    bool operator==(const RunConfig &) const = default;
};

/// Strict YAML reader: unknown keys, wrong types and out-of-range values are
/// ValidationErrors of the form "<source>:<line>:<column>: <key>: <what>".
RunConfig parse_config(const std::string &text, const std::string &source = "<config>");
RunConfig load_config(const std::string &path);

/// Canonical YAML with every key present; parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig &cfg);

/// Junction configuration the sweep runs on, after splitting or fitting.
FluxConfig resolve_flux(const RunConfig &cfg);

}  // namespace quantromon::cli

#endif
