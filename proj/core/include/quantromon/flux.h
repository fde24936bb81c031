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
#ifndef QUANTROMON_FLUX_H
#define QUANTROMON_FLUX_H

#include <span>
#include <string>
#include <vector>

#include "quantromon/analytic.h"
#include "quantromon/coherence.h"
#include "quantromon/params.h"

namespace quantromon {

enum class FluxMode {
    /// Both junctions are identical SQUIDs; E_JSigma scales by |cos(n pi a)|.
    BothSquids,
    /// Junction 2 is a SQUID; E_JSigma = E_J1 + E_J2 cos(n pi a).
    OneSquid,
    /// No flux dependence.
    Fixed,
};

const char *to_string(FluxMode mode);
FluxMode parse_flux_mode(const std::string &text);

/// Zero-flux junction energies are in Hz. n is the integer number of flux
/// quanta threading the main loop.
struct FluxConfig {
    FluxMode mode = FluxMode::Fixed;
    double e_j1_zero = 0.0;
    double e_j2_zero = 0.0;
    double area_ratio_a = 0.0;
    int n = 0;

    /// Splits E_JSigma = 2 E_J of the circuit by its d_j.
    static FluxConfig from_circuit(const CircuitParams &params, FluxMode mode, double area_ratio_a);

    void check() const;
    bool operator==(const FluxConfig &) const = default;
};

struct TunedJunctions {
    double e_jsigma = 0.0;
    double d_j = 0.0;
};

/// Throws NumericalError when the sum is tuned through zero.
TunedJunctions tuned_junctions(const FluxConfig &cfg);

/// One operating point. When ok is false only n and error are meaningful.
struct SweepRow {
    int n = 0;
    double e_jsigma = 0.0;
    double d_j = 0.0;
    SpectrumResult spectrum;
    CoherenceReport coherence;
    bool ok = false;
    std::string error;

    double omega_q_t() const {
        return spectrum.omega_q_t;
    }
    double delta() const {
        return spectrum.delta();
    }
    double two_chi_total() const {
        return spectrum.two_chi_total;
    }
    double t1_model() const {
        return coherence.t1_model;
    }
};

/// For each n: tune junctions, derive energies, analytic spectrum with the
/// asymmetry correction, coherence budget. Rows keep the order of n_list;
/// per-row failures are recorded and the sweep continues.
std::vector<SweepRow> sweep(
    const CircuitParams &params, const FluxConfig &cfg, std::span<const int> n_list, const CoherenceConfig &coherence);

/// Result of reconstructing a single-SQUID device from its zero-flux qubit
/// frequency, zero-flux asymmetry, and the asymmetry at one anchor point.
struct OneSquidFit {
    FluxConfig config;
    double omega_q_zero = 0.0;
    double omega_q_anchor = 0.0;
    double d_j_anchor = 0.0;
};

/// Bisects E_JSigma so the analytic qubit frequency equals target_omega_q.
double fit_junction_sum(const ModeEnergies &base, double target_omega_q, double d_j);

/// Scans a over (0, 0.5) at 1e-4 resolution for the first sign change of
/// d_J(anchor_n; a) - anchor_d_j and refines it by bisection.
OneSquidFit fit_one_squid(
    const ModeEnergies &base, double omega_q_zero, double d_j_zero, int anchor_n, double anchor_d_j);

}  // namespace quantromon

#endif
