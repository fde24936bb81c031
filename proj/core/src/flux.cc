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

#include "quantromon/flux.h"

#include <cmath>
#include <numbers>

#include "quantromon/errors.h"

namespace quantromon {

const char *to_string(FluxMode mode) {
    switch (mode) {
        case FluxMode::BothSquids:
            return "both_squids";
        case FluxMode::OneSquid:
            return "one_squid";
        case FluxMode::Fixed:
            return "fixed";
    }
    return "?";
}

FluxMode parse_flux_mode(const std::string &text) {
    if (text == "both_squids") {
        return FluxMode::BothSquids;
    }
    if (text == "one_squid") {
        return FluxMode::OneSquid;
    }
    if (text == "fixed") {
        return FluxMode::Fixed;
    }
    throw ValidationError("unknown flux mode '" + text + "' (expected both_squids, one_squid or fixed)");
}

FluxConfig FluxConfig::from_circuit(const CircuitParams &params, FluxMode mode, double area_ratio_a) {
    double sum = 2.0 * josephson_energy_hz(params.l_j);
    FluxConfig cfg;
    cfg.mode = mode;
    cfg.e_j1_zero = (1.0 + params.d_j) / 2.0 * sum;
    cfg.e_j2_zero = (1.0 - params.d_j) / 2.0 * sum;
    cfg.area_ratio_a = area_ratio_a;
    return cfg;
}

void FluxConfig::check() const {
    if (!(e_j1_zero >= 0.0) || !(e_j2_zero >= 0.0) || !(e_j1_zero + e_j2_zero > 0.0)) {
        throw ValidationError("flux: zero-flux junction energies must be non-negative with a positive sum");
    }
    if (mode != FluxMode::Fixed && !(area_ratio_a > 0.0 && area_ratio_a < 1.0)) {
        throw ValidationError("flux: area_ratio_a must lie in (0, 1)");
    }
}

TunedJunctions tuned_junctions(const FluxConfig &cfg) {
    cfg.check();
    double c = std::cos(cfg.n * std::numbers::pi * cfg.area_ratio_a);
    TunedJunctions out;
    switch (cfg.mode) {
        case FluxMode::Fixed:
            out.e_jsigma = cfg.e_j1_zero + cfg.e_j2_zero;
            out.d_j = (cfg.e_j1_zero - cfg.e_j2_zero) / out.e_jsigma;
            return out;
        case FluxMode::BothSquids: {
            double scale = std::abs(c);
            out.e_jsigma = (cfg.e_j1_zero + cfg.e_j2_zero) * scale;
            out.d_j = (cfg.e_j1_zero - cfg.e_j2_zero) / (cfg.e_j1_zero + cfg.e_j2_zero);
            break;
        }
        case FluxMode::OneSquid:
            out.e_jsigma = cfg.e_j1_zero + cfg.e_j2_zero * c;
            out.d_j = (cfg.e_j1_zero - cfg.e_j2_zero * c) / out.e_jsigma;
            break;
    }
    double zero_flux_sum = cfg.e_j1_zero + cfg.e_j2_zero;
    if (!(out.e_jsigma > 1e-12 * zero_flux_sum)) {
        throw NumericalError(
            "unphysical operating point at n = " + std::to_string(cfg.n) + ": E_JSigma tuned through zero");
    }
    return out;
}

std::vector<SweepRow> sweep(
    const CircuitParams &params, const FluxConfig &cfg, std::span<const int> n_list, const CoherenceConfig &coherence) {
    auto base = derive_energies(params);
    coherence.check();
    std::vector<SweepRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        SweepRow row;
        row.n = n;
        try {
            auto point = cfg;
            point.n = n;
            auto tuned = tuned_junctions(point);
            row.e_jsigma = tuned.e_jsigma;
            row.d_j = tuned.d_j;
            auto energies = base.retuned(tuned.e_jsigma, tuned.d_j);
            row.spectrum = dressed_spectrum(energies);
            row.coherence = coherence_report(row.spectrum, coherence);
            row.ok = true;
        } catch (const std::exception &ex) {
            row.ok = false;
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double fit_junction_sum(const ModeEnergies &base, double target_omega_q, double d_j) {
    auto freq = [&](double sum) {
        return dressed_spectrum(base.retuned(sum, d_j)).omega_q_t;
    };
    // The analytic qubit frequency increases monotonically with E_JSigma.
    double lo = 1e6;
    double hi = 1e13;
    if (!(freq(lo) < target_omega_q && freq(hi) > target_omega_q)) {
        throw NumericalError("fit_junction_sum: target qubit frequency not bracketed");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; it++) {
        double mid = 0.5 * (lo + hi);
        (freq(mid) < target_omega_q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

OneSquidFit fit_one_squid(
    const ModeEnergies &base, double omega_q_zero, double d_j_zero, int anchor_n, double anchor_d_j) {
    if (!(std::abs(d_j_zero) < 1.0)) {
        throw ValidationError("fit_one_squid: zero-flux asymmetry must lie in (-1, 1)");
    }
    if (anchor_n == 0) {
        throw ValidationError("fit_one_squid: anchor point must be at nonzero flux");
    }
    double sum0 = fit_junction_sum(base, omega_q_zero, d_j_zero);

    OneSquidFit fit;
    fit.config.mode = FluxMode::OneSquid;
    fit.config.e_j1_zero = (1.0 + d_j_zero) / 2.0 * sum0;
    fit.config.e_j2_zero = (1.0 - d_j_zero) / 2.0 * sum0;
    fit.config.n = anchor_n;

    auto residual = [&](double a) {
        auto cfg = fit.config;
        cfg.area_ratio_a = a;
        try {
            return tuned_junctions(cfg).d_j - anchor_d_j;
        } catch (const NumericalError &) {
            return std::nan("");
        }
    };

    constexpr double kStep = 1e-4;
    double prev_a = kStep;
    double prev_r = residual(prev_a);
    bool found = false;
    double lo = 0.0;
    double hi = 0.0;
    for (int k = 2; k * kStep < 0.5; k++) {
        double a = k * kStep;
        double r = residual(a);
        if (std::isfinite(prev_r) && std::isfinite(r) && ((prev_r <= 0.0) != (r <= 0.0))) {
            lo = prev_a;
            hi = a;
            found = true;
            break;
        }
        prev_a = a;
        prev_r = r;
    }
    if (!found) {
        throw NumericalError("fit_one_squid: no area ratio in (0, 0.5) reproduces the anchor asymmetry");
    }
    double r_lo = residual(lo);
    for (int it = 0; it < 100; it++) {
        double mid = 0.5 * (lo + hi);
        double r_mid = residual(mid);
        if ((r_mid <= 0.0) == (r_lo <= 0.0)) {
            lo = mid;
            r_lo = r_mid;
        } else {
            hi = mid;
        }
    }
    fit.config.area_ratio_a = 0.5 * (lo + hi);
    fit.config.n = 0;

    fit.omega_q_zero = dressed_spectrum(base.retuned(sum0, d_j_zero)).omega_q_t;
    auto anchor = fit.config;
    anchor.n = anchor_n;
    auto tuned = tuned_junctions(anchor);
    fit.d_j_anchor = tuned.d_j;
    fit.omega_q_anchor = dressed_spectrum(base.retuned(tuned.e_jsigma, tuned.d_j)).omega_q_t;
    return fit;
}

}  // namespace quantromon
