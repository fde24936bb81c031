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

#include "quantromon/params.h"

#include <cmath>
#include <sstream>

#include "quantromon/constants.h"
#include "quantromon/errors.h"

namespace quantromon {

CircuitParams CircuitParams::table_one() {
    return {.l_j = 8.2e-9, .c_j = 56.88e-15, .l_r = 0.546e-9, .c_r = 781.8e-15, .b = 0.405, .d_j = 0.0};
}

ModeEnergies ModeEnergies::from_scales(double e_j, double e_lr, double e_cq, double e_cr, double b, double d_j) {
    ModeEnergies en;
    en.e_j = e_j;
    en.e_lr = e_lr;
    en.e_cq = e_cq;
    en.e_cr = e_cr;
    en.e_jq = 2.0 * e_j;
    en.e_jr = e_lr + (b * b / 2.0) * e_j;
    en.b = b;
    en.d_j = d_j;
    return en;
}

ModeEnergies ModeEnergies::retuned(double e_jsigma, double d_j) const {
    if (!(e_jsigma > 0.0) || !std::isfinite(e_jsigma)) {
        throw ValidationError("retuned: E_JSigma must be positive and finite");
    }
    if (!(std::abs(d_j) < 1.0)) {
        throw ValidationError("retuned: d_j must lie in (-1, 1)");
    }
    return from_scales(e_jsigma / 2.0, e_lr, e_cq, e_cr, b, d_j);
}

double josephson_energy_hz(double inductance) {
    const auto &k = kConstants;
    return k.reduced_flux_quantum_phi0bar * k.reduced_flux_quantum_phi0bar / inductance / k.planck_h;
}

double inductance_from_energy_hz(double energy_hz) {
    const auto &k = kConstants;
    return k.reduced_flux_quantum_phi0bar * k.reduced_flux_quantum_phi0bar / (energy_hz * k.planck_h);
}

double charging_energy_hz(double capacitance) {
    const auto &k = kConstants;
    return k.electron_charge_e * k.electron_charge_e / (2.0 * capacitance) / k.planck_h;
}

namespace {

void require_positive(std::vector<std::string> &out, const char *name, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream ss;
        ss << name << " must be positive and finite (got " << value << ")";
        out.push_back(ss.str());
    }
}

}  // namespace

ValidationReport validate(const CircuitParams &params) {
    ValidationReport report;
    require_positive(report.violations, "l_j", params.l_j);
    require_positive(report.violations, "c_j", params.c_j);
    require_positive(report.violations, "l_r", params.l_r);
    require_positive(report.violations, "c_r", params.c_r);
    if (!(params.b >= 0.0 && params.b <= 1.0)) {
        report.violations.push_back("b out of [0,1] (got " + std::to_string(params.b) + ")");
    }
    if (!(std::abs(params.d_j) < 1.0)) {
        report.violations.push_back("d_j out of (-1,1) (got " + std::to_string(params.d_j) + ")");
    }
    if (report.ok()) {
        // Inductive energies scale as 1/L, so E_LR/E_J = L_J/L_R.
        if (params.l_j / params.l_r <= 1.0) {
            report.warnings.push_back("E_LR >> E_J regime violated: perturbative formulas unreliable");
        }
    }
    return report;
}

ModeEnergies derive_energies(const CircuitParams &params) {
    auto report = validate(params);
    if (!report.ok()) {
        throw ValidationError(report.violations.front());
    }
    return ModeEnergies::from_scales(
        josephson_energy_hz(params.l_j),
        josephson_energy_hz(params.l_r),
        charging_energy_hz(2.0 * params.c_j),
        charging_energy_hz(params.c_r + params.c_j / 2.0),
        params.b,
        params.d_j);
}

}  // namespace quantromon
