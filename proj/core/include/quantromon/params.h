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

#ifndef QUANTROMON_PARAMS_H
#define QUANTROMON_PARAMS_H

#include <string>
#include <vector>

namespace quantromon {

/// Raw lumped-element description of the circuit, in SI units.
///
/// l_j is the Josephson inductance of a single junction, c_j the shunt
/// capacitance across each junction, l_r = 2 L_1 + L_2 the total linear
/// inductance, c_r the interdigital capacitance. b = L_2 / L_R is the fraction
/// of the linear inductor inside the junction loop and d_j = (E_J1 - E_J2) /
/// (E_J1 + E_J2) the junction asymmetry.
struct CircuitParams {
    double l_j = 0.0;  // H
    double c_j = 0.0;  // F
    double l_r = 0.0;  // H
    double c_r = 0.0;  // F
    double b = 0.0;
    double d_j = 0.0;

    /// Theory-fit device: 8.2 nH, 56.88 fF, 0.546 nH, 781.8 fF, b = 0.405.
    static CircuitParams table_one();

    bool operator==(const CircuitParams &) const = default;
};

/// Energy scales of the two modes. Every energy is stored as E / h in Hz.
///
/// e_j is the single-junction Josephson energy, so the qubit-mode inductive
/// energy e_jq = 2 e_j equals E_JSigma = E_J1 + E_J2 for an asymmetric pair.
struct ModeEnergies {
    double e_j = 0.0;
    double e_lr = 0.0;
    double e_cq = 0.0;
    double e_cr = 0.0;
    double e_jq = 0.0;
    double e_jr = 0.0;
    double b = 0.0;
    double d_j = 0.0;

    /// Builds a consistent record, filling e_jq and e_jr from their definitions.
    static ModeEnergies from_scales(double e_j, double e_lr, double e_cq, double e_cr, double b, double d_j);

    double e_jsigma() const {
        return e_jq;
    }
    /// E_LR / E_J; the perturbative formulas assume this is >> 1.
    double inductive_ratio() const {
        return e_lr / e_j;
    }
    /// Same device with the junction pair replaced by (E_JSigma, d_J).
    ModeEnergies retuned(double e_jsigma, double d_j) const;

    bool operator==(const ModeEnergies &) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const {
        return violations.empty();
    }
};

/// Lists every violated invariant and regime warning. Never throws.
ValidationReport validate(const CircuitParams &params);

/// Throws ValidationError naming the first offending parameter.
ModeEnergies derive_energies(const CircuitParams &params);

/// E_J / h in Hz for a Josephson inductance in H, and its inverse.
double josephson_energy_hz(double inductance);
double inductance_from_energy_hz(double energy_hz);
/// Charging energy e^2 / (2 C) / h in Hz.
double charging_energy_hz(double capacitance);

}  // namespace quantromon

#endif
