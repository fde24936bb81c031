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

#ifndef QUANTROMON_CONSTANTS_H
#define QUANTROMON_CONSTANTS_H

#include <numbers>

namespace quantromon {

/// Exact CODATA-2018 SI values. Not configurable.
struct PhysicalConstants {
    double planck_h;                      // J s
    double reduced_flux_quantum_phi0bar;  // Wb, h / (2 e) / (2 pi)
    double electron_charge_e;             // C

    static constexpr PhysicalConstants codata2018() {
        constexpr double h = 6.62607015e-34;
        constexpr double e = 1.602176634e-19;
        return {h, h / (2.0 * e) / (2.0 * std::numbers::pi), e};
    }
};

inline constexpr PhysicalConstants kConstants = PhysicalConstants::codata2018();
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace quantromon

#endif
