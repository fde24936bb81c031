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
#ifndef QUANTROMON_TOOLS_RUN_H
#define QUANTROMON_TOOLS_RUN_H

#include <ostream>
#include <string>
#include <vector>

#include "config.h"
#include "table.h"

namespace quantromon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

/// One table per subcommand.
Table energies_table(const RunConfig &cfg);
Table spectrum_table(const RunConfig &cfg);
Table chi_sweep_table(const RunConfig &cfg, std::ostream &warn);
Table t1_model_table(const RunConfig &cfg, std::ostream &warn);
Table readout_table(const std::vector<IntegrationRow> &rows);
Table phase_table(const RunConfig &cfg);

/// Entry point; argv[0] is the program name. Table output goes to --out or
/// to out, diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace quantromon::cli

#endif
