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
#ifndef QUANTROMON_SHOT_IO_H
#define QUANTROMON_SHOT_IO_H

#include <iosfwd>
#include <string>

#include "quantromon/readout.h"

namespace quantromon {

/// Shot files: LF line endings, '.' decimal point, every number printed with
/// 17 significant digits so values round-trip bit-exactly.
///
///   # quantromon shots v1
///   # prepared_state=1
///   # seed=42
///   # omega_r=...            (one line per ReadoutParams field)
///   value
///   0.12345678901234567
///   ...
///
/// Comment lines are optional on import; real measurement records need only
/// the "value" header and one number per line.
void write_shots_csv(std::ostream &out, const ShotSet &shots);
ShotSet read_shots_csv(std::istream &in);

void save_shots_csv(const std::string &path, const ShotSet &shots);
ShotSet load_shots_csv(const std::string &path);

/// Shortest-safe decimal text for a double: 17 significant digits, %g style.
std::string format_double(double value);

}  // namespace quantromon

#endif
