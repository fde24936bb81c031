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

#ifndef QUANTROMON_ERRORS_H
#define QUANTROMON_ERRORS_H

#include <stdexcept>
#include <string>

namespace quantromon {

/// Inputs violate a documented invariant. The CLI maps this to exit code 1.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed or left its domain of validity. The CLI maps
/// this to exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dressed-state bookkeeping could not assign a bare label with overlap >= 0.5.
struct AmbiguousLabeling : NumericalError {
    using NumericalError::NumericalError;
};

/// The bimodal fit could not separate two clusters.
struct DegenerateFit : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace quantromon

#endif
