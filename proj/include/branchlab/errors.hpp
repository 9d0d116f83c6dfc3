// Copyright 2026 branchlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRANCHLAB_ERRORS_HPP_
#define BRANCHLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace branchlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of a function.
struct DomainError : Error {
  using Error::Error;
};

// Offspring law whose mean is not 1.
struct NonCriticalError : Error {
  using Error::Error;
};

// Migration law whose mean is not negative.
struct NonNegativeMigrationMeanError : Error {
  using Error::Error;
};

// Power-weight integral of a tabulated law does not converge.
struct DivergentWeightError : Error {
  using Error::Error;
};

// Numerical transform inversion missed its error target.
struct InversionFailureError : Error {
  using Error::Error;
};

// Conditional sample ended with fewer surviving paths than required.
struct InsufficientSurvivorsError : Error {
  using Error::Error;
};

// Parameter combination outside the supported regime table.
struct UnsupportedRegimeError : Error {
  using Error::Error;
};

// Log-log fit fed a zero survival estimate.
struct ZeroCellError : Error {
  using Error::Error;
};

// Regenerative simulation exceeded its cycle budget before the horizon.
struct CycleOverflowError : Error {
  using Error::Error;
};

// Configuration file could not be parsed; message carries line context.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace branchlab

#endif  // BRANCHLAB_ERRORS_HPP_
