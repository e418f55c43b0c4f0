// Copyright 2026 The osqec Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace osqec {

// Base class for all osqec errors so callers can catch the library as a whole.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes are inconsistent (matrix dimensions, factor dimensions, ...).
struct DimensionError : Error {
  using Error::Error;
};

// A matrix required to be Hermitian deviates from its adjoint beyond tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

// A matrix required to be positive semidefinite has a significantly negative
// eigenvalue.
struct NotPsdError : Error {
  using Error::Error;
};

// A state or density operator fails its normalization check.
struct NotNormalizedError : Error {
  using Error::Error;
};

// An eigenvalue that must be nonnegative by construction came out negative
// beyond roundoff; indicates inconsistent input rather than a physics verdict.
struct NegativeEigenvalueError : Error {
  using Error::Error;
};

// A user-supplied noise split whose correctable part leaves the admissible
// span.  Carries the measured residual for diagnostics.
struct SpanViolationError : Error {
  SpanViolationError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual = 0.0;
};

// A proven inequality came out violated numerically.  This signals an
// implementation or conditioning bug, not a physics outcome.
struct BoundViolatedError : Error {
  BoundViolatedError(const std::string& quantity, double value, double bound)
      : Error("bound violated: " + quantity + " = " + std::to_string(value) +
              " exceeds " + std::to_string(bound)),
        quantity(quantity),
        value(value),
        bound(bound) {}
  std::string quantity;
  double value = 0.0;
  double bound = 0.0;
};

// Malformed or inconsistent input file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace osqec
