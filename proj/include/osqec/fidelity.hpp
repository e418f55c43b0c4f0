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

#include <cstdint>

#include "osqec/perfect.hpp"

namespace osqec {

// Fidelity F(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho)) between density
// operators.  Validates positivity and unit trace (within 1e-8) of both
// arguments.
double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                        double tol = 1e-9);

// Same quantity without the normalization check, for internal comparisons
// against sub-normalized recovered states.
double uhlmann_fidelity_raw(const ComplexMatrix& rho,
                            const ComplexMatrix& sigma, double tol = 1e-9);

// Fidelity loss 1 - F^2 between the system marginals of a pure composite
// state before the channel and after channel plus recovery (full trace
// preserving recovery, completion included).
double eta_of_state(const KrausChannel& ch, const RecoveryMap& rec,
                    const ComplexVector& psi);

// Worst-case fidelity loss over pure code states: seeded sampling followed by
// finite-difference ascent refinement from the best sample.  The maximum over
// pure states bounds the maximum over all code states.
struct WorstCaseResult {
  double eta_max = 0.0;
  ComplexVector argmax_state;  // full composite-space vector, in the code
  long samples_used = 0;
  long refine_iterations = 0;
  bool converged = false;
};

WorstCaseResult worst_case_eta(const KrausChannel& ch, const RecoveryMap& rec,
                               const CodeSpace& code, Index d_b,
                               long n_samples, long n_refine,
                               std::uint64_t seed);

}  // namespace osqec
