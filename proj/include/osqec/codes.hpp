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

#include "osqec/matcore.hpp"
#include "osqec/random.hpp"

namespace osqec {

// Code subspace of the system factor, stored as an isometry whose orthonormal
// columns are the code basis vectors.
struct CodeSpace {
  Index d_s = 0;
  ComplexMatrix basis;  // d_s x d

  Index dim() const { return basis.cols(); }
};

// Builds a code space, checking column orthonormality within tol.
CodeSpace make_code(Index d_s, ComplexMatrix basis, double tol = 1e-8);

// Projector P_C onto the code subspace of the system factor.
ComplexMatrix projector(const CodeSpace& code);

// Projector P_C ⊗ 1_B on the composite space.
ComplexMatrix full_projector(const CodeSpace& code, Index d_b);

// Uniformly random pure state supported on code ⊗ bath, as a full-space
// vector.  Deterministic for a fixed seed / engine state.
ComplexVector sample_code_state(const CodeSpace& code, Index d_b,
                                Engine& engine);
ComplexVector sample_code_state(const CodeSpace& code, Index d_b,
                                std::uint64_t seed);

}  // namespace osqec
