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
#include <random>

#include "osqec/matcore.hpp"

namespace osqec {

// All randomness in the library flows through explicitly seeded engines so
// that every sampled quantity is reproducible run to run.
using Engine = std::mt19937_64;

// Vector of i.i.d. standard complex Gaussians.
ComplexVector gaussian_vector(Engine& engine, Index n);

// Matrix of i.i.d. standard complex Gaussians (Ginibre ensemble).
ComplexMatrix ginibre(Engine& engine, Index rows, Index cols);

// Haar-distributed unitary, via QR of a Ginibre matrix with the phases of the
// triangular factor's diagonal folded back into Q.
ComplexMatrix haar_unitary(Engine& engine, Index n);

// GUE-distributed Hermitian matrix (not normalized).
ComplexMatrix random_hermitian(Engine& engine, Index n);

}  // namespace osqec
