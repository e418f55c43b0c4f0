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
#include <vector>

#include "osqec/channels.hpp"
#include "osqec/codes.hpp"

// Deterministic families of channels and codes used by the test suites and
// shipped as example scenario files.  Every randomized construction takes an
// explicit seed.

namespace osqec::scenarios {

KrausChannel identity_channel(Index d_s, Index d_b = 1);

// Code spanned by computational basis states of a d_s-dimensional system.
CodeSpace span_code(Index d_s, const std::vector<Index>& kept);
CodeSpace full_code(Index d_s);

// Three-qubit bit-flip repetition code, span{|000>, |111>} in dimension 8.
CodeSpace repetition_code();

// Independent single-qubit bit-flip noise restricted to the single-error
// sector: Kraus { sqrt(1-3p) 1, sqrt(p) X1, sqrt(p) X2, sqrt(p) X3 } on three
// qubits.
KrausChannel bit_flip_noise(double p);

// Dresses a system-only channel with a bath: the new Kraus operators are
//   E_b = sum_a S_a ⊗ M_{ba},
// where the M_{ba} are the d_b x d_b blocks of a Haar-random unitary on
// C^(n d_b).  Exactly trace preserving, with every bath block inside
// span{S_a}, so correctability of the original channel is preserved.
KrausChannel decorate_bath(const KrausChannel& sys_ch, Index d_b,
                           std::uint64_t seed);

// Left-multiplies every Kraus operator by exp(-i t H) for a seeded random
// Hermitian H with unit operator norm.  Trace preservation is exact for all
// t; the distance from the original channel scales linearly in t.
KrausChannel rotate(const KrausChannel& ch, double t, std::uint64_t seed);

// Scales all Kraus operators by gamma (trace preservation becomes gamma^2).
KrausChannel scale(const KrausChannel& ch, double gamma);

// Conjugates every Kraus operator by 1_S ⊗ u_b (a bath basis change).
KrausChannel conjugate_bath(const KrausChannel& ch, const ComplexMatrix& u_b);

// Replaces the Kraus list by E'_a = sum_b u(a, b) E_b for unitary u; the
// channel is unchanged as a map.
KrausChannel remix(const KrausChannel& ch, const ComplexMatrix& u_mix);

// SWAP unitary on a qubit system with qubit bath: correctable by a joint
// system-bath recovery on the full code, but by no system-only recovery.
KrausChannel swap_witness();

// Randomized correctable instance: a random code, a random on-code
// orthonormal error basis, bath-dressed as above plus an orthogonal-sector
// Kraus operator making the channel exactly trace preserving.
struct RandomInstance {
  KrausChannel channel;
  CodeSpace code;
};

RandomInstance random_correctable(std::uint64_t seed);
RandomInstance random_violating(std::uint64_t seed);

}  // namespace osqec::scenarios
