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

#include <vector>

#include "osqec/matcore.hpp"

namespace osqec {

// Completely positive map on a system ⊗ bath space, given by Kraus operators
// acting on the composite space.  d_b == 1 describes a system-only channel.
struct KrausChannel {
  Index d_s = 0;
  Index d_b = 1;
  std::vector<ComplexMatrix> kraus;

  Index dim() const { return d_s * d_b; }
  Index n_kraus() const { return static_cast<Index>(kraus.size()); }
};

enum class TPKind { TP, SubTP, Neither };

// Trace-preservation classification.  A channel is TP when sum_a E_a^† E_a is
// the identity, and SubTP on a code when the sum restricted to the code
// subspace is gamma2 times the projector there.
struct TPClass {
  TPKind kind = TPKind::Neither;
  double gamma2 = 0.0;
  double residual = 0.0;  // deviation from the best matching class
};

// rho -> sum_a E_a rho E_a^†.
ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho);

// Classify trace preservation globally and, failing that, restricted to the
// code subspace described by the full-space projector (code ⊗ bath).
TPClass classify_tp(const KrausChannel& ch, const ComplexMatrix& full_proj,
                    double tol = 1e-9);

// Bath block <k| E_a |l>, a d_s x d_s operator on the system factor.
ComplexMatrix slice(const KrausChannel& ch, Index a, Index k, Index l);

// System-only channel G(.) = Tr_B[E(. ⊗ 1_B / d_b)], whose Kraus operators
// are the bath blocks scaled by 1/sqrt(d_b).  The Kraus list is ordered by
// the flat block index (a * d_b + k) * d_b + l.
KrausChannel g_map(const KrausChannel& ch);

// Choi matrix in row-vectorization convention:
//   C[(i,j),(k,l)] = sum_a E_a(i,j) conj(E_a(k,l)).
ComplexMatrix choi(const KrausChannel& ch);

}  // namespace osqec
