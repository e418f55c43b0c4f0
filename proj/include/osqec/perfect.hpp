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

#include <array>
#include <cstdint>
#include <vector>

#include "osqec/channels.hpp"
#include "osqec/codes.hpp"

namespace osqec {

// Correctability check for system-bath noise against a recovery that acts on
// the system alone.  The channel is perfectly correctable on a code C exactly
// when every pair of bath blocks satisfies
//   P_C E_{a;kl}^† E_{b;mn} P_C = lambda_{(akl),(bmn)} P_C,
// with lambda a Hermitian matrix over the flat triple index
// (a * d_b + k) * d_b + l.  The verdict carries the worst proportionality
// residual (operator norm, relative to max(1, max |lambda|)) and the indices
// that produced it.
struct LambdaVerdict {
  bool correctable = false;
  ComplexMatrix lambda;
  double residual = 0.0;
  double scale = 1.0;                 // tolerance scale actually used
  Index n_kraus = 0;
  Index d_b = 1;
  std::array<Index, 6> worst_pair{};  // a, k, l, b, m, n
};

LambdaVerdict extract_lambda(const KrausChannel& ch, const CodeSpace& code,
                             double tol = 1e-9);

// Same check for a system-only channel (d_b == 1); the classic algebraic
// correctability condition for closed-system noise.
LambdaVerdict kl_check(const KrausChannel& ch, const CodeSpace& code,
                       double tol = 1e-9);

// Diagonalized error basis built from a passing verdict:
//   F_p = sum_q mixer(q, p) E_{q-th bath block},
// rescaled by 1/sqrt(eigenvalue) and restricted to eigenvalues above
// cutoff * max(eigenvalue).  The retained operators are orthonormal on the
// code: P_C F_a^† F_b P_C = delta_ab P_C.
struct CorrectableBasis {
  std::vector<ComplexMatrix> f_ops;  // retained, eigenvalue-descending
  RealVector eigvals;                // matching eigenvalues
  ComplexMatrix mixer;               // full eigenvector matrix of lambda
  Index d_s = 0;
};

CorrectableBasis diagonalize(const LambdaVerdict& verdict,
                             const KrausChannel& ch, const CodeSpace& code,
                             double cutoff = 1e-10);

// Universal recovery map: system-only Kraus operators P_C F_a^† plus a
// completion onto a fixed code state that makes the total map trace
// preserving.
struct RecoveryMap {
  std::vector<ComplexMatrix> system_kraus;      // P_C F_a^†
  std::vector<ComplexMatrix> completion_kraus;  // rank-one TP completion
  Index d_s = 0;
};

RecoveryMap universal_recovery(const CorrectableBasis& basis,
                               const CodeSpace& code);

// All recovery Kraus operators as a system-only channel.
KrausChannel recovery_channel(const RecoveryMap& rec,
                              bool with_completion = true);

// (R_S ⊗ id_B) applied to a composite-space operator.
ComplexMatrix apply_recovery(const RecoveryMap& rec, const ComplexMatrix& rho,
                             Index d_b, bool with_completion = true);

// Membership test for a second channel's bath blocks in the span of a
// correctable basis, under the code inner product
//   <A, B> = Tr[P_C A^† B P_C] / d.
// Channels passing it are corrected by the same universal recovery.
struct SpanVerdict {
  bool in_span = false;
  double residual = 0.0;              // worst out-of-span operator norm
  double scale = 1.0;
  std::array<Index, 3> worst_slice{}; // a, k, l
};

SpanVerdict span_correctable(const KrausChannel& ch,
                             const CorrectableBasis& basis,
                             const CodeSpace& code, double tol = 1e-9);

// Weaker correctability condition in which the recovery may act on system and
// bath jointly: only the bath-summed products must be proportional to the
// code projector,
//   P_C (sum_m E_{i;ml}^† E_{j;mk}) P_C = lambda_{(il),(jk)} P_C.
// Passing the system-only condition implies passing this one.
struct OqecVerdict {
  bool correctable = false;
  ComplexMatrix lambda;               // over the flat pair index i * d_b + l
  double residual = 0.0;
  double scale = 1.0;
  std::array<Index, 4> worst_pair{};  // i, l, j, k
};

OqecVerdict oqec_check(const KrausChannel& ch, const CodeSpace& code,
                       double tol = 1e-9);

// For a channel that is trace preserving on the code only up to a factor
// gamma2, recovery returns gamma2 * Tr_B[rho] for every code state.  Returns
// the worst deviation (operator norm) over sampled pure code states.
double subtp_verify(const KrausChannel& ch, const CodeSpace& code,
                    const RecoveryMap& rec, double gamma2, int n_states = 100,
                    std::uint64_t seed = 1);

}  // namespace osqec
