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

#include <string>
#include <vector>

#include "osqec/perfect.hpp"

namespace osqec {

// Decomposition E_a = correctable part + remainder, tracked only through the
// actions (correctable_a) P and B_a P on the code subspace.  The correctable
// parts have every bath block inside the span of the reference basis, so they
// are corrected exactly by that basis' universal recovery.
enum class SplitMode { AutoProject, UserProvided };

struct NoiseSplit {
  std::vector<ComplexMatrix> correctable;    // \tilde E_a P, composite space
  std::vector<ComplexMatrix> uncorrectable;  // B_a P = E_a P - \tilde E_a P
  CorrectableBasis basis;
  CodeSpace code;
  Index d_b = 1;
  SplitMode mode = SplitMode::AutoProject;
};

// AutoProject: the correctable part is the orthogonal projection of each bath
// block onto the basis span under the code inner product.
NoiseSplit split_noise(const KrausChannel& ch, const CorrectableBasis& basis,
                       const CodeSpace& code);

// UserProvided: e_tilde_p supplies \tilde E_a P directly (one composite-space
// matrix per Kraus operator).  Bath blocks outside the basis span beyond tol
// throw SpanViolationError.
NoiseSplit split_noise(const KrausChannel& ch, const CorrectableBasis& basis,
                       const CodeSpace& code,
                       const std::vector<ComplexMatrix>& e_tilde_p,
                       double tol = 1e-9);

// Orthonormal basis for near-correctable channels without a reference: the
// dominant eigendirections of the extracted lambda matrix (capped at
// floor(d_s / d) operators), symmetrically re-orthonormalized so the exact
// on-code orthonormality holds even when the channel itself does not pass the
// correctability check.
CorrectableBasis dominant_basis(const KrausChannel& ch, const CodeSpace& code,
                                double rel_cutoff = 1e-10);

// Worst-case fidelity-loss bound for the split:
//   theta = sum_a [ (B_a P)^† (\tilde E_a P) - (\tilde E_a P)^† (B_a P) ]
//   delta = sum_a (B_a P)^† (B_a P)
//   epsilon = (1 + sqrt(2))/8 * ||theta^† theta|| + ||delta||.
struct BoundReport {
  ComplexMatrix theta;  // anti-Hermitian by construction
  ComplexMatrix delta;  // positive semidefinite by construction
  double theta_norm_sq = 0.0;
  double delta_norm = 0.0;
  double epsilon = 0.0;
};

BoundReport compute_bound(const NoiseSplit& split);

// Recovered system state after noise and universal recovery, organized as
//   Tr_B[(R ∘ E)(rho)] = rho_s + sigma1 + sigma2,
// where sigma1 collects the terms linear in the remainder (a commutator with
// theta's bath blocks) and sigma2 the quadratic ones.  The identity is exact
// for trace-preserving channels whose correctable part lies in the basis
// span; direct_residual measures it against independent channel application
// (primary recovery operators only).  delta1/delta2 and their split into
// v_term / w_term are the matching first and second order corrections to the
// fidelity between rho_s and the recovered state, filled by expansion_terms.
struct ExpansionTerms {
  ComplexMatrix rho_s;      // input system marginal
  ComplexMatrix recovered;  // Tr_B[(R ∘ E)(rho)], primary operators only
  ComplexMatrix sigma1;
  ComplexMatrix sigma2;
  ComplexMatrix delta1;
  ComplexMatrix delta2;
  ComplexMatrix v_term;
  ComplexMatrix w_term;
  double direct_residual = 0.0;
};

ExpansionTerms recovered_state_exact(const NoiseSplit& split,
                                     const RecoveryMap& rec,
                                     const ComplexVector& psi);

// Schmidt decomposition of a pure code state with the system vectors embedded
// in the full system space (columns of size d_s).
SchmidtState code_schmidt_state(const CodeSpace& code, Index d_b,
                                const ComplexVector& psi);

// Fills delta1, delta2 = v_term + w_term from the closed-form expansion in
// the Schmidt data of the input state.  Sums run over the retained Schmidt
// rank only; terms whose coefficient weight vanishes are dropped.
ExpansionTerms expansion_terms(const NoiseSplit& split,
                               const SchmidtState& schmidt,
                               ExpansionTerms terms);

// Trace identities and inequalities obeyed by the expansion:
//   Tr delta1 = 0,
//   Tr v_term <= 0,  |Tr v_term| <= (1 + sqrt(2))/16 * ||theta^† theta||,
//   Tr w_term >= -||delta|| / 2,
//   0 >= Tr delta2 >= -[(1 + sqrt(2))/16 * ||theta^† theta|| + ||delta||/2].
// Violations beyond `slack` throw BoundViolatedError when strict, otherwise
// they are recorded in `violations`.
struct TraceBounds {
  double tr_delta1 = 0.0;
  double tr_v = 0.0;
  double tr_w = 0.0;
  double tr_delta2 = 0.0;
  double theta_budget = 0.0;  // (1 + sqrt(2))/16 * ||theta^† theta||
  double delta_budget = 0.0;  // ||delta|| / 2
  std::vector<std::string> violations;
};

TraceBounds trace_bounds(const ExpansionTerms& terms, const BoundReport& bound,
                         bool strict = true, double slack = 1e-12);

// Compares the fidelity between input and recovered system states against its
// second-order expansion 1 + Tr delta1 + Tr delta2; the gap is third order in
// the remainder.
struct FidelityExpansion {
  double exact_f = 0.0;
  double expanded_f = 0.0;
  double gap = 0.0;
};

FidelityExpansion fidelity_expansion_check(const NoiseSplit& split,
                                           const RecoveryMap& rec,
                                           const ComplexVector& psi);

// Every identity and inequality the expansion obeys, evaluated on one state.
// The two sandwich identities couple delta1/delta2 to sigma1/sigma2 through
// sqrt(rho_s); the Schmidt-basis identities express the same couplings
// entrywise and are computed from an independent arrangement of the terms.
struct ExpansionResiduals {
  double recovered_identity = 0.0;  // rho_s + sigma1 + sigma2 vs direct
  double sandwich_first = 0.0;      // rho d1 + d1 rho vs sigma1 sandwich
  double sandwich_second = 0.0;     // d1^2 + rho d2 + d2 rho vs sigma2 sandwich
  double schmidt_first = 0.0;       // delta1 entries vs weighted sigma1
  double schmidt_second = 0.0;      // delta2 entries vs weighted sigma1/sigma2
  double expansion_gap = 0.0;       // fidelity vs second-order expansion
  TraceBounds traces;
  ExpansionTerms terms;
};

ExpansionResiduals expansion_residuals(const NoiseSplit& split,
                                       const RecoveryMap& rec,
                                       const ComplexVector& psi,
                                       bool strict_bounds = false);

}  // namespace osqec
