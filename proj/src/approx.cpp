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

#include "osqec/approx.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "osqec/fidelity.hpp"

namespace osqec {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Bath block <k| m |l> of a composite-space matrix.
ComplexMatrix bath_block(const ComplexMatrix& m, Index d_s, Index d_b, Index k,
                         Index l) {
  ComplexMatrix out(d_s, d_s);
  for (Index s = 0; s < d_s; ++s)
    for (Index t = 0; t < d_s; ++t) out(s, t) = m(s * d_b + k, t * d_b + l);
  return out;
}

// Assembles a composite-space matrix from on-code bath blocks X_{kl}
// (each d_s x d, standing for <k| m |l> restricted to the code).
ComplexMatrix assemble_from_blocks(
    const std::vector<std::vector<ComplexMatrix>>& x, const CodeSpace& code,
    Index d_b) {
  const Index d_s = code.d_s;
  ComplexMatrix out = ComplexMatrix::Zero(d_s * d_b, d_s * d_b);
  for (Index k = 0; k < d_b; ++k)
    for (Index l = 0; l < d_b; ++l) {
      const ComplexMatrix block = x[k][l] * code.basis.adjoint();
      for (Index s = 0; s < d_s; ++s)
        for (Index t = 0; t < d_s; ++t)
          out(s * d_b + k, t * d_b + l) = block(s, t);
    }
  return out;
}

// On-code representatives of the basis operators, orthonormal under
// <A, B> = Tr[A^† B] / d.
std::vector<ComplexMatrix> basis_reps(const CorrectableBasis& basis,
                                      const CodeSpace& code) {
  std::vector<ComplexMatrix> reps;
  reps.reserve(basis.f_ops.size());
  for (const ComplexMatrix& f : basis.f_ops) reps.push_back(f * code.basis);
  return reps;
}

}  // namespace

NoiseSplit split_noise(const KrausChannel& ch, const CorrectableBasis& basis,
                       const CodeSpace& code) {
  if (ch.d_s != code.d_s || ch.d_s != basis.d_s)
    throw DimensionError("split_noise: dimensions differ");
  const Index d = code.dim();
  const ComplexMatrix p_full = full_projector(code, ch.d_b);
  const std::vector<ComplexMatrix> reps = basis_reps(basis, code);

  NoiseSplit split;
  split.basis = basis;
  split.code = code;
  split.d_b = ch.d_b;
  split.mode = SplitMode::AutoProject;
  for (Index a = 0; a < ch.n_kraus(); ++a) {
    std::vector<std::vector<ComplexMatrix>> proj(
        ch.d_b, std::vector<ComplexMatrix>(ch.d_b));
    for (Index k = 0; k < ch.d_b; ++k)
      for (Index l = 0; l < ch.d_b; ++l) {
        const ComplexMatrix x = slice(ch, a, k, l) * code.basis;
        ComplexMatrix kept = ComplexMatrix::Zero(ch.d_s, d);
        for (const ComplexMatrix& g : reps)
          kept += g * ((g.adjoint() * x).trace() / static_cast<double>(d));
        proj[k][l] = kept;
      }
    const ComplexMatrix e_tilde_p = assemble_from_blocks(proj, code, ch.d_b);
    split.correctable.push_back(e_tilde_p);
    split.uncorrectable.push_back(ch.kraus[a] * p_full - e_tilde_p);
  }
  return split;
}

NoiseSplit split_noise(const KrausChannel& ch, const CorrectableBasis& basis,
                       const CodeSpace& code,
                       const std::vector<ComplexMatrix>& e_tilde_p,
                       double tol) {
  if (ch.d_s != code.d_s || ch.d_s != basis.d_s)
    throw DimensionError("split_noise: dimensions differ");
  if (e_tilde_p.size() != ch.kraus.size())
    throw DimensionError(
        "split_noise: supplied split has wrong number of operators");
  const Index d = code.dim();
  const ComplexMatrix p_full = full_projector(code, ch.d_b);
  const ComplexMatrix eye =
      ComplexMatrix::Identity(ch.dim(), ch.dim());
  const std::vector<ComplexMatrix> reps = basis_reps(basis, code);

  NoiseSplit split;
  split.basis = basis;
  split.code = code;
  split.d_b = ch.d_b;
  split.mode = SplitMode::UserProvided;
  double max_norm = 1.0;
  double worst = 0.0;
  for (Index a = 0; a < ch.n_kraus(); ++a) {
    const ComplexMatrix& m = e_tilde_p[a];
    if (m.rows() != ch.dim() || m.cols() != ch.dim())
      throw DimensionError("split_noise: supplied operator has wrong shape");
    const double support_dev = op_norm(m * (eye - p_full));
    if (support_dev > tol * std::max(1.0, op_norm(m)))
      throw SpanViolationError(
          "split_noise: correctable part does not act on the code subspace",
          support_dev);
    for (Index k = 0; k < ch.d_b; ++k)
      for (Index l = 0; l < ch.d_b; ++l) {
        const ComplexMatrix x = bath_block(m, ch.d_s, ch.d_b, k, l) *
                                code.basis;
        ComplexMatrix rem = x;
        for (const ComplexMatrix& g : reps)
          rem -= g * ((g.adjoint() * x).trace() / static_cast<double>(d));
        worst = std::max(worst, op_norm(rem));
        max_norm = std::max(max_norm, op_norm(x));
      }
    split.correctable.push_back(m);
    split.uncorrectable.push_back(ch.kraus[a] * p_full - m);
  }
  if (worst > tol * max_norm)
    throw SpanViolationError(
        "split_noise: correctable part leaves the basis span", worst);
  return split;
}

CorrectableBasis dominant_basis(const KrausChannel& ch, const CodeSpace& code,
                                double rel_cutoff) {
  const LambdaVerdict verdict = extract_lambda(ch, code);
  const Index d = code.dim();
  const Index cap = code.d_s / d;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(verdict.lambda);
  const RealVector vals = es.eigenvalues();
  const double max_val = vals.cwiseAbs().maxCoeff();
  std::vector<Index> keep;
  for (Index j = vals.size() - 1; j >= 0; --j)
    if (vals(j) > rel_cutoff * max_val &&
        static_cast<Index>(keep.size()) < cap)
      keep.push_back(j);
  if (keep.empty()) throw Error("dominant_basis: no usable directions");

  // Candidate operators from the dominant eigendirections, then a symmetric
  // re-orthonormalization of the stacked on-code representatives so that the
  // exact on-code orthonormality holds regardless of how far the channel is
  // from correctable.
  for (;;) {
    const Index n = static_cast<Index>(keep.size());
    ComplexMatrix stacked(code.d_s, n * d);
    for (Index c = 0; c < n; ++c) {
      ComplexMatrix f = ComplexMatrix::Zero(ch.d_s, ch.d_s);
      Index p = 0;
      for (Index a = 0; a < ch.n_kraus(); ++a)
        for (Index k = 0; k < ch.d_b; ++k)
          for (Index l = 0; l < ch.d_b; ++l, ++p)
            f += es.eigenvectors()(p, keep[c]) * slice(ch, a, k, l);
      stacked.middleCols(c * d, d) =
          f * code.basis / std::sqrt(vals(keep[c]));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> gram(
        ComplexMatrix(stacked.adjoint() * stacked));
    if (gram.eigenvalues()(0) < 1e-6) {
      // Nearly dependent directions; drop the weakest and retry.
      keep.pop_back();
      if (keep.empty())
        throw Error("dominant_basis: degenerate candidate directions");
      continue;
    }
    const ComplexMatrix inv_sqrt =
        gram.eigenvectors() *
        gram.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
        gram.eigenvectors().adjoint();
    const ComplexMatrix ortho = stacked * inv_sqrt;

    CorrectableBasis basis;
    basis.d_s = ch.d_s;
    basis.mixer = es.eigenvectors();
    basis.eigvals = RealVector(n);
    for (Index c = 0; c < n; ++c) {
      basis.eigvals(c) = vals(keep[c]);
      basis.f_ops.push_back(ortho.middleCols(c * d, d) *
                            code.basis.adjoint());
    }
    return basis;
  }
}

BoundReport compute_bound(const NoiseSplit& split) {
  const Index dim = split.code.d_s * split.d_b;
  ComplexMatrix cross = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix delta = ComplexMatrix::Zero(dim, dim);
  for (std::size_t a = 0; a < split.correctable.size(); ++a) {
    cross += split.uncorrectable[a].adjoint() * split.correctable[a];
    delta += split.uncorrectable[a].adjoint() * split.uncorrectable[a];
  }
  BoundReport out;
  out.theta = cross - cross.adjoint();  // anti-Hermitian exactly
  out.delta = delta;
  const double theta_norm = op_norm(out.theta);
  out.theta_norm_sq = theta_norm * theta_norm;
  out.delta_norm = op_norm(out.delta);
  out.epsilon = (1.0 + kSqrt2) / 8.0 * out.theta_norm_sq + out.delta_norm;
  return out;
}

ExpansionTerms recovered_state_exact(const NoiseSplit& split,
                                     const RecoveryMap& rec,
                                     const ComplexVector& psi) {
  const Index d_s = split.code.d_s;
  const Index d_b = split.d_b;
  if (psi.size() != d_s * d_b)
    throw DimensionError("recovered_state_exact: state has wrong size");
  const ComplexMatrix p_full = full_projector(split.code, d_b);
  if ((p_full * psi - psi).norm() > 1e-10)
    throw NotNormalizedError(
        "recovered_state_exact: state is not supported on the code");

  const ComplexMatrix rho = psi * psi.adjoint();
  const BoundReport bound = compute_bound(split);
  const ComplexMatrix p_c = projector(split.code);

  ExpansionTerms terms;
  terms.rho_s = partial_trace_bath(rho, d_s, d_b);

  // First order: a commutator contraction with the bath blocks of theta.
  terms.sigma1 = 0.5 * (partial_trace_bath(rho * bound.theta, d_s, d_b) -
                        partial_trace_bath(bound.theta * rho, d_s, d_b));

  // Second order: anticommutator contraction with delta plus the recovered
  // image of the remainder.
  const ComplexMatrix anti =
      partial_trace_bath(rho * bound.delta, d_s, d_b) +
      partial_trace_bath(bound.delta * rho, d_s, d_b);
  ComplexMatrix remainder_image = ComplexMatrix::Zero(d_s * d_b, d_s * d_b);
  for (const ComplexMatrix& b : split.uncorrectable)
    remainder_image += b * rho * b.adjoint();
  const ComplexMatrix t_op = partial_trace_bath(remainder_image, d_s, d_b);
  ComplexMatrix recovered_remainder = ComplexMatrix::Zero(d_s, d_s);
  for (const ComplexMatrix& f : split.basis.f_ops)
    recovered_remainder +=
        (p_c * f.adjoint()) * t_op * (f * p_c);
  terms.sigma2 = -0.5 * anti + recovered_remainder;

  // Independent route: apply channel and primary recovery operators directly.
  ComplexMatrix evolved = ComplexMatrix::Zero(d_s * d_b, d_s * d_b);
  for (std::size_t a = 0; a < split.correctable.size(); ++a) {
    const ComplexMatrix e_p = split.correctable[a] + split.uncorrectable[a];
    evolved += e_p * rho * e_p.adjoint();
  }
  const ComplexMatrix eye_b = ComplexMatrix::Identity(d_b, d_b);
  ComplexMatrix recovered_full = ComplexMatrix::Zero(d_s * d_b, d_s * d_b);
  for (const ComplexMatrix& r : rec.system_kraus) {
    const ComplexMatrix lifted = tensor(r, eye_b);
    recovered_full += lifted * evolved * lifted.adjoint();
  }
  terms.recovered = partial_trace_bath(recovered_full, d_s, d_b);
  terms.direct_residual =
      op_norm(terms.rho_s + terms.sigma1 + terms.sigma2 - terms.recovered);
  return terms;
}

SchmidtState code_schmidt_state(const CodeSpace& code, Index d_b,
                                const ComplexVector& psi) {
  const Index d = code.dim();
  const ComplexMatrix embed =
      tensor(code.basis, ComplexMatrix(ComplexMatrix::Identity(d_b, d_b)));
  const ComplexVector coords = embed.adjoint() * psi;
  if ((embed * coords - psi).norm() > 1e-10)
    throw NotNormalizedError(
        "code_schmidt_state: state is not supported on the code");
  SchmidtState s = schmidt_decompose(coords, d, d_b);
  s.system_vectors = (code.basis * s.system_vectors).eval();
  s.d = code.d_s;
  return s;
}

ExpansionTerms expansion_terms(const NoiseSplit& split,
                               const SchmidtState& schmidt,
                               ExpansionTerms terms) {
  const Index d_s = split.code.d_s;
  const Index d_b = split.d_b;
  if (schmidt.d != d_s || schmidt.d_b != d_b)
    throw DimensionError(
        "expansion_terms: Schmidt data does not match the split");
  const Index r = schmidt.rank();
  const RealVector& mu = schmidt.coefficients;
  const BoundReport bound = compute_bound(split);
  const ComplexVector psi = schmidt_reconstruct(schmidt);

  // Pair states |psi_k> ⊗ |bath_l> over the retained Schmidt rank, and the
  // scalar contractions of theta / delta against them.
  std::vector<std::vector<ComplexVector>> pair(r,
                                               std::vector<ComplexVector>(r));
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l < r; ++l)
      pair[k][l] = tensor(ComplexVector(schmidt.system_vectors.col(k)),
                          ComplexVector(schmidt.bath_vectors.col(l)));
  const ComplexVector theta_psi = bound.theta * psi;
  const ComplexVector delta_psi = bound.delta * psi;
  ComplexMatrix amp(r, r);  // <Psi| theta |Psi_{kl}>
  ComplexMatrix rev(r, r);  // <Psi_{kl}| theta |Psi>
  ComplexMatrix dmp(r, r);  // <Psi_{kl}| delta |Psi>
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l < r; ++l) {
      amp(k, l) = psi.dot(bound.theta * pair[k][l]);
      rev(k, l) = pair[k][l].dot(theta_psi);
      dmp(k, l) = pair[k][l].dot(delta_psi);
    }

  const auto q_op = [&](Index k, Index l) -> ComplexMatrix {
    return schmidt.system_vectors.col(k) *
           schmidt.system_vectors.col(l).adjoint();
  };
  const auto s_w = [&](Index k, Index l) {
    return mu(k) * mu(k) + mu(l) * mu(l);
  };

  ComplexMatrix delta1 = ComplexMatrix::Zero(d_s, d_s);
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l < r; ++l) {
      const double w = mu(k) * mu(k) * mu(l) / s_w(k, l);
      const Complex c = amp(l, k);
      delta1 += 0.5 * w * (c * q_op(k, l) + std::conj(c) * q_op(l, k));
    }

  ComplexMatrix v1 = ComplexMatrix::Zero(d_s, d_s);
  ComplexMatrix v2 = ComplexMatrix::Zero(d_s, d_s);
  ComplexMatrix v3 = ComplexMatrix::Zero(d_s, d_s);
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l < r; ++l)
      for (Index m = 0; m < r; ++m) {
        const double denom = s_w(k, l) * s_w(l, m) * s_w(m, k);
        const double w1 =
            -mu(k) * mu(k) * mu(k) * mu(l) * mu(l) * mu(m) / denom;
        const Complex c1 = amp(k, l) * amp(m, k);
        v1 += w1 * (c1 * q_op(l, m) + std::conj(c1) * q_op(m, l));
        const double w2 =
            mu(k) * mu(k) * mu(l) * mu(l) * mu(m) * mu(m) / denom;
        v2 += w2 * amp(k, l) * rev(k, m) * q_op(l, m);
        const double w3 =
            mu(k) * mu(l) * mu(m) * mu(m) * mu(m) * mu(m) / denom;
        v3 += w3 * rev(k, m) * amp(l, m) * q_op(k, l);
      }
  ComplexMatrix v_term = 0.25 * (v1 + v2 + v3);

  ComplexMatrix w1_term = ComplexMatrix::Zero(d_s, d_s);
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l < r; ++l) {
      const double w = -mu(k) * mu(l) * mu(l) / s_w(k, l);
      const Complex c = dmp(k, l);
      w1_term += 0.5 * w * (c * q_op(k, l) + std::conj(c) * q_op(l, k));
    }

  // The remainder image contracted over the full bath basis reduces to a
  // bath partial trace, which keeps the term independent of the bath basis.
  ComplexMatrix remainder_image =
      ComplexMatrix::Zero(d_s * d_b, d_s * d_b);
  const ComplexMatrix rho = psi * psi.adjoint();
  for (const ComplexMatrix& b : split.uncorrectable)
    remainder_image += b * rho * b.adjoint();
  const ComplexMatrix t_op = partial_trace_bath(remainder_image, d_s, d_b);
  ComplexMatrix mixed = ComplexMatrix::Zero(d_s, d_s);
  for (const ComplexMatrix& f : split.basis.f_ops)
    mixed += f.adjoint() * t_op * f;
  ComplexMatrix w2_term = ComplexMatrix::Zero(d_s, d_s);
  for (Index l = 0; l < r; ++l)
    for (Index m = 0; m < r; ++m)
      w2_term += (mu(l) * mu(m) / s_w(l, m)) * q_op(l, l) * mixed * q_op(m, m);

  terms.delta1 = delta1;
  terms.v_term = v_term;
  terms.w_term = w1_term + w2_term;
  terms.delta2 = terms.v_term + terms.w_term;
  return terms;
}

TraceBounds trace_bounds(const ExpansionTerms& terms, const BoundReport& bound,
                         bool strict, double slack) {
  // The trace of the first-order term vanishes identically; everything else
  // obeys one-sided budgets set by theta and delta.
  constexpr double kZeroTol = 1e-10;

  TraceBounds out;
  out.tr_delta1 = terms.delta1.trace().real();
  out.tr_v = terms.v_term.trace().real();
  out.tr_w = terms.w_term.trace().real();
  out.tr_delta2 = terms.delta2.trace().real();
  out.theta_budget = (1.0 + kSqrt2) / 16.0 * bound.theta_norm_sq;
  out.delta_budget = 0.5 * bound.delta_norm;

  const auto check = [&](bool ok, const std::string& what, double value,
                         double limit) {
    if (ok) return;
    if (strict) throw BoundViolatedError(what, value, limit);
    out.violations.push_back(what);
  };
  check(std::abs(out.tr_delta1) <= kZeroTol, "tr_delta1", out.tr_delta1,
        kZeroTol);
  check(out.tr_v <= slack, "tr_v_nonpositive", out.tr_v, slack);
  check(std::abs(out.tr_v) <= out.theta_budget + slack, "tr_v_budget",
        std::abs(out.tr_v), out.theta_budget);
  check(out.tr_w >= -out.delta_budget - slack, "tr_w_budget", out.tr_w,
        -out.delta_budget);
  check(out.tr_delta2 <= slack, "tr_delta2_nonpositive", out.tr_delta2, slack);
  check(out.tr_delta2 >= -(out.theta_budget + out.delta_budget) - slack,
        "tr_delta2_budget", out.tr_delta2,
        -(out.theta_budget + out.delta_budget));
  return out;
}

FidelityExpansion fidelity_expansion_check(const NoiseSplit& split,
                                           const RecoveryMap& rec,
                                           const ComplexVector& psi) {
  ExpansionTerms terms = recovered_state_exact(split, rec, psi);
  const SchmidtState schmidt = code_schmidt_state(split.code, split.d_b, psi);
  terms = expansion_terms(split, schmidt, terms);

  FidelityExpansion out;
  out.exact_f = uhlmann_fidelity_raw(terms.rho_s, terms.recovered);
  out.expanded_f =
      1.0 + terms.delta1.trace().real() + terms.delta2.trace().real();
  out.gap = std::abs(out.exact_f - out.expanded_f);
  return out;
}

ExpansionResiduals expansion_residuals(const NoiseSplit& split,
                                       const RecoveryMap& rec,
                                       const ComplexVector& psi,
                                       bool strict_bounds) {
  const BoundReport bound = compute_bound(split);
  ExpansionTerms terms = recovered_state_exact(split, rec, psi);
  const SchmidtState schmidt = code_schmidt_state(split.code, split.d_b, psi);
  terms = expansion_terms(split, schmidt, terms);

  ExpansionResiduals out;
  out.recovered_identity = terms.direct_residual;

  const ComplexMatrix root = psd_sqrt(terms.rho_s);
  out.sandwich_first = op_norm(terms.rho_s * terms.delta1 +
                               terms.delta1 * terms.rho_s -
                               root * terms.sigma1 * root);
  out.sandwich_second = op_norm(
      terms.delta1 * terms.delta1 + terms.rho_s * terms.delta2 +
      terms.delta2 * terms.rho_s - root * terms.sigma2 * root);

  // Entrywise identities in the Schmidt basis, from the alternative
  // arrangement of the corrections in terms of sigma1 / sigma2 elements.
  const Index r = schmidt.rank();
  const RealVector& mu = schmidt.coefficients;
  const auto elem = [&](const ComplexMatrix& mat, Index k, Index l) {
    return schmidt.system_vectors.col(k).dot(mat *
                                             schmidt.system_vectors.col(l));
  };
  const auto s_w = [&](Index k, Index l) {
    return mu(k) * mu(k) + mu(l) * mu(l);
  };
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l < r; ++l) {
      const double w = mu(k) * mu(l) / s_w(k, l);
      out.schmidt_first =
          std::max(out.schmidt_first,
                   std::abs(elem(terms.delta1, k, l) -
                            w * elem(terms.sigma1, k, l)));
      Complex chain = 0.0;
      for (Index m = 0; m < r; ++m)
        chain += mu(m) * mu(m) / (s_w(k, m) * s_w(l, m)) *
                 elem(terms.sigma1, k, m) * elem(terms.sigma1, m, l);
      out.schmidt_second =
          std::max(out.schmidt_second,
                   std::abs(elem(terms.delta2, k, l) -
                            w * (elem(terms.sigma2, k, l) - chain)));
    }

  const double exact_f = uhlmann_fidelity_raw(terms.rho_s, terms.recovered);
  out.expansion_gap = std::abs(
      exact_f -
      (1.0 + terms.delta1.trace().real() + terms.delta2.trace().real()));
  out.traces = trace_bounds(terms, bound, strict_bounds);
  out.terms = std::move(terms);
  return out;
}

}  // namespace osqec
