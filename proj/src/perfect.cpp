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

#include "osqec/perfect.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace osqec {

namespace {

// Bath blocks compressed onto the code from the right: X_p = E_{a;kl} V,
// ordered by the flat triple index (a * d_b + k) * d_b + l.
std::vector<ComplexMatrix> code_blocks(const KrausChannel& ch,
                                       const CodeSpace& code) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(ch.kraus.size() * ch.d_b * ch.d_b);
  for (Index a = 0; a < ch.n_kraus(); ++a)
    for (Index k = 0; k < ch.d_b; ++k)
      for (Index l = 0; l < ch.d_b; ++l)
        blocks.push_back(slice(ch, a, k, l) * code.basis);
  return blocks;
}

std::array<Index, 6> unflatten_pair(Index p, Index q, Index d_b) {
  return {p / (d_b * d_b), (p / d_b) % d_b, p % d_b,
          q / (d_b * d_b), (q / d_b) % d_b, q % d_b};
}

}  // namespace

LambdaVerdict extract_lambda(const KrausChannel& ch, const CodeSpace& code,
                             double tol) {
  if (ch.d_s != code.d_s)
    throw DimensionError("extract_lambda: channel and code dimensions differ");
  const Index d = code.dim();
  const std::vector<ComplexMatrix> blocks = code_blocks(ch, code);
  const Index n = static_cast<Index>(blocks.size());
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);

  LambdaVerdict out;
  out.n_kraus = ch.n_kraus();
  out.d_b = ch.d_b;
  out.lambda = ComplexMatrix(n, n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      const ComplexMatrix prod = blocks[p].adjoint() * blocks[q];
      const Complex lam = prod.trace() / static_cast<double>(d);
      out.lambda(p, q) = lam;
      const double dev = op_norm(prod - lam * eye);
      if (dev > out.residual) {
        out.residual = dev;
        out.worst_pair = unflatten_pair(p, q, ch.d_b);
      }
    }
  out.scale = std::max(1.0, out.lambda.cwiseAbs().maxCoeff());
  out.correctable = out.residual <= tol * out.scale;
  return out;
}

LambdaVerdict kl_check(const KrausChannel& ch, const CodeSpace& code,
                       double tol) {
  if (ch.d_b != 1)
    throw DimensionError("kl_check: channel must be system-only (d_b == 1)");
  return extract_lambda(ch, code, tol);
}

CorrectableBasis diagonalize(const LambdaVerdict& verdict,
                             const KrausChannel& ch, const CodeSpace& code,
                             double cutoff) {
  if (!verdict.correctable)
    throw Error("diagonalize: verdict did not pass the correctability check");
  if (verdict.n_kraus != ch.n_kraus() || verdict.d_b != ch.d_b)
    throw DimensionError("diagonalize: verdict does not match channel");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(verdict.lambda);
  const RealVector vals = es.eigenvalues();  // ascending
  const Index n = vals.size();
  const double max_val = vals.cwiseAbs().maxCoeff();
  if (vals(0) < -cutoff * std::max(1.0, max_val))
    throw NegativeEigenvalueError(
        "diagonalize: lambda matrix has a negative eigenvalue");

  CorrectableBasis basis;
  basis.d_s = ch.d_s;
  basis.mixer = es.eigenvectors();

  // Retained directions, eigenvalue-descending; mix the bath blocks and
  // rescale so the resulting operators are orthonormal on the code.
  std::vector<Index> keep;
  for (Index j = n - 1; j >= 0; --j)
    if (vals(j) > cutoff * max_val) keep.push_back(j);

  basis.eigvals = RealVector(static_cast<Index>(keep.size()));
  basis.f_ops.reserve(keep.size());
  Index out = 0;
  for (Index j : keep) {
    ComplexMatrix f = ComplexMatrix::Zero(ch.d_s, ch.d_s);
    Index p = 0;
    for (Index a = 0; a < ch.n_kraus(); ++a)
      for (Index k = 0; k < ch.d_b; ++k)
        for (Index l = 0; l < ch.d_b; ++l, ++p)
          f += basis.mixer(p, j) * slice(ch, a, k, l);
    basis.eigvals(out++) = vals(j);
    basis.f_ops.push_back(f / std::sqrt(vals(j)));
  }
  return basis;
}

RecoveryMap universal_recovery(const CorrectableBasis& basis,
                               const CodeSpace& code) {
  RecoveryMap rec;
  rec.d_s = basis.d_s;
  const ComplexMatrix p_c = projector(code);
  for (const ComplexMatrix& f : basis.f_ops)
    rec.system_kraus.push_back(p_c * f.adjoint());

  // The recovery operators leave 1 - sum_a R_a^† R_a, which is a projector
  // because the recovered images tile orthogonal subspaces.  Completing with
  // rank-one maps onto a fixed code state makes the total map TP.
  ComplexMatrix gap = ComplexMatrix::Identity(basis.d_s, basis.d_s);
  for (const ComplexMatrix& r : rec.system_kraus) gap -= r.adjoint() * r;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gap);
  const ComplexVector anchor = code.basis.col(0);
  for (Index j = 0; j < es.eigenvalues().size(); ++j) {
    const double kappa = es.eigenvalues()(j);
    if (kappa > 1e-10)
      rec.completion_kraus.push_back(std::sqrt(kappa) * anchor *
                                     es.eigenvectors().col(j).adjoint());
  }
  return rec;
}

KrausChannel recovery_channel(const RecoveryMap& rec, bool with_completion) {
  KrausChannel ch;
  ch.d_s = rec.d_s;
  ch.d_b = 1;
  ch.kraus = rec.system_kraus;
  if (with_completion)
    ch.kraus.insert(ch.kraus.end(), rec.completion_kraus.begin(),
                    rec.completion_kraus.end());
  return ch;
}

ComplexMatrix apply_recovery(const RecoveryMap& rec, const ComplexMatrix& rho,
                             Index d_b, bool with_completion) {
  const ComplexMatrix eye_b = ComplexMatrix::Identity(d_b, d_b);
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  const KrausChannel sys = recovery_channel(rec, with_completion);
  for (const ComplexMatrix& r : sys.kraus) {
    const ComplexMatrix lifted = tensor(r, eye_b);
    out += lifted * rho * lifted.adjoint();
  }
  return out;
}

SpanVerdict span_correctable(const KrausChannel& ch,
                             const CorrectableBasis& basis,
                             const CodeSpace& code, double tol) {
  if (ch.d_s != code.d_s)
    throw DimensionError("span_correctable: dimensions differ");
  const Index d = code.dim();
  // On-code representatives of the basis, orthonormal under the code inner
  // product <A, B> = Tr[A^† B] / d.
  std::vector<ComplexMatrix> reps;
  reps.reserve(basis.f_ops.size());
  for (const ComplexMatrix& f : basis.f_ops) reps.push_back(f * code.basis);

  SpanVerdict out;
  double max_norm = 0.0;
  for (Index a = 0; a < ch.n_kraus(); ++a)
    for (Index k = 0; k < ch.d_b; ++k)
      for (Index l = 0; l < ch.d_b; ++l) {
        const ComplexMatrix x = slice(ch, a, k, l) * code.basis;
        ComplexMatrix rem = x;
        for (const ComplexMatrix& g : reps)
          rem -= g * ((g.adjoint() * x).trace() / static_cast<double>(d));
        const double dev = op_norm(rem);
        max_norm = std::max(max_norm, op_norm(x));
        if (dev > out.residual) {
          out.residual = dev;
          out.worst_slice = {a, k, l};
        }
      }
  out.scale = std::max(1.0, max_norm);
  out.in_span = out.residual <= tol * out.scale;
  return out;
}

OqecVerdict oqec_check(const KrausChannel& ch, const CodeSpace& code,
                       double tol) {
  if (ch.d_s != code.d_s)
    throw DimensionError("oqec_check: channel and code dimensions differ");
  const Index d = code.dim();
  const Index n = ch.n_kraus() * ch.d_b;
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);

  // Blocks indexed by (Kraus, bath column): Y_{(i,l)} lists E_{i;ml} V over
  // the summed bath row m.
  std::vector<std::vector<ComplexMatrix>> blocks(n);
  for (Index i = 0; i < ch.n_kraus(); ++i)
    for (Index l = 0; l < ch.d_b; ++l) {
      auto& col = blocks[i * ch.d_b + l];
      col.reserve(ch.d_b);
      for (Index m = 0; m < ch.d_b; ++m)
        col.push_back(slice(ch, i, m, l) * code.basis);
    }

  OqecVerdict out;
  out.lambda = ComplexMatrix(n, n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      ComplexMatrix prod = ComplexMatrix::Zero(d, d);
      for (Index m = 0; m < ch.d_b; ++m)
        prod += blocks[p][m].adjoint() * blocks[q][m];
      const Complex lam = prod.trace() / static_cast<double>(d);
      out.lambda(p, q) = lam;
      const double dev = op_norm(prod - lam * eye);
      if (dev > out.residual) {
        out.residual = dev;
        out.worst_pair = {p / ch.d_b, p % ch.d_b, q / ch.d_b, q % ch.d_b};
      }
    }
  out.scale = std::max(1.0, out.lambda.cwiseAbs().maxCoeff());
  out.correctable = out.residual <= tol * out.scale;
  return out;
}

double subtp_verify(const KrausChannel& ch, const CodeSpace& code,
                    const RecoveryMap& rec, double gamma2, int n_states,
                    std::uint64_t seed) {
  Engine engine(seed);
  double worst = 0.0;
  for (int i = 0; i < n_states; ++i) {
    const ComplexVector psi = sample_code_state(code, ch.d_b, engine);
    const ComplexMatrix rho = psi * psi.adjoint();
    const ComplexMatrix recovered =
        partial_trace_bath(apply_recovery(rec, apply(ch, rho), ch.d_b),
                           ch.d_s, ch.d_b);
    const ComplexMatrix expected =
        gamma2 * partial_trace_bath(rho, ch.d_s, ch.d_b);
    worst = std::max(worst, op_norm(recovered - expected));
  }
  return worst;
}

}  // namespace osqec
