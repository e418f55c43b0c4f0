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

#include "osqec/channels.hpp"

#include <cmath>

namespace osqec {

namespace {

void check_channel(const KrausChannel& ch) {
  if (ch.d_s <= 0 || ch.d_b <= 0)
    throw DimensionError("channel: dimensions must be positive");
  if (ch.kraus.empty()) throw DimensionError("channel: no Kraus operators");
  for (const ComplexMatrix& k : ch.kraus)
    if (k.rows() != ch.dim() || k.cols() != ch.dim())
      throw DimensionError("channel: Kraus operator has wrong shape");
}

}  // namespace

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho) {
  check_channel(ch);
  if (rho.rows() != ch.dim() || rho.cols() != ch.dim())
    throw DimensionError("apply: state has wrong shape");
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim(), ch.dim());
  for (const ComplexMatrix& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

TPClass classify_tp(const KrausChannel& ch, const ComplexMatrix& full_proj,
                    double tol) {
  check_channel(ch);
  ComplexMatrix sum = ComplexMatrix::Zero(ch.dim(), ch.dim());
  for (const ComplexMatrix& k : ch.kraus) sum += k.adjoint() * k;

  TPClass out;
  const double tp_residual =
      op_norm(sum - ComplexMatrix::Identity(ch.dim(), ch.dim()));
  if (tp_residual <= tol) {
    out.kind = TPKind::TP;
    out.gamma2 = 1.0;
    out.residual = tp_residual;
    return out;
  }

  // On the code subspace only: P (sum_a E_a^† E_a) P = gamma2 P, with gamma2
  // read off the normalized trace.
  const ComplexMatrix restricted = full_proj * sum * full_proj;
  const double proj_dim = full_proj.trace().real();
  if (proj_dim > 0.5) {
    const double gamma2 = restricted.trace().real() / proj_dim;
    const double residual = op_norm(restricted - gamma2 * full_proj);
    if (residual <= tol * std::max(1.0, gamma2) && gamma2 > tol) {
      out.kind = TPKind::SubTP;
      out.gamma2 = gamma2;
      out.residual = residual;
      return out;
    }
    out.residual = residual;
  } else {
    out.residual = tp_residual;
  }
  out.kind = TPKind::Neither;
  return out;
}

ComplexMatrix slice(const KrausChannel& ch, Index a, Index k, Index l) {
  check_channel(ch);
  if (a < 0 || a >= ch.n_kraus() || k < 0 || k >= ch.d_b || l < 0 ||
      l >= ch.d_b)
    throw DimensionError("slice: index out of range");
  ComplexMatrix out(ch.d_s, ch.d_s);
  for (Index s = 0; s < ch.d_s; ++s)
    for (Index t = 0; t < ch.d_s; ++t)
      out(s, t) = ch.kraus[a](s * ch.d_b + k, t * ch.d_b + l);
  return out;
}

KrausChannel g_map(const KrausChannel& ch) {
  check_channel(ch);
  KrausChannel out;
  out.d_s = ch.d_s;
  out.d_b = 1;
  const double norm = 1.0 / std::sqrt(static_cast<double>(ch.d_b));
  out.kraus.reserve(ch.kraus.size() * ch.d_b * ch.d_b);
  for (Index a = 0; a < ch.n_kraus(); ++a)
    for (Index k = 0; k < ch.d_b; ++k)
      for (Index l = 0; l < ch.d_b; ++l)
        out.kraus.push_back(norm * slice(ch, a, k, l));
  return out;
}

ComplexMatrix choi(const KrausChannel& ch) {
  check_channel(ch);
  const Index n = ch.dim() * ch.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& k : ch.kraus) {
    ComplexVector v(n);
    for (Index i = 0; i < ch.dim(); ++i)
      for (Index j = 0; j < ch.dim(); ++j) v(i * ch.dim() + j) = k(i, j);
    out += v * v.adjoint();
  }
  return out;
}

}  // namespace osqec
