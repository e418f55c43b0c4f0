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

#include "osqec/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace osqec {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix partial_trace_bath(const ComplexMatrix& m, Index d_s, Index d_b) {
  if (m.rows() != d_s * d_b || m.cols() != d_s * d_b)
    throw DimensionError("partial_trace_bath: operator is not d_s*d_b square");
  ComplexMatrix out = ComplexMatrix::Zero(d_s, d_s);
  for (Index s = 0; s < d_s; ++s)
    for (Index t = 0; t < d_s; ++t)
      for (Index k = 0; k < d_b; ++k)
        out(s, t) += m(s * d_b + k, t * d_b + k);
  return out;
}

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("psd_sqrt: matrix not square");
  const double scale = std::max(1.0, op_norm(m));
  if (op_norm(m - m.adjoint()) > tol * scale)
    throw NotHermitianError("psd_sqrt: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      ((m + m.adjoint()) / 2.0).eval());
  RealVector vals = es.eigenvalues();
  // Flatten everything within numerical noise of zero, so rank-deficient
  // inputs do not leak sqrt(eps)-sized spurious directions.
  const double cut = 1e-13 * std::max(vals.maxCoeff(), 0.0);
  for (Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol * scale)
      throw NotPsdError("psd_sqrt: matrix has a negative eigenvalue");
    vals(i) = vals(i) > cut ? std::sqrt(vals(i)) : 0.0;
  }
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

SchmidtState schmidt_decompose(const ComplexVector& psi, Index d, Index d_b,
                               double cutoff) {
  if (psi.size() != d * d_b)
    throw DimensionError("schmidt_decompose: vector is not of size d*d_b");
  // Reshape |psi> = sum_{i,k} C(i,k) |i>|k> and take the SVD; the singular
  // values are the Schmidt coefficients and are nonnegative by construction.
  ComplexMatrix coeff(d, d_b);
  for (Index i = 0; i < d; ++i)
    for (Index k = 0; k < d_b; ++k) coeff(i, k) = psi(i * d_b + k);
  Eigen::JacobiSVD<ComplexMatrix> svd(
      coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  SchmidtState out;
  out.d = d;
  out.d_b = d_b;
  out.coefficients = sv.head(r);
  out.system_vectors = svd.matrixU().leftCols(r);
  // C = U S V^†, so the bath factor of the j-th Schmidt pair is conj(V col j).
  out.bath_vectors = svd.matrixV().leftCols(r).conjugate();
  return out;
}

ComplexVector schmidt_reconstruct(const SchmidtState& s) {
  ComplexVector psi = ComplexVector::Zero(s.d * s.d_b);
  for (Index j = 0; j < s.rank(); ++j)
    psi += s.coefficients(j) *
           tensor(ComplexVector(s.system_vectors.col(j)),
                  ComplexVector(s.bath_vectors.col(j)));
  return psi;
}

}  // namespace osqec
