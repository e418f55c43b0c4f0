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

#include <Eigen/Dense>
#include <complex>

#include "osqec/errors.hpp"

namespace osqec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Bipartite system-bath indexing convention used throughout: the composite
// basis state |s> ⊗ |k> (system index s, bath index k) sits at flat index
// s * d_b + k.  All tensor products and partial traces below follow it.

// Kronecker product a ⊗ b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

// Trace over the bath factor of a (d_s*d_b) x (d_s*d_b) operator.
ComplexMatrix partial_trace_bath(const ComplexMatrix& m, Index d_s, Index d_b);

// Operator norm (largest singular value).
double op_norm(const ComplexMatrix& m);

// Trace norm (sum of singular values).
double trace_norm(const ComplexMatrix& m);

// Principal square root of a positive semidefinite matrix.  Tolerances are
// relative to max(1, ||m||): Hermiticity deviations beyond tol throw
// NotHermitianError, eigenvalues below -tol throw NotPsdError, and small
// negative eigenvalues within tolerance are clipped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol = 1e-9);

// Schmidt decomposition of a bipartite pure state,
//   |psi> = sum_k mu_k |psi_k> ⊗ |k>,
// with mu_k >= 0 sorted descending and orthonormal factor vectors (phases are
// absorbed into the bath vectors).  Coefficients at or below `cutoff` are
// dropped, so only the retained rank is stored.
struct SchmidtState {
  RealVector coefficients;      // mu_k, descending, retained only
  ComplexMatrix system_vectors; // d x r, orthonormal columns
  ComplexMatrix bath_vectors;   // d_b x r, orthonormal columns
  Index d = 0;                  // dimension of the first factor
  Index d_b = 0;                // dimension of the bath factor
  Index rank() const { return coefficients.size(); }
};

SchmidtState schmidt_decompose(const ComplexVector& psi, Index d, Index d_b,
                               double cutoff = 1e-12);

// Reassembles the state vector a SchmidtState describes.
ComplexVector schmidt_reconstruct(const SchmidtState& s);

}  // namespace osqec
