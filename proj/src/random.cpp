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

#include "osqec/random.hpp"

#include <Eigen/QR>
#include <cmath>

namespace osqec {

ComplexVector gaussian_vector(Engine& engine, Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = normal(engine);
    const double im = normal(engine);
    v(i) = Complex(re, im);
  }
  return v;
}

ComplexMatrix ginibre(Engine& engine, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(engine);
      const double im = normal(engine);
      m(i, j) = Complex(re, im);
    }
  return m;
}

ComplexMatrix haar_unitary(Engine& engine, Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(engine, n, n));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fold the phases of R's diagonal into Q to make the distribution Haar.
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix random_hermitian(Engine& engine, Index n) {
  const ComplexMatrix g = ginibre(engine, n, n);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace osqec
