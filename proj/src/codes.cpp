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

#include "osqec/codes.hpp"

namespace osqec {

CodeSpace make_code(Index d_s, ComplexMatrix basis, double tol) {
  if (basis.rows() != d_s || basis.cols() < 1 || basis.cols() > d_s)
    throw DimensionError("code: basis must be d_s x d with 1 <= d <= d_s");
  const ComplexMatrix gram = basis.adjoint() * basis;
  if (op_norm(gram - ComplexMatrix::Identity(basis.cols(), basis.cols())) >
      tol)
    throw NotNormalizedError("code: basis columns are not orthonormal");
  CodeSpace code;
  code.d_s = d_s;
  code.basis = std::move(basis);
  return code;
}

ComplexMatrix projector(const CodeSpace& code) {
  return code.basis * code.basis.adjoint();
}

ComplexMatrix full_projector(const CodeSpace& code, Index d_b) {
  return tensor(projector(code),
                ComplexMatrix(ComplexMatrix::Identity(d_b, d_b)));
}

ComplexVector sample_code_state(const CodeSpace& code, Index d_b,
                                Engine& engine) {
  // Gaussian coordinates over code ⊗ bath, normalized, then embedded.
  ComplexVector c = gaussian_vector(engine, code.dim() * d_b);
  c /= c.norm();
  const ComplexMatrix embed =
      tensor(code.basis, ComplexMatrix(ComplexMatrix::Identity(d_b, d_b)));
  return embed * c;
}

ComplexVector sample_code_state(const CodeSpace& code, Index d_b,
                                std::uint64_t seed) {
  Engine engine(seed);
  return sample_code_state(code, d_b, engine);
}

}  // namespace osqec
