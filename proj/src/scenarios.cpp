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

#include "osqec/scenarios.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "osqec/random.hpp"

namespace osqec::scenarios {

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

}  // namespace

KrausChannel identity_channel(Index d_s, Index d_b) {
  KrausChannel ch;
  ch.d_s = d_s;
  ch.d_b = d_b;
  ch.kraus.push_back(ComplexMatrix::Identity(d_s * d_b, d_s * d_b));
  return ch;
}

CodeSpace span_code(Index d_s, const std::vector<Index>& kept) {
  ComplexMatrix basis = ComplexMatrix::Zero(d_s, static_cast<Index>(kept.size()));
  for (Index j = 0; j < basis.cols(); ++j) basis(kept[j], j) = 1.0;
  return make_code(d_s, std::move(basis));
}

CodeSpace full_code(Index d_s) {
  return make_code(d_s, ComplexMatrix::Identity(d_s, d_s));
}

CodeSpace repetition_code() { return span_code(8, {0, 7}); }

KrausChannel bit_flip_noise(double p) {
  const ComplexMatrix x = pauli_x();
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
  KrausChannel ch;
  ch.d_s = 8;
  ch.d_b = 1;
  ch.kraus.push_back(std::sqrt(1.0 - 3.0 * p) *
                     ComplexMatrix::Identity(8, 8));
  ch.kraus.push_back(std::sqrt(p) * tensor(tensor(x, eye), eye));
  ch.kraus.push_back(std::sqrt(p) * tensor(tensor(eye, x), eye));
  ch.kraus.push_back(std::sqrt(p) * tensor(tensor(eye, eye), x));
  return ch;
}

KrausChannel decorate_bath(const KrausChannel& sys_ch, Index d_b,
                           std::uint64_t seed) {
  if (sys_ch.d_b != 1)
    throw DimensionError("decorate_bath: base channel must be system-only");
  const Index n = sys_ch.n_kraus();
  Engine engine(seed);
  const ComplexMatrix w = haar_unitary(engine, n * d_b);
  KrausChannel out;
  out.d_s = sys_ch.d_s;
  out.d_b = d_b;
  for (Index b = 0; b < n; ++b) {
    ComplexMatrix e = ComplexMatrix::Zero(out.dim(), out.dim());
    for (Index a = 0; a < n; ++a)
      e += tensor(sys_ch.kraus[a],
                  ComplexMatrix(w.block(b * d_b, a * d_b, d_b, d_b)));
    out.kraus.push_back(e);
  }
  return out;
}

namespace {

// exp(-i t H) for a seeded random H with unit operator norm.
ComplexMatrix rotation_unitary(Index dim, double t, std::uint64_t seed) {
  Engine engine(seed);
  ComplexMatrix h = random_hermitian(engine, dim);
  h /= op_norm(h);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(dim);
  for (Index j = 0; j < dim; ++j)
    phases(j) = std::exp(Complex(0.0, -t * es.eigenvalues()(j)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

KrausChannel rotate(const KrausChannel& ch, double t, std::uint64_t seed) {
  const ComplexMatrix u = rotation_unitary(ch.dim(), t, seed);
  KrausChannel out = ch;
  for (ComplexMatrix& k : out.kraus) k = u * k;
  return out;
}

KrausChannel scale(const KrausChannel& ch, double gamma) {
  KrausChannel out = ch;
  for (ComplexMatrix& k : out.kraus) k *= gamma;
  return out;
}

KrausChannel conjugate_bath(const KrausChannel& ch, const ComplexMatrix& u_b) {
  if (u_b.rows() != ch.d_b || u_b.cols() != ch.d_b)
    throw DimensionError("conjugate_bath: unitary has wrong shape");
  const ComplexMatrix lifted =
      tensor(ComplexMatrix(ComplexMatrix::Identity(ch.d_s, ch.d_s)), u_b);
  KrausChannel out = ch;
  for (ComplexMatrix& k : out.kraus) k = lifted * k * lifted.adjoint();
  return out;
}

KrausChannel remix(const KrausChannel& ch, const ComplexMatrix& u_mix) {
  if (u_mix.rows() != ch.n_kraus() || u_mix.cols() != ch.n_kraus())
    throw DimensionError("remix: unitary has wrong shape");
  KrausChannel out = ch;
  for (Index a = 0; a < ch.n_kraus(); ++a) {
    ComplexMatrix e = ComplexMatrix::Zero(ch.dim(), ch.dim());
    for (Index b = 0; b < ch.n_kraus(); ++b) e += u_mix(a, b) * ch.kraus[b];
    out.kraus[a] = e;
  }
  return out;
}

KrausChannel swap_witness() {
  KrausChannel ch;
  ch.d_s = 2;
  ch.d_b = 2;
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  for (Index s = 0; s < 2; ++s)
    for (Index k = 0; k < 2; ++k) swap(k * 2 + s, s * 2 + k) = 1.0;
  ch.kraus.push_back(swap);
  return ch;
}

RandomInstance random_correctable(std::uint64_t seed) {
  Engine engine(seed);
  const Index d_s = 4 + static_cast<Index>(engine() % 5);  // 4..8
  // Two-dimensional codes only: on a one-dimensional code every channel is
  // trivially correctable, which would defeat the violating variant below.
  const Index d = 2;
  const Index max_ops = std::min<Index>(4, d_s / d);
  const Index n_ops = 2 + static_cast<Index>(engine() % (max_ops - 1));
  const Index d_b = 1 + static_cast<Index>(engine() % 2);  // 1..2

  RandomInstance inst;
  inst.code = make_code(d_s, haar_unitary(engine, d_s).leftCols(d));

  // Error operators with orthonormal images of the code: blocks of a second
  // Haar unitary mapped onto the code basis.
  const ComplexMatrix u = haar_unitary(engine, d_s);
  std::vector<ComplexMatrix> errors;
  for (Index a = 0; a < n_ops; ++a)
    errors.push_back(u.middleCols(a * d, d) * inst.code.basis.adjoint());

  // Bath-dressed combinations plus the orthogonal-sector operator; trace
  // preserving by construction.
  const ComplexMatrix w = haar_unitary(engine, n_ops * d_b);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_ops));
  inst.channel.d_s = d_s;
  inst.channel.d_b = d_b;
  for (Index b = 0; b < n_ops; ++b) {
    ComplexMatrix e = ComplexMatrix::Zero(d_s * d_b, d_s * d_b);
    for (Index a = 0; a < n_ops; ++a)
      e += norm * tensor(errors[a],
                         ComplexMatrix(w.block(b * d_b, a * d_b, d_b, d_b)));
    inst.channel.kraus.push_back(e);
  }
  const ComplexMatrix rest =
      ComplexMatrix::Identity(d_s, d_s) - projector(inst.code);
  inst.channel.kraus.push_back(
      tensor(rest, ComplexMatrix(ComplexMatrix::Identity(d_b, d_b))));
  return inst;
}

RandomInstance random_violating(std::uint64_t seed) {
  RandomInstance inst = random_correctable(seed);
  // Rotate the input side.  A rotation after the channel leaves every Gram
  // matrix of the form E_a^dag E_b untouched, so with a single bath level it
  // can never break correctability; a rotation in front moves the code off
  // the corrected subspace for any bath dimension.
  const ComplexMatrix u = rotation_unitary(inst.channel.dim(), 0.35,
                                           seed + 0x9e3779b97f4a7c15ULL);
  for (ComplexMatrix& k : inst.channel.kraus) k = k * u;
  return inst;
}

}  // namespace osqec::scenarios
