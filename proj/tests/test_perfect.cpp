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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "oracles.hpp"
#include "osqec/perfect.hpp"
#include "osqec/random.hpp"
#include "osqec/scenarios.hpp"

using namespace osqec;

namespace {

// Projection residual of X P onto span{F P} in the code inner product
// <A, B> = Tr[P A^dagger B P] / d.
double span_residual(const ComplexMatrix& x, const CorrectableBasis& basis,
                     const CodeSpace& code) {
  const ComplexMatrix p = projector(code);
  const double d = static_cast<double>(code.dim());
  ComplexMatrix rem = x * p;
  for (const ComplexMatrix& f : basis.f_ops) {
    const Complex c = (p * f.adjoint() * x * p).trace() / d;
    rem -= c * f * p;
  }
  return op_norm(rem);
}

}  // namespace

TEST_CASE("repetition code under bit flips has the expected diagonal Gram") {
  for (double p : {0.01, 0.05, 0.1}) {
    const KrausChannel ch = scenarios::bit_flip_noise(p);
    const CodeSpace code = scenarios::repetition_code();
    const LambdaVerdict v = extract_lambda(ch, code);
    REQUIRE(v.correctable);
    CHECK(v.residual < 1e-12);
    REQUIRE(v.lambda.rows() == 4);
    const double diag[4] = {1.0 - 3.0 * p, p, p, p};
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j)
        CHECK(std::abs(v.lambda(i, j) - (i == j ? diag[i] : 0.0)) < 1e-14);
  }
}

TEST_CASE("diagonalized operators are orthonormal on the code and carry the "
          "slice span") {
  const KrausChannel ch = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 2, 11);
  const CodeSpace code = scenarios::repetition_code();
  const LambdaVerdict v = extract_lambda(ch, code);
  REQUIRE(v.correctable);
  const CorrectableBasis basis = diagonalize(v, ch, code);
  REQUIRE(basis.f_ops.size() == 4);
  for (Index i = 1; i < basis.eigvals.size(); ++i)
    CHECK(basis.eigvals(i - 1) >= basis.eigvals(i));

  const ComplexMatrix p = projector(code);
  const double d = static_cast<double>(code.dim());
  for (std::size_t a = 0; a < basis.f_ops.size(); ++a)
    for (std::size_t b = 0; b < basis.f_ops.size(); ++b) {
      const ComplexMatrix prod =
          p * basis.f_ops[a].adjoint() * basis.f_ops[b] * p;
      CHECK(op_norm(prod - (a == b ? 1.0 : 0.0) * p) < 1e-12);
    }

  // Every bath slice stays inside the recovered-operator span on the code.
  for (Index a = 0; a < ch.n_kraus(); ++a)
    for (Index k = 0; k < ch.d_b; ++k)
      for (Index l = 0; l < ch.d_b; ++l)
        CHECK(span_residual(slice(ch, a, k, l), basis, code) < 1e-12);
  CHECK(span_correctable(ch, basis, code).in_span);
}

TEST_CASE("the isolated dominant direction reproduces the identity error") {
  // Bare bit-flip noise: the top Gram eigenvalue 1 - 3p is isolated, so its
  // operator must be a phase times the identity on the code.
  const KrausChannel ch = scenarios::bit_flip_noise(0.05);
  const CodeSpace code = scenarios::repetition_code();
  const CorrectableBasis basis = diagonalize(extract_lambda(ch, code), ch,
                                             code);
  CHECK(basis.eigvals(0) == doctest::Approx(0.85));
  const ComplexMatrix p = projector(code);
  const Complex phase = (p * basis.f_ops[0] * p).trace() / 2.0;
  CHECK(std::abs(phase) == doctest::Approx(1.0));
  CHECK(op_norm(basis.f_ops[0] * p - phase * p) < 1e-12);
}

TEST_CASE("universal recovery is trace preserving and inverts the channel on "
          "the code") {
  for (Index d_b : {Index{1}, Index{2}, Index{3}}) {
    const KrausChannel ch = scenarios::decorate_bath(
        scenarios::bit_flip_noise(0.05), d_b, 10 + d_b);
    const CodeSpace code = scenarios::repetition_code();
    const CorrectableBasis basis =
        diagonalize(extract_lambda(ch, code), ch, code);
    const RecoveryMap rec = universal_recovery(basis, code);

    ComplexMatrix sum = ComplexMatrix::Zero(8, 8);
    for (const ComplexMatrix& r : recovery_channel(rec, true).kraus)
      sum += r.adjoint() * r;
    CHECK(op_norm(sum - ComplexMatrix::Identity(8, 8)) < 1e-12);

    CHECK(subtp_verify(ch, code, rec, 1.0, 50, 7) < 1e-10);
  }
}

TEST_CASE("recovery on a non-code sector is completed, not silently dropped") {
  // A two-operator channel whose recovered span misses part of the system
  // space forces a nontrivial completion.
  const KrausChannel ch = scenarios::bit_flip_noise(0.05);
  const CodeSpace code = scenarios::repetition_code();
  const CorrectableBasis basis = diagonalize(extract_lambda(ch, code), ch,
                                             code);
  const RecoveryMap rec = universal_recovery(basis, code);
  // Four operators of rank 2 tile all of C^8 here, so completion is empty;
  // dropping one operator must produce completion mass instead.
  CHECK(rec.completion_kraus.empty());

  CorrectableBasis truncated = basis;
  truncated.f_ops.pop_back();
  const RecoveryMap partial = universal_recovery(truncated, code);
  CHECK(!partial.completion_kraus.empty());
  ComplexMatrix sum = ComplexMatrix::Zero(8, 8);
  for (const ComplexMatrix& r : recovery_channel(partial, true).kraus)
    sum += r.adjoint() * r;
  CHECK(op_norm(sum - ComplexMatrix::Identity(8, 8)) < 1e-12);
}

TEST_CASE("joint-slice verdict matches the reduced-map verdict") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto good = scenarios::random_correctable(seed);
    const LambdaVerdict direct = extract_lambda(good.channel, good.code);
    const LambdaVerdict reduced = kl_check(g_map(good.channel), good.code);
    CHECK(direct.correctable);
    CHECK(reduced.correctable);
    CHECK(op_norm(reduced.lambda * static_cast<double>(good.channel.d_b) -
                  direct.lambda) < 1e-11);

    const auto bad = scenarios::random_violating(seed);
    CHECK(!extract_lambda(bad.channel, bad.code).correctable);
    CHECK(!kl_check(g_map(bad.channel), bad.code).correctable);
  }
}

TEST_CASE("kl_check rejects channels that still carry a bath") {
  const KrausChannel ch = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 2, 11);
  CHECK_THROWS_AS(kl_check(ch, scenarios::repetition_code()), DimensionError);
}

TEST_CASE("correctability verdict is invariant under bath conjugation and "
          "Kraus remixing") {
  Engine engine(50);
  const KrausChannel ch = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 2, 11);
  const CodeSpace code = scenarios::repetition_code();
  const LambdaVerdict v = extract_lambda(ch, code);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> base_eigs(
      v.lambda, Eigen::EigenvaluesOnly);
  for (int trial = 0; trial < 5; ++trial) {
    const KrausChannel conj =
        scenarios::conjugate_bath(ch, haar_unitary(engine, 2));
    const KrausChannel mixed =
        scenarios::remix(ch, haar_unitary(engine, ch.n_kraus()));
    const LambdaVerdict vc = extract_lambda(conj, code);
    const LambdaVerdict vm = extract_lambda(mixed, code);
    CHECK(vc.correctable);
    CHECK(vm.correctable);
    // The Gram spectrum is a unitary invariant of both transformations.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> em(vm.lambda,
                                                    Eigen::EigenvaluesOnly);
    CHECK(op_norm(ComplexMatrix(
              (em.eigenvalues() - base_eigs.eigenvalues()).asDiagonal())) <
          1e-11);
  }
}

TEST_CASE("global rotation breaks the joint condition but not the weaker "
          "one") {
  const KrausChannel ch = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 2, 11);
  const CodeSpace code = scenarios::repetition_code();
  const KrausChannel rotated = scenarios::rotate(ch, 0.35, 99);

  CHECK(extract_lambda(ch, code).correctable);
  CHECK(oqec_check(ch, code).correctable);
  CHECK(!extract_lambda(rotated, code).correctable);
  // Left multiplication by a global unitary cancels inside E_i^dagger E_j.
  CHECK(oqec_check(rotated, code).correctable);
}

TEST_CASE("swap channel is recoverable only through a joint bath operation") {
  const KrausChannel sw = scenarios::swap_witness();
  const CodeSpace full = scenarios::full_code(2);
  const LambdaVerdict strong = extract_lambda(sw, full);
  CHECK(!strong.correctable);
  CHECK(strong.residual > 0.1);
  CHECK(oqec_check(sw, full).correctable);
}

TEST_CASE("span check flags rotated channels") {
  const KrausChannel ch = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 2, 11);
  const CodeSpace code = scenarios::repetition_code();
  const CorrectableBasis basis = diagonalize(extract_lambda(ch, code), ch,
                                             code);
  const KrausChannel rotated = scenarios::rotate(ch, 0.35, 99);
  const SpanVerdict sv = span_correctable(rotated, basis, code);
  CHECK(!sv.in_span);
  CHECK(sv.residual > 1e-3);
}

TEST_CASE("scaled channels keep the verdict and recover the scaled marginal") {
  for (double gamma2 : {0.25, 0.5, 0.9}) {
    const KrausChannel ch = scenarios::scale(
        scenarios::decorate_bath(scenarios::bit_flip_noise(0.05), 2, 11),
        std::sqrt(gamma2));
    const CodeSpace code = scenarios::repetition_code();
    const LambdaVerdict v = extract_lambda(ch, code);
    REQUIRE(v.correctable);
    const TPClass tp = classify_tp(ch, full_projector(code, 2));
    CHECK(tp.kind == TPKind::SubTP);
    CHECK(tp.gamma2 == doctest::Approx(gamma2));
    const CorrectableBasis basis = diagonalize(v, ch, code);
    const RecoveryMap rec = universal_recovery(basis, code);
    CHECK(subtp_verify(ch, code, rec, gamma2, 50, 3) < 1e-10);
  }
}

TEST_CASE("worst violating pair indexes a genuinely failing product") {
  const KrausChannel rotated = scenarios::rotate(
      scenarios::decorate_bath(scenarios::bit_flip_noise(0.05), 2, 11), 0.35,
      99);
  const CodeSpace code = scenarios::repetition_code();
  const LambdaVerdict v = extract_lambda(rotated, code);
  REQUIRE(!v.correctable);
  const auto& wp = v.worst_pair;
  const ComplexMatrix left = slice(rotated, wp[0], wp[1], wp[2]);
  const ComplexMatrix right = slice(rotated, wp[3], wp[4], wp[5]);
  const ComplexMatrix v_basis = code.basis;
  const ComplexMatrix prod =
      v_basis.adjoint() * left.adjoint() * right * v_basis;
  const Complex lam = prod.trace() / static_cast<double>(code.dim());
  const double dev = op_norm(
      prod - lam * ComplexMatrix::Identity(code.dim(), code.dim()));
  CHECK(dev == doctest::Approx(v.residual).epsilon(1e-9));
}
