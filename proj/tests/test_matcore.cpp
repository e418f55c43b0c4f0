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
#include "osqec/matcore.hpp"
#include "osqec/random.hpp"

using namespace osqec;

TEST_CASE("tensor product matches the index-loop oracle") {
  Engine engine(11);
  const ComplexMatrix a = ginibre(engine, 3, 2);
  const ComplexMatrix b = ginibre(engine, 2, 4);
  CHECK(op_norm(tensor(a, b) - oracle::kron(a, b)) == doctest::Approx(0.0));

  const ComplexVector u = gaussian_vector(engine, 3);
  const ComplexVector v = gaussian_vector(engine, 5);
  ComplexVector w(15);
  for (Index i = 0; i < 3; ++i)
    for (Index k = 0; k < 5; ++k) w(i * 5 + k) = u(i) * v(k);
  CHECK((tensor(u, v) - w).norm() == doctest::Approx(0.0));
}

TEST_CASE("tensor with identity embeds blocks") {
  Engine engine(12);
  const ComplexMatrix a = ginibre(engine, 2, 2);
  const ComplexMatrix eye = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix t = tensor(a, eye);
  CHECK(t.rows() == 6);
  CHECK(std::abs(t(0, 3) - a(0, 1)) == doctest::Approx(0.0));
  CHECK(std::abs(t(1, 4) - a(0, 1)) == doctest::Approx(0.0));
  CHECK(std::abs(t(0, 4)) == doctest::Approx(0.0));
}

TEST_CASE("bath partial trace agrees with the loop oracle and is trace "
          "preserving") {
  Engine engine(13);
  const ComplexMatrix m = ginibre(engine, 12, 12);
  const ComplexMatrix r = partial_trace_bath(m, 4, 3);
  CHECK(op_norm(r - oracle::trace_out_bath(m, 4, 3)) == doctest::Approx(0.0));
  CHECK(std::abs(r.trace() - m.trace()) < 1e-12);

  const ComplexMatrix a = ginibre(engine, 4, 4);
  const ComplexMatrix b = ginibre(engine, 3, 3);
  CHECK(op_norm(partial_trace_bath(tensor(a, b), 4, 3) - a * b.trace()) <
        1e-12);
}

TEST_CASE("operator norm agrees with power iteration and known spectra") {
  Engine engine(14);
  const ComplexMatrix m = ginibre(engine, 6, 6);
  CHECK(op_norm(m) == doctest::Approx(oracle::op_norm_power(m)).epsilon(1e-9));

  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = -5.0;
  d(2, 2) = 1.0;
  CHECK(op_norm(d) == doctest::Approx(5.0));
  CHECK(trace_norm(d) == doctest::Approx(8.0));

  const ComplexMatrix u = haar_unitary(engine, 6);
  CHECK(op_norm(u * m) == doctest::Approx(op_norm(m)).epsilon(1e-12));
}

TEST_CASE("trace norm of a Hermitian matrix sums absolute eigenvalues") {
  Engine engine(15);
  const ComplexMatrix h = random_hermitian(engine, 5);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  CHECK(trace_norm(h) ==
        doctest::Approx(es.eigenvalues().cwiseAbs().sum()).epsilon(1e-12));
}

TEST_CASE("psd_sqrt squares back to the input") {
  Engine engine(16);
  const ComplexMatrix g = ginibre(engine, 5, 5);
  const ComplexMatrix m = g * g.adjoint();
  const ComplexMatrix r = psd_sqrt(m);
  CHECK(op_norm(r * r - m) < 1e-12 * op_norm(m));
  CHECK(op_norm(r - r.adjoint()) < 1e-13);
}

TEST_CASE("psd_sqrt of a rank-one projector is exact") {
  Engine engine(17);
  ComplexVector v = gaussian_vector(engine, 8);
  v /= v.norm();
  const ComplexMatrix p = v * v.adjoint();
  // No sqrt(eps)-sized junk directions from the numerically zero eigenvalues.
  CHECK(op_norm(psd_sqrt(p) - p) < 1e-14);
}

TEST_CASE("psd_sqrt rejects non-Hermitian and indefinite inputs") {
  Engine engine(18);
  const ComplexMatrix g = ginibre(engine, 4, 4);
  CHECK_THROWS_AS(psd_sqrt(g), NotHermitianError);
  ComplexMatrix h = ComplexMatrix::Identity(3, 3);
  h(2, 2) = -0.5;
  CHECK_THROWS_AS(psd_sqrt(h), NotPsdError);
}

TEST_CASE("Schmidt decomposition reconstructs and matches the marginal "
          "spectrum") {
  Engine engine(19);
  ComplexVector psi = gaussian_vector(engine, 12);
  psi /= psi.norm();
  const SchmidtState s = schmidt_decompose(psi, 4, 3);
  CHECK((schmidt_reconstruct(s) - psi).norm() < 1e-13);
  CHECK(s.coefficients.squaredNorm() == doctest::Approx(1.0));
  for (Index i = 1; i < s.rank(); ++i)
    CHECK(s.coefficients(i - 1) >= s.coefficients(i));
  CHECK(op_norm(ComplexMatrix(s.system_vectors.adjoint() * s.system_vectors) -
                ComplexMatrix::Identity(s.rank(), s.rank())) < 1e-13);
  CHECK(op_norm(ComplexMatrix(s.bath_vectors.adjoint() * s.bath_vectors) -
                ComplexMatrix::Identity(s.rank(), s.rank())) < 1e-13);

  // Squared coefficients are the eigenvalues of the reduced state.
  const ComplexMatrix marginal =
      oracle::trace_out_bath(psi * psi.adjoint(), 4, 3);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(marginal,
                                                  Eigen::EigenvaluesOnly);
  for (Index i = 0; i < s.rank(); ++i)
    CHECK(s.coefficients(i) * s.coefficients(i) ==
          doctest::Approx(es.eigenvalues()(marginal.rows() - 1 - i))
              .epsilon(1e-10));
}

TEST_CASE("Schmidt decomposition of a product state has rank one") {
  Engine engine(20);
  ComplexVector a = gaussian_vector(engine, 4);
  a /= a.norm();
  ComplexVector b = gaussian_vector(engine, 3);
  b /= b.norm();
  const SchmidtState s = schmidt_decompose(tensor(a, b), 4, 3);
  CHECK(s.rank() == 1);
  CHECK(s.coefficients(0) == doctest::Approx(1.0));
}

TEST_CASE("Schmidt decomposition of the maximally entangled pair") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  const SchmidtState s = schmidt_decompose(bell, 2, 2);
  CHECK(s.rank() == 2);
  CHECK(s.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("schmidt_decompose rejects size mismatches") {
  CHECK_THROWS_AS(schmidt_decompose(ComplexVector::Zero(5), 2, 2),
                  DimensionError);
}
