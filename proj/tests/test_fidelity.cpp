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

#include <cmath>

#include "oracles.hpp"
#include "osqec/fidelity.hpp"
#include "osqec/random.hpp"
#include "osqec/scenarios.hpp"

using namespace osqec;

namespace {

ComplexMatrix random_density(Engine& engine, Index n) {
  const ComplexMatrix g = ginibre(engine, n, n);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("fidelity closed forms") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 0.6;
  a(1, 1) = 0.4;
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(0, 0) = 0.5;
  b(1, 1) = 0.5;
  // Commuting pair: F is the sum of sqrt(p_i q_i).
  CHECK(uhlmann_fidelity(a, b) ==
        doctest::Approx(std::sqrt(0.3) + std::sqrt(0.2)).epsilon(1e-13));
  CHECK(uhlmann_fidelity(a, a) == doctest::Approx(1.0));

  Engine engine(70);
  ComplexVector u = gaussian_vector(engine, 4);
  u /= u.norm();
  ComplexVector v = gaussian_vector(engine, 4);
  v /= v.norm();
  CHECK(uhlmann_fidelity(ComplexMatrix(u * u.adjoint()),
                         ComplexMatrix(v * v.adjoint())) ==
        doctest::Approx(std::abs(u.dot(v))).epsilon(1e-10));
}

TEST_CASE("fidelity agrees with the product-spectrum oracle and is "
          "symmetric") {
  Engine engine(71);
  for (int i = 0; i < 10; ++i) {
    const ComplexMatrix rho = random_density(engine, 5);
    const ComplexMatrix sigma = random_density(engine, 5);
    const double f = uhlmann_fidelity(rho, sigma);
    CHECK(f == doctest::Approx(oracle::fidelity_eig(rho, sigma))
                   .epsilon(1e-9));
    CHECK(f == doctest::Approx(uhlmann_fidelity(sigma, rho)).epsilon(1e-11));
    CHECK(f <= 1.0 + 1e-12);
    CHECK(f >= 0.0);
  }
}

TEST_CASE("fidelity validation rejects malformed density operators") {
  Engine engine(72);
  const ComplexMatrix good = random_density(engine, 3);
  CHECK_THROWS_AS(uhlmann_fidelity(ginibre(engine, 3, 3), good),
                  NotHermitianError);
  ComplexMatrix indefinite = good;
  indefinite(0, 0) -= 2.0;
  CHECK_THROWS_AS(uhlmann_fidelity(indefinite, good), Error);
  CHECK_THROWS_AS(uhlmann_fidelity(ComplexMatrix(2.0 * good), good),
                  NotNormalizedError);
  // The raw variant skips only the trace check.
  CHECK_NOTHROW(uhlmann_fidelity_raw(ComplexMatrix(2.0 * good), good));
  CHECK_THROWS_AS(uhlmann_fidelity(good, random_density(engine, 4)),
                  DimensionError);
}

TEST_CASE("fidelity loss vanishes for a perfectly corrected channel") {
  const KrausChannel ch = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 2, 11);
  const CodeSpace code = scenarios::repetition_code();
  const CorrectableBasis basis = diagonalize(extract_lambda(ch, code), ch,
                                             code);
  const RecoveryMap rec = universal_recovery(basis, code);
  Engine engine(73);
  for (int i = 0; i < 10; ++i)
    CHECK(eta_of_state(ch, rec, sample_code_state(code, 2, engine)) < 1e-12);
}

TEST_CASE("worst-case search stays near zero on a perfect instance") {
  const KrausChannel ch = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 2, 11);
  const CodeSpace code = scenarios::repetition_code();
  const CorrectableBasis basis = diagonalize(extract_lambda(ch, code), ch,
                                             code);
  const RecoveryMap rec = universal_recovery(basis, code);
  const WorstCaseResult wc = worst_case_eta(ch, rec, code, 2, 50, 20, 5);
  CHECK(wc.eta_max < 1e-10);
  CHECK(wc.samples_used == 50);
}

TEST_CASE("refined worst case matches a brute-force sampling oracle") {
  // d_b = 1 keeps the search space tiny (one logical qubit), so a large
  // plain sampling run pins the answer the refinement must reach.
  const KrausChannel base = scenarios::decorate_bath(
      scenarios::bit_flip_noise(0.05), 1, 10);
  const KrausChannel ch = scenarios::rotate(base, 0.1, 21);
  const CodeSpace code = scenarios::repetition_code();
  const CorrectableBasis basis =
      diagonalize(extract_lambda(base, code), base, code);
  const RecoveryMap rec = universal_recovery(basis, code);

  const WorstCaseResult wc = worst_case_eta(ch, rec, code, 1, 10000, 200, 1);
  CHECK(wc.converged);
  // eta at the reported argmax agrees with the standalone evaluator.
  CHECK(eta_of_state(ch, rec, wc.argmax_state) ==
        doctest::Approx(wc.eta_max).epsilon(1e-9));

  double oracle_max = 0.0;
  Engine engine(2);
  for (int i = 0; i < 200000; ++i) {
    const ComplexVector psi = sample_code_state(code, 1, engine);
    oracle_max = std::max(oracle_max, eta_of_state(ch, rec, psi));
  }
  CHECK(wc.eta_max >= oracle_max * (1.0 - 1e-4));
  CHECK(wc.eta_max <= oracle_max * 1.01 + 1e-12);
}

TEST_CASE("worst case on the damped channel reflects the lost trace") {
  const KrausChannel ch = scenarios::scale(
      scenarios::decorate_bath(scenarios::bit_flip_noise(0.05), 2, 11),
      std::sqrt(0.5));
  const CodeSpace code = scenarios::repetition_code();
  const CorrectableBasis basis = diagonalize(extract_lambda(ch, code), ch,
                                             code);
  const RecoveryMap rec = universal_recovery(basis, code);
  const WorstCaseResult wc = worst_case_eta(ch, rec, code, 2, 100, 20, 5);
  // F^2 equals the surviving trace, so the loss equals the damped share.
  CHECK(wc.eta_max == doctest::Approx(0.5).epsilon(1e-6));
}
