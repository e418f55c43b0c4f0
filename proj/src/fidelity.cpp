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

#include "osqec/fidelity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace osqec {

namespace {

// Eigenvalues within numerical noise of zero relative to the largest one are
// flattened before a square root; otherwise rank-deficient operators leak
// sqrt(eps)-sized spurious directions.
constexpr double kSpectralFloor = 1e-13;

RealVector floored_sqrt(const RealVector& vals) {
  const double cut = kSpectralFloor * std::max(vals.maxCoeff(), 0.0);
  RealVector out = vals;
  for (Index i = 0; i < out.size(); ++i)
    out(i) = out(i) > cut ? std::sqrt(out(i)) : 0.0;
  return out;
}

// Tr sqrt(sqrt(rho) sigma sqrt(rho)) without revalidation.
double fidelity_of_psd(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      ((rho + rho.adjoint()) / 2.0).eval());
  const RealVector vals = floored_sqrt(es.eigenvalues());
  const ComplexMatrix root =
      es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
  const ComplexMatrix inner = root * sigma * root;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es2(
      ((inner + inner.adjoint()) / 2.0).eval());
  return floored_sqrt(es2.eigenvalues()).sum();
}

void validate_density(const ComplexMatrix& m, double tol, bool check_trace,
                      const char* name) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(name) + ": matrix not square");
  const double scale = std::max(1.0, op_norm(m));
  if (op_norm(m - m.adjoint()) > tol * scale)
    throw NotHermitianError(std::string(name) + ": matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      ((m + m.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tol * scale)
    throw NotPsdError(std::string(name) +
                      ": matrix has a negative eigenvalue");
  if (check_trace && std::abs(m.trace().real() - 1.0) > 1e-8)
    throw NotNormalizedError(std::string(name) +
                             ": density operator trace differs from one");
}

}  // namespace

double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                        double tol) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw DimensionError("uhlmann_fidelity: operand shapes differ");
  validate_density(rho, tol, true, "uhlmann_fidelity");
  validate_density(sigma, tol, true, "uhlmann_fidelity");
  return fidelity_of_psd(rho, sigma);
}

double uhlmann_fidelity_raw(const ComplexMatrix& rho,
                            const ComplexMatrix& sigma, double tol) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw DimensionError("uhlmann_fidelity_raw: operand shapes differ");
  validate_density(rho, tol, false, "uhlmann_fidelity_raw");
  validate_density(sigma, tol, false, "uhlmann_fidelity_raw");
  return fidelity_of_psd(rho, sigma);
}

double eta_of_state(const KrausChannel& ch, const RecoveryMap& rec,
                    const ComplexVector& psi) {
  const ComplexMatrix rho = psi * psi.adjoint();
  const ComplexMatrix out =
      apply_recovery(rec, apply(ch, rho), ch.d_b, true);
  const double f =
      uhlmann_fidelity_raw(partial_trace_bath(rho, ch.d_s, ch.d_b),
                           partial_trace_bath(out, ch.d_s, ch.d_b));
  return 1.0 - f * f;
}

namespace {

// Evaluation context for the worst-case search: channel composed with the
// lifted full recovery, applied to pure states via vector images only.
struct EtaEvaluator {
  Index d_s = 0;
  Index d_b = 0;
  ComplexMatrix embed;                 // code ⊗ bath isometry
  std::vector<ComplexMatrix> composed; // (R_j ⊗ 1_B) E_a

  ComplexMatrix bath_marginal(const ComplexVector& v) const {
    ComplexMatrix m = ComplexMatrix::Zero(d_s, d_s);
    ComplexMatrix resh(d_s, d_b);
    for (Index s = 0; s < d_s; ++s)
      for (Index k = 0; k < d_b; ++k) resh(s, k) = v(s * d_b + k);
    return resh * resh.adjoint();
  }

  // Fidelity loss for normalized code coordinates.
  double eta(const ComplexVector& coords) const {
    const ComplexVector psi = embed * coords;
    const ComplexMatrix rho_in = bath_marginal(psi);
    ComplexMatrix rho_out = ComplexMatrix::Zero(d_s, d_s);
    for (const ComplexMatrix& k : composed) {
      const ComplexVector image = k * psi;
      rho_out += bath_marginal(image);
    }
    const double f = fidelity_of_psd(rho_in, rho_out);
    return 1.0 - f * f;
  }
};

}  // namespace

WorstCaseResult worst_case_eta(const KrausChannel& ch, const RecoveryMap& rec,
                               const CodeSpace& code, Index d_b,
                               long n_samples, long n_refine,
                               std::uint64_t seed) {
  if (d_b != ch.d_b)
    throw DimensionError("worst_case_eta: bath dimensions differ");
  EtaEvaluator ev;
  ev.d_s = ch.d_s;
  ev.d_b = d_b;
  ev.embed =
      tensor(code.basis, ComplexMatrix(ComplexMatrix::Identity(d_b, d_b)));
  const KrausChannel recovery = recovery_channel(rec, true);
  const ComplexMatrix eye_b = ComplexMatrix::Identity(d_b, d_b);
  for (const ComplexMatrix& r : recovery.kraus) {
    const ComplexMatrix lifted = tensor(r, eye_b);
    for (const ComplexMatrix& e : ch.kraus) ev.composed.push_back(lifted * e);
  }

  const Index n = code.dim() * d_b;
  Engine engine(seed);
  WorstCaseResult out;
  ComplexVector best = ComplexVector::Zero(n);
  for (long i = 0; i < n_samples; ++i) {
    ComplexVector c = gaussian_vector(engine, n);
    c /= c.norm();
    const double value = ev.eta(c);
    if (value > out.eta_max) {
      out.eta_max = value;
      best = c;
    }
  }
  out.samples_used = n_samples;

  // Finite-difference ascent on the real coordinates of the best sample,
  // re-normalizing after every step.  Step size shrinks on failure and the
  // search stops once a full round improves by less than 1e-10.
  const auto value_at = [&](const RealVector& x) {
    ComplexVector c(n);
    for (Index i = 0; i < n; ++i) c(i) = Complex(x(2 * i), x(2 * i + 1));
    const double nrm = c.norm();
    if (nrm == 0.0) return 0.0;
    return ev.eta(ComplexVector(c / nrm));
  };
  RealVector x(2 * n);
  for (Index i = 0; i < n; ++i) {
    x(2 * i) = best(i).real();
    x(2 * i + 1) = best(i).imag();
  }
  const double fd_step = 1e-4;
  double step = 0.1;
  double current = out.eta_max;
  for (long iter = 0; iter < n_refine; ++iter) {
    RealVector grad(2 * n);
    for (Index i = 0; i < 2 * n; ++i) {
      RealVector lo = x, hi = x;
      hi(i) += fd_step;
      lo(i) -= fd_step;
      grad(i) = (value_at(hi) - value_at(lo)) / (2.0 * fd_step);
    }
    const double gnorm = grad.norm();
    ++out.refine_iterations;
    if (gnorm == 0.0) {
      out.converged = true;
      break;
    }
    double improved = 0.0;
    while (step > 1e-12) {
      const RealVector cand = x + (step / gnorm) * grad;
      const double value = value_at(cand);
      if (value > current) {
        improved = value - current;
        current = value;
        x = cand;
        step = std::min(step * 1.5, 0.5);
        break;
      }
      step /= 2.0;
    }
    if (improved < 1e-10) {
      out.converged = true;
      break;
    }
  }
  out.eta_max = current;
  ComplexVector c(n);
  for (Index i = 0; i < n; ++i) c(i) = Complex(x(2 * i), x(2 * i + 1));
  c /= c.norm();
  out.argmax_state = ev.embed * c;
  return out;
}

}  // namespace osqec
