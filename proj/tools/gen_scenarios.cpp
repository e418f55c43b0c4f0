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
//
// Regenerates the committed scenario files.  Every scenario is seeded, so
// repeated runs produce byte-identical output; a test compares the committed
// files against a fresh regeneration to keep them in sync.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>

#include "osqec/io.hpp"
#include "osqec/scenarios.hpp"

using namespace osqec;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "scenarios";
  std::filesystem::create_directories(dir);
  const auto path = [&](const std::string& name) { return dir + "/" + name; };

  // Smoke-test pair: the identity channel on a two-dimensional code.
  io::save_channel(scenarios::identity_channel(4), path("identity_d4.channel.json"));
  io::save_code(scenarios::span_code(4, {0, 1}), path("identity_d4.code.json"));

  // Three-qubit repetition code under bit-flip noise, with the bath wired in
  // through a seeded unitary block mixer.
  const CodeSpace rep = scenarios::repetition_code();
  io::save_code(rep, path("repetition.code.json"));
  io::save_channel(
      scenarios::decorate_bath(scenarios::bit_flip_noise(0.05), 1, 10),
      path("rep_p05_db1.channel.json"));
  const KrausChannel rep_db2 =
      scenarios::decorate_bath(scenarios::bit_flip_noise(0.05), 2, 11);
  io::save_channel(rep_db2, path("rep_p05_db2.channel.json"));
  io::save_channel(
      scenarios::decorate_bath(scenarios::bit_flip_noise(0.10), 3, 12),
      path("rep_p10_db3.channel.json"));

  // Weak global rotations of the d_b = 2 instance: exactly trace preserving,
  // correctable only approximately, with perturbation size set by t.
  for (double t : {0.025, 0.05, 0.1}) {
    std::string tag = t == 0.025 ? "t0025" : t == 0.05 ? "t005" : "t010";
    io::save_channel(scenarios::rotate(rep_db2, t, 21),
                     path("perturbed_" + tag + "_db2.channel.json"));
  }

  // System-bath swap on a pair of qubits: the weaker joint condition holds
  // on the full one-qubit code while the stronger one fails.
  io::save_channel(scenarios::swap_witness(), path("oqec_witness.channel.json"));
  io::save_code(scenarios::full_code(2), path("qubit_full.code.json"));

  // Uniform damping of the d_b = 1 instance to trace factor 1/2.
  io::save_channel(
      scenarios::scale(
          scenarios::decorate_bath(scenarios::bit_flip_noise(0.05), 1, 10),
          std::sqrt(0.5)),
      path("subtp_gamma05.channel.json"));

  // Split files for the t = 0.05 perturbed channel.  The good split keeps
  // the unperturbed Kraus operators (restricted to the code) as the
  // correctable part; the bad split swaps in a two-qubit flip that leaves
  // the correctable span entirely.
  const ComplexMatrix pf = full_projector(rep, 2);
  std::vector<ComplexMatrix> good;
  good.reserve(rep_db2.kraus.size());
  for (const ComplexMatrix& e : rep_db2.kraus) good.push_back(e * pf);
  io::save_split(good, path("good_split.split.json"));

  ComplexMatrix x1x2 = ComplexMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) x1x2(i ^ 6, i) = 1.0;
  std::vector<ComplexMatrix> bad = good;
  bad[0] = 0.3 * tensor(x1x2, ComplexMatrix::Identity(2, 2)) * pf;
  io::save_split(bad, path("bad_split.split.json"));

  std::cout << "wrote scenarios to " << dir << "\n";
  return 0;
}
