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

#include <string>
#include <vector>

#include "osqec/channels.hpp"
#include "osqec/codes.hpp"

namespace osqec::io {

// File formats (JSON).  Complex numbers are two-element arrays [re, im];
// matrices are row-major nested arrays of complex numbers; vectors are flat
// arrays of complex numbers.
//
//   channel: { "d_s": int, "d_b": int, "kraus": [matrix, ...] }
//   code:    { "d_s": int, "basis": [vector, ...] }
//   split:   { "e_tilde_p": [matrix, ...] }
//
// Loaders throw ParseError with a field path on malformed input and validate
// basic physicality (finite entries, orthonormal code basis, positive Choi
// matrix for channels).

KrausChannel load_channel(const std::string& path);
CodeSpace load_code(const std::string& path);
std::vector<ComplexMatrix> load_split(const std::string& path,
                                      const KrausChannel& ch);

void save_channel(const KrausChannel& ch, const std::string& path);
void save_code(const CodeSpace& code, const std::string& path);
void save_split(const std::vector<ComplexMatrix>& e_tilde_p,
                const std::string& path);

// All numeric output is printed with 17 significant digits so identical runs
// produce byte-identical files.
std::string format_real(double x);

}  // namespace osqec::io
