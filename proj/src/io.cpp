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

#include "osqec/io.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace osqec::io {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Complex read_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    throw ParseError(where + ": expected a [re, im] pair");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ParseError(where + ": entry is not finite");
  return z;
}

ComplexVector read_vector(const json& j, Index size,
                          const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != size)
    throw ParseError(where + ": expected an array of " +
                     std::to_string(size) + " complex entries");
  ComplexVector v(size);
  for (Index i = 0; i < size; ++i)
    v(i) = read_complex(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

ComplexMatrix read_matrix(const json& j, Index rows, Index cols,
                          const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    m.row(i) = read_vector(j[i], cols, where + "[" + std::to_string(i) + "]")
                   .transpose();
  return m;
}

Index read_dim(const json& j, const std::string& key,
               const std::string& path) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(path + ": missing integer field \"" + key + "\"");
  const Index v = j[key].get<Index>();
  if (v <= 0) throw ParseError(path + ": \"" + key + "\" must be positive");
  return v;
}

void write_complex(std::ostream& os, const Complex& z) {
  os << '[' << format_real(z.real()) << ", " << format_real(z.imag()) << ']';
}

void write_matrix(std::ostream& os, const ComplexMatrix& m,
                  const std::string& indent) {
  os << "[\n";
  for (Index i = 0; i < m.rows(); ++i) {
    os << indent << "  [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      write_complex(os, m(i, j));
    }
    os << ']' << (i + 1 < m.rows() ? ",\n" : "\n");
  }
  os << indent << ']';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  return out;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

KrausChannel load_channel(const std::string& path) {
  const json j = parse_file(path);
  KrausChannel ch;
  ch.d_s = read_dim(j, "d_s", path);
  ch.d_b = j.contains("d_b") ? read_dim(j, "d_b", path) : 1;
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
    throw ParseError(path + ": missing nonempty \"kraus\" array");
  const Index dim = ch.dim();
  for (std::size_t a = 0; a < j["kraus"].size(); ++a)
    ch.kraus.push_back(read_matrix(j["kraus"][a], dim, dim,
                                   path + ":kraus[" + std::to_string(a) +
                                       "]"));

  // Complete positivity guard for externally supplied data: the Choi matrix
  // must not have a significantly negative eigenvalue.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(choi(ch),
                                                  Eigen::EigenvaluesOnly);
  const double max_eig = es.eigenvalues().cwiseAbs().maxCoeff();
  if (es.eigenvalues()(0) < -1e-9 * std::max(1.0, max_eig))
    throw ParseError(path + ": channel is not completely positive");
  return ch;
}

CodeSpace load_code(const std::string& path) {
  const json j = parse_file(path);
  const Index d_s = read_dim(j, "d_s", path);
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
    throw ParseError(path + ": missing nonempty \"basis\" array");
  ComplexMatrix basis(d_s, static_cast<Index>(j["basis"].size()));
  for (Index c = 0; c < basis.cols(); ++c)
    basis.col(c) = read_vector(j["basis"][c], d_s,
                               path + ":basis[" + std::to_string(c) + "]");
  try {
    return make_code(d_s, std::move(basis));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<ComplexMatrix> load_split(const std::string& path,
                                      const KrausChannel& ch) {
  const json j = parse_file(path);
  if (!j.contains("e_tilde_p") || !j["e_tilde_p"].is_array())
    throw ParseError(path + ": missing \"e_tilde_p\" array");
  if (static_cast<Index>(j["e_tilde_p"].size()) != ch.n_kraus())
    throw ParseError(path +
                     ": \"e_tilde_p\" must have one matrix per Kraus "
                     "operator of the channel");
  std::vector<ComplexMatrix> out;
  for (std::size_t a = 0; a < j["e_tilde_p"].size(); ++a)
    out.push_back(read_matrix(j["e_tilde_p"][a], ch.dim(), ch.dim(),
                              path + ":e_tilde_p[" + std::to_string(a) +
                                  "]"));
  return out;
}

void save_channel(const KrausChannel& ch, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "{\n  \"d_s\": " << ch.d_s << ",\n  \"d_b\": " << ch.d_b
      << ",\n  \"kraus\": [\n";
  for (Index a = 0; a < ch.n_kraus(); ++a) {
    out << "    ";
    write_matrix(out, ch.kraus[a], "    ");
    out << (a + 1 < ch.n_kraus() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
}

void save_code(const CodeSpace& code, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "{\n  \"d_s\": " << code.d_s << ",\n  \"basis\": [\n";
  for (Index c = 0; c < code.dim(); ++c) {
    out << "    [";
    for (Index i = 0; i < code.d_s; ++i) {
      if (i) out << ", ";
      write_complex(out, code.basis(i, c));
    }
    out << ']' << (c + 1 < code.dim() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
}

void save_split(const std::vector<ComplexMatrix>& e_tilde_p,
                const std::string& path) {
  std::ofstream out = open_out(path);
  out << "{\n  \"e_tilde_p\": [\n";
  for (std::size_t a = 0; a < e_tilde_p.size(); ++a) {
    out << "    ";
    write_matrix(out, e_tilde_p[a], "    ");
    out << (a + 1 < e_tilde_p.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
}

}  // namespace osqec::io
