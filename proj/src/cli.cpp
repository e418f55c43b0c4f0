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

#include "osqec/cli.hpp"

#include <CLI11.hpp>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "osqec/approx.hpp"
#include "osqec/fidelity.hpp"
#include "osqec/io.hpp"
#include "osqec/scenarios.hpp"

namespace osqec::cli {

namespace {

// Resolution of the sampled worst-case loss; dominance below it is noise.
constexpr double kEtaNoiseFloor = 1e-12;

// A negative analysis verdict that should terminate the command with exit
// code 2 rather than an input error.
struct VerdictFailure {
  std::string message;
};

// ---------------------------------------------------------------------------
// Report writer: ordered JSON with all reals at 17 significant digits, so a
// rerun with identical inputs and seed reproduces the bytes exactly.

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

class JsonWriter {
 public:
  JsonWriter() {
    out_ << '{';
    push(false);
  }

  void field(const std::string& key, const std::string& v) {
    pre(&key);
    out_ << '"' << escape(v) << '"';
  }
  void field(const std::string& key, const char* v) {
    field(key, std::string(v));
  }
  void field(const std::string& key, double v) {
    pre(&key);
    out_ << io::format_real(v);
  }
  void field(const std::string& key, bool v) {
    pre(&key);
    out_ << (v ? "true" : "false");
  }
  void field_int(const std::string& key, long long v) {
    pre(&key);
    out_ << v;
  }
  void begin_object(const std::string& key) {
    pre(&key);
    out_ << '{';
    push(false);
  }
  void begin_array(const std::string& key) {
    pre(&key);
    out_ << '[';
    push(true);
  }
  void begin_object() {
    pre(nullptr);
    out_ << '{';
    push(false);
  }
  void end_object() { pop('}'); }
  void end_array() { pop(']'); }
  void elem(double v) {
    pre(nullptr);
    out_ << io::format_real(v);
  }
  void elem_int(long long v) {
    pre(nullptr);
    out_ << v;
  }
  void elem(const Complex& z) {
    pre(nullptr);
    out_ << '[' << io::format_real(z.real()) << ", "
         << io::format_real(z.imag()) << ']';
  }

  std::string finish() {
    while (!counts_.empty()) pop(arrays_.back() ? ']' : '}');
    out_ << '\n';
    return out_.str();
  }

 private:
  void push(bool is_array) {
    arrays_.push_back(is_array);
    counts_.push_back(0);
  }
  void pop(char close) {
    const bool empty = counts_.back() == 0;
    arrays_.pop_back();
    counts_.pop_back();
    if (!empty) out_ << '\n' << std::string(2 * counts_.size(), ' ');
    out_ << close;
  }
  void pre(const std::string* key) {
    if (counts_.back()++ > 0) out_ << ',';
    out_ << '\n' << std::string(2 * counts_.size(), ' ');
    if (key != nullptr) out_ << '"' << escape(*key) << "\": ";
  }

  std::ostringstream out_;
  std::vector<bool> arrays_;
  std::vector<std::size_t> counts_;
};

// ---------------------------------------------------------------------------
// Shared analysis steps.

struct Inputs {
  KrausChannel channel;
  CodeSpace code;
};

Inputs load_inputs(const ScenarioSpec& spec) {
  Inputs in;
  in.channel = io::load_channel(spec.channel_path);
  in.code = io::load_code(spec.code_path);
  if (in.channel.d_s != in.code.d_s)
    throw ParseError("channel and code system dimensions differ");
  return in;
}

struct PerfectAnalysis {
  TPClass tp;
  LambdaVerdict verdict;
  bool has_recovery = false;
  CorrectableBasis basis;
  RecoveryMap rec;
  double recovery_tp_residual = 0.0;
  double roundtrip_max = 0.0;
  int roundtrip_states = 0;
};

PerfectAnalysis analyze_perfect(const Inputs& in, double tol,
                                std::uint64_t seed) {
  PerfectAnalysis a;
  a.tp = classify_tp(in.channel, full_projector(in.code, in.channel.d_b), tol);
  a.verdict = extract_lambda(in.channel, in.code, tol);
  if (!a.verdict.correctable) return a;

  a.basis = diagonalize(a.verdict, in.channel, in.code);
  a.rec = universal_recovery(a.basis, in.code);
  ComplexMatrix sum =
      ComplexMatrix::Zero(in.channel.d_s, in.channel.d_s);
  for (const ComplexMatrix& r : recovery_channel(a.rec, true).kraus)
    sum += r.adjoint() * r;
  a.recovery_tp_residual = op_norm(
      sum - ComplexMatrix::Identity(in.channel.d_s, in.channel.d_s));
  const double gamma2 = a.tp.kind == TPKind::SubTP ? a.tp.gamma2 : 1.0;
  a.roundtrip_states = 100;
  a.roundtrip_max = subtp_verify(in.channel, in.code, a.rec, gamma2,
                                 a.roundtrip_states, seed);
  a.has_recovery = true;
  return a;
}

void write_perfect(JsonWriter& w, const PerfectAnalysis& a,
                   std::uint64_t seed) {
  w.begin_object("tp");
  w.field("kind", a.tp.kind == TPKind::TP      ? "TP"
                  : a.tp.kind == TPKind::SubTP ? "SubTP"
                                               : "Neither");
  w.field("gamma2", a.tp.gamma2);
  w.field("residual", a.tp.residual);
  w.end_object();
  w.field("correctable", a.verdict.correctable);
  w.field("residual", a.verdict.residual);
  w.field("scale", a.verdict.scale);
  w.begin_array("worst_pair");
  for (Index i : a.verdict.worst_pair) w.elem_int(i);
  w.end_array();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.verdict.lambda,
                                                  Eigen::EigenvaluesOnly);
  w.begin_array("lambda_eigenvalues");
  for (Index j = es.eigenvalues().size() - 1; j >= 0; --j)
    w.elem(es.eigenvalues()(j));
  w.end_array();
  if (a.has_recovery) {
    w.field_int("retained", static_cast<long long>(a.basis.f_ops.size()));
    w.begin_object("recovery");
    w.field_int("primary", static_cast<long long>(a.rec.system_kraus.size()));
    w.field_int("completion",
                static_cast<long long>(a.rec.completion_kraus.size()));
    w.field("tp_residual", a.recovery_tp_residual);
    w.end_object();
    w.begin_object("roundtrip");
    w.field_int("states", a.roundtrip_states);
    w.field_int("seed", static_cast<long long>(seed));
    w.field("max_residual", a.roundtrip_max);
    w.end_object();
  }
}

struct BasisChoice {
  CorrectableBasis basis;
  std::string source;
};

BasisChoice choose_basis(const Inputs& in, const LambdaVerdict& verdict,
                         const ScenarioSpec& spec) {
  BasisChoice out;
  if (!spec.reference_path.empty()) {
    const KrausChannel ref = io::load_channel(spec.reference_path);
    if (ref.d_s != in.channel.d_s || ref.d_b != in.channel.d_b)
      throw ParseError("reference channel dimensions differ from channel");
    const LambdaVerdict r = extract_lambda(ref, in.code, spec.tol);
    if (!r.correctable)
      throw VerdictFailure{"reference channel is not correctable (residual " +
                           io::format_real(r.residual) + ")"};
    out.basis = diagonalize(r, ref, in.code);
    out.source = "reference";
  } else if (verdict.correctable) {
    out.basis = diagonalize(verdict, in.channel, in.code);
    out.source = "channel";
  } else {
    out.basis = dominant_basis(in.channel, in.code);
    out.source = "dominant";
  }
  return out;
}

NoiseSplit make_split(const Inputs& in, const CorrectableBasis& basis,
                      const ScenarioSpec& spec) {
  if (spec.auto_split) return split_noise(in.channel, basis, in.code);
  return split_noise(in.channel, basis, in.code,
                     io::load_split(spec.split_path, in.channel), spec.tol);
}

void emit(const ScenarioSpec& spec, const std::string& text,
          std::ostream& out) {
  out << text;
  if (!spec.out_path.empty()) {
    std::ofstream f(spec.out_path);
    if (!f) throw ParseError("cannot write report: " + spec.out_path);
    f << text;
  }
}

void write_header(JsonWriter& w, const char* command,
                  const ScenarioSpec& spec) {
  w.field("command", command);
  w.field("channel", spec.channel_path);
  w.field("code", spec.code_path);
  w.field("tolerance", spec.tol);
}

// ---------------------------------------------------------------------------
// Expansion sweep shared by verify-expansion and report.

struct SweepRow {
  double t = 0.0;
  double epsilon = 0.0;
  double theta_norm_sq = 0.0;
  double delta_norm = 0.0;
  double recovered_identity = 0.0;
  double sandwich_first = 0.0;
  double sandwich_second = 0.0;
  double schmidt_first = 0.0;
  double schmidt_second = 0.0;
  double tr_delta1_max_abs = 0.0;
  long trace_violations = 0;
  double gap_mean = 0.0;
  double gap_median = 0.0;
  double gap_max = 0.0;
};

std::vector<SweepRow> run_sweep(const Inputs& in,
                                const CorrectableBasis& basis,
                                const RecoveryMap& rec,
                                const ScenarioSpec& spec) {
  std::vector<SweepRow> rows;
  for (std::size_t idx = 0; idx < spec.t_sweep.size(); ++idx) {
    const double t = spec.t_sweep[idx];
    const KrausChannel pch =
        t == 0.0 ? in.channel : scenarios::rotate(in.channel, t, spec.seed);
    const NoiseSplit split = split_noise(pch, basis, in.code);
    const BoundReport bound = compute_bound(split);

    SweepRow row;
    row.t = t;
    row.epsilon = bound.epsilon;
    row.theta_norm_sq = bound.theta_norm_sq;
    row.delta_norm = bound.delta_norm;
    // Identical state sequence for every t, so the gap decay is measured on
    // a common set of states.
    Engine engine(spec.seed);
    double gap_sum = 0.0;
    std::vector<double> gaps;
    gaps.reserve(spec.samples);
    for (long s = 0; s < spec.samples; ++s) {
      const ComplexVector psi =
          sample_code_state(in.code, in.channel.d_b, engine);
      const ExpansionResiduals res = expansion_residuals(split, rec, psi);
      row.recovered_identity =
          std::max(row.recovered_identity, res.recovered_identity);
      row.sandwich_first = std::max(row.sandwich_first, res.sandwich_first);
      row.sandwich_second = std::max(row.sandwich_second, res.sandwich_second);
      row.schmidt_first = std::max(row.schmidt_first, res.schmidt_first);
      row.schmidt_second = std::max(row.schmidt_second, res.schmidt_second);
      row.tr_delta1_max_abs =
          std::max(row.tr_delta1_max_abs, std::abs(res.traces.tr_delta1));
      row.trace_violations +=
          static_cast<long>(res.traces.violations.size());
      gap_sum += res.expansion_gap;
      gaps.push_back(res.expansion_gap);
      row.gap_max = std::max(row.gap_max, res.expansion_gap);
    }
    row.gap_mean = spec.samples > 0 ? gap_sum / spec.samples : 0.0;
    if (!gaps.empty()) {
      std::sort(gaps.begin(), gaps.end());
      const std::size_t n = gaps.size();
      row.gap_median = n % 2 == 1 ? gaps[n / 2]
                                  : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
    }
    rows.push_back(row);
  }
  return rows;
}

struct SlopeFit {
  double slope = 0.0;
  long points = 0;
};

std::optional<SlopeFit> sweep_slope(const std::vector<SweepRow>& rows) {
  // Fit on the median gap: the per-state third-order coefficient is heavy
  // tailed, so the mean can pick up the next order at the largest t.
  std::vector<double> xs, ys;
  for (const SweepRow& r : rows)
    if (r.t > 0.0 && r.gap_median > 0.0) {
      xs.push_back(std::log(r.t));
      ys.push_back(std::log(r.gap_median));
    }
  if (xs.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  if (den == 0.0) return std::nullopt;
  return SlopeFit{num / den, static_cast<long>(xs.size())};
}

void write_sweep(JsonWriter& w, const std::vector<SweepRow>& rows,
                 const ScenarioSpec& spec) {
  w.begin_array("t_sweep");
  for (double t : spec.t_sweep) w.elem(t);
  w.end_array();
  w.field_int("samples", spec.samples);
  w.field_int("seed", static_cast<long long>(spec.seed));
  w.begin_array("rows");
  for (const SweepRow& r : rows) {
    w.begin_object();
    w.field("t", r.t);
    w.field("epsilon", r.epsilon);
    w.field("theta_norm_sq", r.theta_norm_sq);
    w.field("delta_norm", r.delta_norm);
    w.field("recovered_identity", r.recovered_identity);
    w.field("sandwich_first", r.sandwich_first);
    w.field("sandwich_second", r.sandwich_second);
    w.field("schmidt_first", r.schmidt_first);
    w.field("schmidt_second", r.schmidt_second);
    w.field("tr_delta1_max_abs", r.tr_delta1_max_abs);
    w.field_int("trace_violations", r.trace_violations);
    w.field("gap_mean", r.gap_mean);
    w.field("gap_median", r.gap_median);
    w.field("gap_max", r.gap_max);
    w.end_object();
  }
  w.end_array();
  const std::optional<SlopeFit> slope = sweep_slope(rows);
  w.field_int("slope_points", slope ? slope->points : 0);
  if (slope) w.field("slope", slope->slope);
  std::ostringstream csv;
  csv << "t,epsilon,theta_norm_sq,delta_norm,recovered_identity,"
         "sandwich_first,sandwich_second,schmidt_first,schmidt_second,"
         "gap_mean,gap_median,gap_max\n";
  for (const SweepRow& r : rows)
    csv << io::format_real(r.t) << ',' << io::format_real(r.epsilon) << ','
        << io::format_real(r.theta_norm_sq) << ','
        << io::format_real(r.delta_norm) << ','
        << io::format_real(r.recovered_identity) << ','
        << io::format_real(r.sandwich_first) << ','
        << io::format_real(r.sandwich_second) << ','
        << io::format_real(r.schmidt_first) << ','
        << io::format_real(r.schmidt_second) << ','
        << io::format_real(r.gap_mean) << ','
        << io::format_real(r.gap_median) << ','
        << io::format_real(r.gap_max) << '\n';
  w.field("csv", csv.str());
}

// ---------------------------------------------------------------------------

void write_bound_body(JsonWriter& w, const Inputs& in,
                      const PerfectAnalysis& perfect,
                      const ScenarioSpec& spec) {
  const BasisChoice choice = choose_basis(in, perfect.verdict, spec);
  const NoiseSplit split = make_split(in, choice.basis, spec);
  const BoundReport bound = compute_bound(split);
  const RecoveryMap rec = universal_recovery(choice.basis, in.code);
  const WorstCaseResult wc =
      worst_case_eta(in.channel, rec, in.code, in.channel.d_b, spec.samples,
                     spec.refine, spec.seed);

  w.field("perfect_correctable", perfect.verdict.correctable);
  w.field("perfect_residual", perfect.verdict.residual);
  w.begin_object("basis");
  w.field("source", choice.source);
  w.field_int("size", static_cast<long long>(choice.basis.f_ops.size()));
  w.end_object();
  w.field("split_mode",
          split.mode == SplitMode::AutoProject ? "auto" : "user");
  w.field("theta_norm_sq", bound.theta_norm_sq);
  w.field("delta_norm", bound.delta_norm);
  w.field("epsilon", bound.epsilon);
  w.begin_object("eta");
  w.field_int("samples", wc.samples_used);
  w.field_int("refine_iterations", wc.refine_iterations);
  w.field("converged", wc.converged);
  w.field_int("seed", static_cast<long long>(spec.seed));
  w.field("max", wc.eta_max);
  w.end_object();
  // The sampled worst case bottoms out at the fidelity evaluation's noise
  // floor, so an essentially-zero budget is still counted as dominating.
  w.field("dominated", wc.eta_max <= bound.epsilon + kEtaNoiseFloor);
  w.field("margin", bound.epsilon - wc.eta_max);
}

}  // namespace

int cmd_check_perfect(const ScenarioSpec& spec, std::ostream& out) {
  const Inputs in = load_inputs(spec);
  const PerfectAnalysis a = analyze_perfect(in, spec.tol, spec.seed);
  JsonWriter w;
  write_header(w, "check-perfect", spec);
  write_perfect(w, a, spec.seed);
  emit(spec, w.finish(), out);
  return a.verdict.correctable ? 0 : 2;
}

int cmd_bound(const ScenarioSpec& spec, std::ostream& out) {
  const Inputs in = load_inputs(spec);
  const PerfectAnalysis a = analyze_perfect(in, spec.tol, spec.seed);
  JsonWriter w;
  write_header(w, "bound", spec);
  write_bound_body(w, in, a, spec);
  emit(spec, w.finish(), out);
  return 0;
}

int cmd_worst_case(const ScenarioSpec& spec, std::ostream& out) {
  const Inputs in = load_inputs(spec);
  const PerfectAnalysis a = analyze_perfect(in, spec.tol, spec.seed);
  const BasisChoice choice = choose_basis(in, a.verdict, spec);
  const RecoveryMap rec = universal_recovery(choice.basis, in.code);
  const WorstCaseResult wc =
      worst_case_eta(in.channel, rec, in.code, in.channel.d_b, spec.samples,
                     spec.refine, spec.seed);
  JsonWriter w;
  write_header(w, "worst-case", spec);
  w.begin_object("basis");
  w.field("source", choice.source);
  w.field_int("size", static_cast<long long>(choice.basis.f_ops.size()));
  w.end_object();
  w.field("eta_max", wc.eta_max);
  w.field_int("samples", wc.samples_used);
  w.field_int("refine_iterations", wc.refine_iterations);
  w.field("converged", wc.converged);
  w.field_int("seed", static_cast<long long>(spec.seed));
  w.begin_array("argmax_state");
  for (Index i = 0; i < wc.argmax_state.size(); ++i)
    w.elem(wc.argmax_state(i));
  w.end_array();
  emit(spec, w.finish(), out);
  return 0;
}

int cmd_verify_expansion(const ScenarioSpec& spec, std::ostream& out) {
  const Inputs in = load_inputs(spec);
  const LambdaVerdict verdict = extract_lambda(in.channel, in.code, spec.tol);
  if (!verdict.correctable)
    throw VerdictFailure{
        "expansion sweep needs a correctable base channel (residual " +
        io::format_real(verdict.residual) + ")"};
  const CorrectableBasis basis = diagonalize(verdict, in.channel, in.code);
  const RecoveryMap rec = universal_recovery(basis, in.code);
  const std::vector<SweepRow> rows = run_sweep(in, basis, rec, spec);
  JsonWriter w;
  write_header(w, "verify-expansion", spec);
  write_sweep(w, rows, spec);
  emit(spec, w.finish(), out);
  return 0;
}

int cmd_report(const ScenarioSpec& spec, std::ostream& out) {
  const Inputs in = load_inputs(spec);
  const PerfectAnalysis a = analyze_perfect(in, spec.tol, spec.seed);
  JsonWriter w;
  write_header(w, "report", spec);
  w.begin_object("check_perfect");
  write_perfect(w, a, spec.seed);
  w.end_object();
  w.begin_object("bound");
  write_bound_body(w, in, a, spec);
  w.end_object();
  if (a.verdict.correctable && !spec.t_sweep.empty()) {
    const RecoveryMap rec = universal_recovery(a.basis, in.code);
    const std::vector<SweepRow> rows = run_sweep(in, a.basis, rec, spec);
    w.begin_object("expansion");
    write_sweep(w, rows, spec);
    w.end_object();
  }
  emit(spec, w.finish(), out);
  return 0;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"verify open-system error-correction conditions, synthesize "
               "recoveries, and bound worst-case fidelity loss"};
  app.require_subcommand(1);
  ScenarioSpec spec;
  std::string t_sweep_str;

  const auto add_common = [&](CLI::App* cmd, bool needs_files = true) {
    auto* ch = cmd->add_option("--channel", spec.channel_path,
                               "channel file (JSON)");
    auto* co = cmd->add_option("--code", spec.code_path, "code file (JSON)");
    if (needs_files) {
      ch->required();
      co->required();
    }
    cmd->add_option("--tol", spec.tol, "verdict tolerance")
        ->envname("OSQEC_TOL");
    cmd->add_option("--out", spec.out_path, "also write the report here");
  };
  const auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--samples", spec.samples, "number of sampled states");
    cmd->add_option("--refine", spec.refine, "ascent iteration budget");
    cmd->add_option("--seed", spec.seed, "sampling seed");
  };
  const auto add_split = [&](CLI::App* cmd) {
    auto* a = cmd->add_flag("--auto-split", spec.auto_split,
                            "project onto the basis span automatically");
    auto* s = cmd->add_option("--split", spec.split_path,
                              "user-provided split file (JSON)");
    a->excludes(s);
    cmd->add_option("--reference", spec.reference_path,
                    "correctable reference channel for the basis");
  };

  CLI::App* check = app.add_subcommand(
      "check-perfect", "correctability verdict and universal recovery");
  add_common(check);
  check->add_option("--seed", spec.seed, "round-trip sampling seed");

  CLI::App* bound = app.add_subcommand(
      "bound", "fidelity-loss bound and sampled worst case");
  add_common(bound);
  add_sampling(bound);
  add_split(bound);

  CLI::App* worst = app.add_subcommand(
      "worst-case", "sampled and refined worst-case fidelity loss");
  add_common(worst);
  add_sampling(worst);
  worst->add_option("--reference", spec.reference_path,
                    "correctable reference channel for the basis");

  CLI::App* verify = app.add_subcommand(
      "verify-expansion", "recovered-state and fidelity expansion residuals "
                          "over a perturbation sweep");
  add_common(verify);
  add_sampling(verify);
  verify->add_flag("--auto-split", spec.auto_split,
                   "project onto the basis span automatically");
  verify->add_option("--t-sweep", t_sweep_str,
                     "comma-separated perturbation scales")
      ->required();

  CLI::App* report = app.add_subcommand(
      "report", "aggregate report over all applicable analyses");
  add_common(report);
  add_sampling(report);
  add_split(report);
  report->add_option("--t-sweep", t_sweep_str,
                     "comma-separated perturbation scales");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (!t_sweep_str.empty()) {
    std::stringstream ss(t_sweep_str);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        spec.t_sweep.push_back(std::stod(item));
      } catch (const std::exception&) {
        std::cerr << "osqec: bad --t-sweep entry: " << item << '\n';
        return 1;
      }
      if (spec.t_sweep.back() < 0.0) {
        std::cerr << "osqec: --t-sweep entries must be nonnegative\n";
        return 1;
      }
    }
  }
  if (bound->parsed() && !spec.auto_split && spec.split_path.empty()) {
    std::cerr << "osqec: bound needs --auto-split or --split\n";
    return 1;
  }
  if (verify->parsed()) {
    spec.auto_split = true;
    if (verify->count("--samples") == 0) spec.samples = 50;
  }
  if (report->parsed() && spec.split_path.empty()) spec.auto_split = true;

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  const char* name = "";
  try {
    if (check->parsed()) {
      name = "check-perfect";
      code = cmd_check_perfect(spec, std::cout);
    } else if (bound->parsed()) {
      name = "bound";
      code = cmd_bound(spec, std::cout);
    } else if (worst->parsed()) {
      name = "worst-case";
      code = cmd_worst_case(spec, std::cout);
    } else if (verify->parsed()) {
      name = "verify-expansion";
      code = cmd_verify_expansion(spec, std::cout);
    } else if (report->parsed()) {
      name = "report";
      code = cmd_report(spec, std::cout);
    }
  } catch (const VerdictFailure& v) {
    std::cerr << "osqec: " << v.message << '\n';
    return 2;
  } catch (const SpanViolationError& e) {
    std::cerr << "osqec: " << e.what()
              << " (residual " << io::format_real(e.residual) << ")\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "osqec: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "osqec: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "osqec: internal error: " << e.what() << '\n';
    return 1;
  }
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - start);
  // Timing goes to stderr so reports stay byte-stable.
  std::cerr << "osqec: " << name << " finished in "
            << static_cast<long>(elapsed.count() * 1000.0) << " ms\n";
  return code;
}

}  // namespace osqec::cli
