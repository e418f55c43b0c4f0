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
// End-to-end checks of the command-line binary: exit-code contract, report
// determinism, and committed-scenario freshness.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = OSQEC_CLI_PATH;
const std::string kGen = OSQEC_GEN_PATH;
const std::string kScenarios = OSQEC_SCENARIO_DIR;

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string scenario(const std::string& name) {
  return kScenarios + "/" + name;
}

std::string channel_code(const std::string& ch, const std::string& code) {
  return "--channel " + scenario(ch) + " --code " + scenario(code);
}

}  // namespace

TEST_CASE("exit codes follow the verdict contract") {
  CHECK(run("check-perfect " +
            channel_code("identity_d4.channel.json",
                         "identity_d4.code.json")) == 0);
  CHECK(run("check-perfect " +
            channel_code("rep_p05_db2.channel.json",
                         "repetition.code.json")) == 0);
  CHECK(run("check-perfect " +
            channel_code("oqec_witness.channel.json",
                         "qubit_full.code.json")) == 2);
  CHECK(run("check-perfect " +
            channel_code("perturbed_t005_db2.channel.json",
                         "repetition.code.json")) == 2);
}

TEST_CASE("usage and input errors exit with one") {
  CHECK(run("") == 1);
  CHECK(run("no-such-command") == 1);
  CHECK(run("check-perfect --channel missing.json --code missing.json") == 1);
  CHECK(run("check-perfect " +
            channel_code("rep_p05_db2.channel.json",
                         "repetition.code.json") +
            " --no-such-flag") == 1);
  CHECK(run("bound " + channel_code("rep_p05_db2.channel.json",
                                    "repetition.code.json") +
            " --samples 5 --refine 5") == 1);  // needs a split source
  CHECK(run("--help") == 0);

  const std::string broken = "/tmp/osqec_broken.json";
  std::ofstream(broken) << "{\"d_s\": 2, \"kraus\": [not json";
  CHECK(run("check-perfect --channel " + broken + " --code " +
            scenario("repetition.code.json")) == 1);
}

TEST_CASE("split handling distinguishes good and bad user splits") {
  const std::string common =
      "bound " + channel_code("perturbed_t005_db2.channel.json",
                              "repetition.code.json") +
      " --reference " + scenario("rep_p05_db2.channel.json") +
      " --samples 10 --refine 5 ";
  CHECK(run(common + "--split " + scenario("good_split.split.json")) == 0);
  CHECK(run(common + "--split " + scenario("bad_split.split.json")) == 2);
  CHECK(run("bound " + channel_code("perturbed_t005_db2.channel.json",
                                    "repetition.code.json") +
            " --auto-split --samples 10 --refine 5") == 0);
}

TEST_CASE("reports are byte-identical across repeated runs") {
  const std::string a = "/tmp/osqec_rep_a.json";
  const std::string b = "/tmp/osqec_rep_b.json";
  const std::string cmd =
      "report " + channel_code("rep_p05_db2.channel.json",
                               "repetition.code.json") +
      " --t-sweep 0.025,0.05 --samples 10 --refine 10 --seed 77 --out ";
  REQUIRE(run(cmd + a) == 0);
  REQUIRE(run(cmd + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("\"command\": \"report\"") != std::string::npos);
  CHECK(slurp(a).find("\"expansion\"") != std::string::npos);
}

TEST_CASE("single-scale sweeps omit the slope but keep residuals") {
  const std::string out = "/tmp/osqec_single_t.json";
  REQUIRE(run("verify-expansion " +
              channel_code("rep_p05_db2.channel.json",
                           "repetition.code.json") +
              " --t-sweep 0.05 --samples 5 --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"slope_points\": 0") != std::string::npos);
  CHECK(text.find("\"slope\":") == std::string::npos);
  CHECK(text.find("\"recovered_identity\"") != std::string::npos);
}

TEST_CASE("expansion sweeps demand a correctable base") {
  CHECK(run("verify-expansion " +
            channel_code("perturbed_t005_db2.channel.json",
                         "repetition.code.json") +
            " --t-sweep 0.05 --samples 5") == 2);
}

TEST_CASE("worst-case honors the tolerance override from the environment") {
  // A loose tolerance flips the perturbed channel's verdict, so the basis
  // comes from the channel itself instead of the dominant directions.
  const std::string out = "/tmp/osqec_tol.json";
  REQUIRE(run("check-perfect " +
              channel_code("perturbed_t005_db2.channel.json",
                           "repetition.code.json") +
              " --tol 1.0 --out " + out) == 0);
  CHECK(slurp(out).find("\"correctable\": true") != std::string::npos);

  const std::string env_cmd =
      "OSQEC_TOL=1.0 " + kCli + " check-perfect " +
      channel_code("perturbed_t005_db2.channel.json",
                   "repetition.code.json") +
      " >/dev/null 2>/dev/null";
  const int rc = std::system(env_cmd.c_str());
  REQUIRE(rc != -1);
  CHECK(WEXITSTATUS(rc) == 0);
}

TEST_CASE("committed scenarios match a fresh regeneration") {
  namespace fs = std::filesystem;
  const std::string tmp = "/tmp/osqec_scenarios_regen";
  fs::remove_all(tmp);
  const std::string cmd = kGen + " " + tmp + " >/dev/null 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WEXITSTATUS(rc) == 0);

  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(tmp)) {
    const std::string name = entry.path().filename().string();
    INFO("scenario file: " << name);
    REQUIRE(fs::exists(scenario(name)));
    CHECK(slurp(entry.path().string()) == slurp(scenario(name)));
    ++count;
  }
  CHECK(count >= 14);
  std::size_t committed = 0;
  for (const auto& entry : fs::directory_iterator(kScenarios)) {
    (void)entry;
    ++committed;
  }
  CHECK(committed == count);
}
