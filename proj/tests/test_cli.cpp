// Copyright 2026 The twoq Authors
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

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args) {
  const std::string cmd = std::string(TWOQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string &args) {
  const Run r = run(args + " --output json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

void write(const std::string &path, const std::string &text) {
  std::ofstream(path) << text;
}

std::string read(const std::string &path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("invariants command", "[cli]") {
  auto j = run_json("invariants --gate cnot");
  CHECK(j["g1"]["re"].get<double>() == Catch::Approx(0).margin(1e-12));
  CHECK(j["g2"]["re"].get<double>() == Catch::Approx(1).margin(1e-12));
  j = run_json("invariants --gate swap");
  CHECK(j["g1"]["re"].get<double>() == Catch::Approx(-1).margin(1e-12));
  CHECK(j["g2"]["re"].get<double>() == Catch::Approx(-3).margin(1e-12));

  write("identity.mat", R"({"re": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                           "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})");
  j = run_json("invariants --matrix identity.mat");
  CHECK(j["g1"]["re"].get<double>() == Catch::Approx(1));
  CHECK(j["g2"]["re"].get<double>() == Catch::Approx(3));

  const Run text = run("invariants --gate cnot");
  CHECK(text.code == 0);
  CHECK(text.out.find("g2.re: 1\n") != std::string::npos);
}

TEST_CASE("bad input exits with 2", "[cli]") {
  write("scaled.mat", R"({"re": [[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                         "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})");
  CHECK(run("invariants --matrix scaled.mat").code == 2);
  CHECK(run("invariants --matrix missing.mat").code == 2);
  CHECK(run("invariants --gate toffoli").code == 2);
  CHECK(run("invariants").code == 2);
  CHECK(run("invariants --gate cnot --matrix identity.mat").code == 2);
  CHECK(run("mintime --gate cnot --coupling 0").code == 2);
  CHECK(run("frobnicate").code == 2);
  write("garbage.sched", "{ not a schedule");
  CHECK(run("verify --schedule garbage.sched").code == 2);
}

TEST_CASE("mintime command", "[cli]") {
  auto j = run_json("mintime --gate cnot --coupling 1");
  CHECK(j["t_star_seconds"].get<double>() == Catch::Approx(0.5).epsilon(1e-12));
  j = run_json("mintime --gate sqrtswap --coupling 2");
  CHECK(j["t_star_seconds"].get<double>() == Catch::Approx(0.375).epsilon(1e-12));
  j = run_json("mintime --gate cu --gamma1 0.5236 --coupling 1");
  CHECK(j["t_star_seconds"].get<double>() == Catch::Approx(0.5236 / 3.141592653589793).epsilon(1e-10));
  j = run_json("--coupling 2 mintime --gate swap");
  CHECK(j["t_star_seconds"].get<double>() == Catch::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("coords and kak commands", "[cli]") {
  auto j = run_json("coords --gate cnot");
  CHECK(j["coords"]["c1"].get<double>() == Catch::Approx(1.5707963267948966));
  j = run_json("coords --gate cnot --degrees");
  CHECK(j["coords"]["c1"].get<double>() == Catch::Approx(90));
  CHECK(j["angle_unit"] == "deg");
  j = run_json("kak --gate sqrtswap");
  CHECK(j["residual"].get<double>() < 1e-10);
  CHECK(j["k1"]["qubit1"]["re"].size() == 2);
}

TEST_CASE("schedule and verify commands", "[cli]") {
  Run r = run("schedule --gate cnot --coupling 1 --pulse-strength 1000 -o cnot.sched --output json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["segments"] == 5);
  CHECK(j["drift_time_s"].get<double>() == 0.5);
  CHECK(nlohmann::json::parse(read("cnot.sched"))["segments"].size() == 5);

  j = run_json("schedule --gate swap --coupling 1 --pulse-strength 1000");
  CHECK(j["drift_time_s"].get<double>() == Catch::Approx(1.5).epsilon(1e-12));

  CHECK(run("schedule --gate cnot --coupling 1 --pulse-strength 5").code == 4);

  r = run("verify --schedule cnot.sched");
  CHECK(r.code == 0);
  CHECK(r.out.find("result: pass") != std::string::npos);
  CHECK(run("verify --schedule cnot.sched --gate swap").code == 5);
  CHECK(run("verify --schedule cnot.sched --threshold 0.9999999").code == 5);

  write("empty.sched", R"({"coupling_j_hz": 1, "pulse_strength_n": 1000,
                          "target": {"gate": "cnot"}, "segments": []})");
  j = run_json("verify --schedule empty.sched --matrix identity.mat");
  CHECK(j["fidelity"].get<double>() == Catch::Approx(1.0));

  j = run_json("simulate --schedule cnot.sched");
  CHECK(j["fidelity"].get<double>() >= 0.999);
  CHECK(j["u_final"]["re"].size() == 4);
}

TEST_CASE("output is deterministic", "[cli]") {
  for (const char *args : {"mintime --gate cu --gamma1 0.3 --gamma3 0.2", "kak --gate swap",
                           "schedule --gate sqrtswap --output json"}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
