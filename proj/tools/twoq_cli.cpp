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

// twoq command-line front end. Uses the C API only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include "twoq/twoq.h"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitPipeline = 3,
  kExitRegime = 4,
  kExitFidelity = 5,
};

struct GateDeleter {
  void operator()(twoq_gate *g) const { twoq_gate_free(g); }
};
struct ScheduleDeleter {
  void operator()(twoq_schedule *s) const { twoq_schedule_free(s); }
};
using GatePtr = std::unique_ptr<twoq_gate, GateDeleter>;
using SchedulePtr = std::unique_ptr<twoq_schedule, ScheduleDeleter>;

// Carries a C API failure up to main.
struct Failure {
  twoq_status status;
  std::string message;
};

void check(twoq_status status) {
  if (status != TWOQ_OK) throw Failure{status, twoq_last_error()};
}

int exit_code_for(twoq_status status) {
  switch (status) {
    case TWOQ_OK: return kExitOk;
    case TWOQ_ERR_INVALID_ARGUMENT:
    case TWOQ_ERR_NOT_UNITARY:
    case TWOQ_ERR_NON_HERMITIAN:
    case TWOQ_ERR_NON_POSITIVE_COUPLING:
    case TWOQ_ERR_PARSE:
    case TWOQ_ERR_IO:
      return kExitInput;
    case TWOQ_ERR_NON_REAL_G2:
    case TWOQ_ERR_POSITIVE_DISCRIMINANT:
    case TWOQ_ERR_RESIDUAL_TOO_LARGE:
    case TWOQ_ERR_NOT_LOCAL:
    case TWOQ_ERR_RECONSTRUCTION_FAILED:
      return kExitPipeline;
    case TWOQ_ERR_HARD_PULSE_REGIME: return kExitRegime;
    case TWOQ_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

struct GlobalOptions {
  double coupling = 1.0;
  double pulse_strength = 1000.0;
  std::string output = "text";
  double tol_scale = 1.0;
  bool degrees = false;
};

struct GateOptions {
  std::string name;
  std::string matrix_path;
  double gamma1 = 0, gamma2 = 0, gamma3 = 0;

  bool given() const { return !name.empty() || !matrix_path.empty(); }
};

void add_gate_options(CLI::App *cmd, GateOptions &g, bool required) {
  auto *gate = cmd->add_option("--gate", g.name, "Library gate")
                   ->check(CLI::IsMember({"cnot", "swap", "sqrtswap", "cu"}));
  auto *matrix = cmd->add_option("--matrix", g.matrix_path, "Matrix file with re/im 4x4 arrays");
  gate->excludes(matrix);
  matrix->excludes(gate);
  cmd->add_option("--gamma1", g.gamma1, "Controlled-U angle about x (rad)");
  cmd->add_option("--gamma2", g.gamma2, "Controlled-U angle about y (rad)");
  cmd->add_option("--gamma3", g.gamma3, "Controlled-U angle about z (rad)");
  if (required) {
    auto *group = cmd->add_option_group("gate input");
    group->add_option(gate);
    group->add_option(matrix);
    group->require_option(1);
  }
}

GatePtr load_gate(const GateOptions &g) {
  twoq_gate *out = nullptr;
  if (!g.matrix_path.empty()) {
    check(twoq_gate_load_matrix(g.matrix_path.c_str(), 0.0, &out));
  } else if (g.name == "cnot") {
    check(twoq_gate_cnot(&out));
  } else if (g.name == "swap") {
    check(twoq_gate_swap(&out));
  } else if (g.name == "sqrtswap") {
    check(twoq_gate_sqrtswap(&out));
  } else if (g.name == "cu") {
    check(twoq_gate_controlled_u(g.gamma1, g.gamma2, g.gamma3, &out));
  } else {
    throw Failure{TWOQ_ERR_INVALID_ARGUMENT, "no gate given"};
  }
  return GatePtr(out);
}

SchedulePtr load_schedule(const std::string &path) {
  twoq_schedule *out = nullptr;
  check(twoq_schedule_load(path.c_str(), &out));
  return SchedulePtr(out);
}

class Reporter {
 public:
  explicit Reporter(const GlobalOptions &opts) : opts_(opts) {}

  double angle(double rad) const {
    return opts_.degrees ? rad * 180.0 / std::numbers::pi : rad;
  }
  const char *angle_unit() const { return opts_.degrees ? "deg" : "rad"; }

  Json invariants(const twoq_invariants &inv) const {
    return Json{{"g1", {{"re", inv.g1_re}, {"im", inv.g1_im}}},
                {"g2", {{"re", inv.g2_re}, {"im", inv.g2_im}}},
                {"abc", {{"a", inv.a}, {"b", inv.b}, {"c", inv.c}}}};
  }

  Json coords(const twoq_coords &c) const {
    return Json{{"c1", angle(c.c1)}, {"c2", angle(c.c2)}, {"c3", angle(c.c3)}};
  }

  static Json matrix(const double *re, const double *im, int n) {
    Json out = Json::object();
    Json jre = Json::array(), jim = Json::array();
    for (int r = 0; r < n; ++r) {
      Json rr = Json::array(), ri = Json::array();
      for (int c = 0; c < n; ++c) {
        rr.push_back(re[r * n + c]);
        ri.push_back(im[r * n + c]);
      }
      jre.push_back(rr);
      jim.push_back(ri);
    }
    out["re"] = jre;
    out["im"] = jim;
    return out;
  }

  Json local(const twoq_local_gate &g) const {
    return Json{{"qubit1", matrix(g.a_re, g.a_im, 2)},
                {"qubit2", matrix(g.b_re, g.b_im, 2)},
                {"phase", angle(g.phase)}};
  }

  Json simulation(const twoq_sim_report &r) const {
    return Json{{"fidelity", r.fidelity},
                {"relative_phase", angle(r.relative_phase)},
                {"wall_time_s", r.wall_time_s},
                {"drift_time_s", r.drift_time_s}};
  }

  void print(const Json &report) const {
    if (opts_.output == "json") {
      std::cout << report.dump(2) << '\n';
    } else {
      print_text(report, "");
    }
  }

 private:
  static std::string number(double v) {
    if (std::abs(v) < 1e-15) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }

  static std::string scalar(const Json &v) {
    if (v.is_number_float()) return number(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  static void print_text(const Json &node, const std::string &prefix) {
    if (node.is_object()) {
      for (const auto &[key, value] : node.items()) {
        print_text(value, prefix.empty() ? key : prefix + "." + key);
      }
    } else if (node.is_array() && !node.empty() && node.front().is_array()) {
      for (std::size_t i = 0; i < node.size(); ++i) {
        print_text(node[i], prefix + "[" + std::to_string(i) + "]");
      }
    } else if (node.is_array()) {
      std::string line;
      for (const auto &v : node) line += (line.empty() ? "" : " ") + scalar(v);
      std::cout << prefix << ": " << line << '\n';
    } else {
      std::cout << prefix << ": " << scalar(node) << '\n';
    }
  }

  const GlobalOptions &opts_;
};

int cmd_invariants(const GateOptions &g, const Reporter &rep) {
  GatePtr gate = load_gate(g);
  twoq_invariants inv{};
  check(twoq_local_invariants(gate.get(), &inv));
  Json out{{"gate", twoq_gate_name(gate.get())}};
  out.update(rep.invariants(inv));
  rep.print(out);
  return kExitOk;
}

int cmd_mintime(const GateOptions &g, const GlobalOptions &opts, const Reporter &rep) {
  GatePtr gate = load_gate(g);
  twoq_mintime_report r{};
  check(twoq_min_time(gate.get(), opts.coupling, &r));
  Json out{{"gate", twoq_gate_name(gate.get())}, {"coupling_j_hz", r.coupling_j_hz}};
  out.update(rep.invariants(r.invariants));
  out["cubic"] = {{"p", r.p},
                  {"q", r.q},
                  {"r", r.r},
                  {"P", r.P},
                  {"Q", r.Q},
                  {"discriminant", r.discriminant},
                  {"roots_x", {r.roots_x[0], r.roots_x[1], r.roots_x[2]}},
                  {"roots_X", {r.roots_X[0], r.roots_X[1], r.roots_X[2]}}};
  out["angle_unit"] = rep.angle_unit();
  out["coords"] = rep.coords(r.coords);
  out["t_star_seconds"] = r.t_star_s;
  rep.print(out);
  return kExitOk;
}

int cmd_coords(const GateOptions &g, const Reporter &rep) {
  GatePtr gate = load_gate(g);
  twoq_coords c{};
  check(twoq_canonical_coords(gate.get(), &c));
  Json out{{"gate", twoq_gate_name(gate.get())}, {"angle_unit", rep.angle_unit()}};
  out["coords"] = rep.coords(c);
  rep.print(out);
  return kExitOk;
}

int cmd_kak(const GateOptions &g, const Reporter &rep) {
  GatePtr gate = load_gate(g);
  twoq_kak d{};
  check(twoq_kak_decompose(gate.get(), &d));
  Json out{{"gate", twoq_gate_name(gate.get())}, {"angle_unit", rep.angle_unit()}};
  out["coords"] = rep.coords(d.coords);
  out["zz_sign"] = d.zz_sign;
  out["global_phase"] = rep.angle(d.global_phase);
  out["k1"] = rep.local(d.k1);
  out["k2"] = rep.local(d.k2);
  out["residual"] = d.residual;
  rep.print(out);
  return kExitOk;
}

Json schedule_summary(const twoq_schedule *s) {
  twoq_gate *raw = nullptr;
  check(twoq_schedule_target(s, &raw));
  GatePtr target(raw);
  return Json{{"target", twoq_gate_name(target.get())},
              {"coupling_j_hz", twoq_schedule_coupling(s)},
              {"pulse_strength_n", twoq_schedule_pulse_strength(s)},
              {"segments", twoq_schedule_segment_count(s)},
              {"wall_time_s", twoq_schedule_wall_time(s)},
              {"drift_time_s", twoq_schedule_drift_time(s)}};
}

int cmd_schedule(const GateOptions &g, const GlobalOptions &opts, const std::string &out_path,
                 const Reporter &rep) {
  GatePtr gate = load_gate(g);
  twoq_schedule *raw = nullptr;
  check(twoq_schedule_synthesize(gate.get(), opts.coupling, opts.pulse_strength, &raw));
  SchedulePtr sched(raw);
  if (!out_path.empty()) check(twoq_schedule_save(sched.get(), out_path.c_str()));
  Json out = schedule_summary(sched.get());
  if (!out_path.empty()) out["written"] = out_path;
  rep.print(out);
  return kExitOk;
}

int cmd_simulate(const std::string &path, const Reporter &rep) {
  SchedulePtr sched = load_schedule(path);
  twoq_sim_report r{};
  check(twoq_simulate(sched.get(), &r));
  Json out = schedule_summary(sched.get());
  out["angle_unit"] = rep.angle_unit();
  out.update(rep.simulation(r));
  out["u_final"] = Reporter::matrix(r.u_re, r.u_im, 4);
  rep.print(out);
  return kExitOk;
}

int cmd_verify(const std::string &path, const GateOptions &g, double threshold,
               const Reporter &rep) {
  SchedulePtr sched = load_schedule(path);
  GatePtr target;
  if (g.given()) {
    target = load_gate(g);
  } else {
    twoq_gate *raw = nullptr;
    check(twoq_schedule_target(sched.get(), &raw));
    target.reset(raw);
  }
  twoq_sim_report r{};
  check(twoq_verify(sched.get(), target.get(), &r));
  const bool pass = r.fidelity >= threshold;
  Json out{{"schedule", path}, {"against", twoq_gate_name(target.get())}};
  out["angle_unit"] = rep.angle_unit();
  out.update(rep.simulation(r));
  out["threshold"] = threshold;
  out["result"] = pass ? "pass" : "fail";
  rep.print(out);
  return pass ? kExitOk : kExitFidelity;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Two-qubit gate analysis and hard-pulse schedule synthesis"};
  app.set_version_flag("--version", std::string(twoq_version()));
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--coupling", opts.coupling, "Coupling constant J in Hz")->capture_default_str();
  app.add_option("--pulse-strength", opts.pulse_strength, "Hard-pulse strength N")
      ->capture_default_str();
  app.add_option("--output", opts.output, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--tol-scale", opts.tol_scale, "Multiplier applied to every tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--degrees", opts.degrees, "Print angles in degrees");

  GateOptions gate;
  std::string schedule_path, out_path;
  double threshold = 0.999;

  auto *inv = app.add_subcommand("invariants", "Local invariants G1, G2 and (a, b, c)");
  add_gate_options(inv, gate, true);
  auto *mt = app.add_subcommand("mintime", "Canonical coordinates and minimal time");
  add_gate_options(mt, gate, true);
  auto *co = app.add_subcommand("coords", "Canonical coordinates");
  add_gate_options(co, gate, true);
  auto *kak = app.add_subcommand("kak", "Cartan decomposition");
  add_gate_options(kak, gate, true);
  auto *sch = app.add_subcommand("schedule", "Synthesize a hard-pulse schedule");
  add_gate_options(sch, gate, true);
  sch->add_option("-o,--out", out_path, "Schedule file to write");
  auto *sim = app.add_subcommand("simulate", "Propagate a schedule against its target");
  sim->add_option("--schedule", schedule_path, "Schedule file")->required();
  auto *ver = app.add_subcommand("verify", "Check a schedule's fidelity");
  ver->add_option("--schedule", schedule_path, "Schedule file")->required();
  add_gate_options(ver, gate, false);
  ver->add_option("--threshold", threshold, "Minimum fidelity")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }

  const Reporter rep(opts);
  try {
    check(twoq_set_tolerance_scale(opts.tol_scale));
    if (*inv) return cmd_invariants(gate, rep);
    if (*mt) return cmd_mintime(gate, opts, rep);
    if (*co) return cmd_coords(gate, rep);
    if (*kak) return cmd_kak(gate, rep);
    if (*sch) return cmd_schedule(gate, opts, out_path, rep);
    if (*sim) return cmd_simulate(schedule_path, rep);
    if (*ver) return cmd_verify(schedule_path, gate, threshold, rep);
  } catch (const Failure &f) {
    std::cerr << "error: " << twoq_status_string(f.status) << ": " << f.message << '\n';
    return exit_code_for(f.status);
  }
  return kExitInternal;
}
