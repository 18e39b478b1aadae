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

#include "twoq/schedule_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace twoq {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string &what) {
  throw Error(ErrorCode::ParseError, what);
}

double number_at(const json &j, const char *key) {
  if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  const json &v = j.at(key);
  if (!v.is_number()) parse_fail(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

json matrix_json(const Matrix4 &m) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < 4; ++r) {
    json rr = json::array(), ir = json::array();
    for (int c = 0; c < 4; ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return json{{"re", re}, {"im", im}};
}

Matrix4 matrix_from_json(const json &j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    parse_fail("matrix document needs 're' and 'im' arrays");
  }
  Matrix4 m;
  for (const char *part : {"re", "im"}) {
    const json &a = j.at(part);
    if (!a.is_array() || a.size() != 4) {
      parse_fail(std::string("'") + part + "' must be a 4x4 array");
    }
    for (int r = 0; r < 4; ++r) {
      if (!a[r].is_array() || a[r].size() != 4) {
        parse_fail(std::string("'") + part + "' must be a 4x4 array");
      }
      for (int c = 0; c < 4; ++c) {
        if (!a[r][c].is_number()) parse_fail("matrix entries must be numbers");
        const double v = a[r][c].get<double>();
        if (part[0] == 'r') {
          m(r, c) = Complex(v, 0);
        } else {
          m(r, c) += Complex(0, v);
        }
      }
    }
  }
  return m;
}

json target_json(const GateSpec &spec) {
  json t{{"gate", gate_name(spec)}};
  if (const auto *cu = std::get_if<gate::ControlledU>(&spec)) {
    t["gamma"] = {cu->gamma1, cu->gamma2, cu->gamma3};
  } else if (const auto *custom = std::get_if<gate::Custom>(&spec)) {
    const json m = matrix_json(custom->matrix.matrix());
    t["re"] = m["re"];
    t["im"] = m["im"];
  }
  return t;
}

GateSpec target_from_json(const json &t) {
  if (!t.is_object() || !t.contains("gate") || !t["gate"].is_string()) {
    parse_fail("target must be an object with a 'gate' name");
  }
  const std::string name = t["gate"].get<std::string>();
  if (name == "cnot") return gate::Cnot{};
  if (name == "swap") return gate::Swap{};
  if (name == "sqrtswap") return gate::SqrtSwap{};
  if (name == "cu") {
    const json g = t.value("gamma", json::array({0.0, 0.0, 0.0}));
    if (!g.is_array() || g.size() != 3 || !g[0].is_number() || !g[1].is_number() ||
        !g[2].is_number()) {
      parse_fail("'gamma' must be an array of three numbers");
    }
    return gate::ControlledU{g[0].get<double>(), g[1].get<double>(), g[2].get<double>()};
  }
  if (name == "custom") {
    return gate::Custom{Unitary4(matrix_from_json(t), tolerances().user_unitary)};
  }
  parse_fail("unknown target gate '" + name + "'");
}

std::string read_text(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string schedule_to_string(const Schedule &s) {
  json segs = json::array();
  for (const auto &seg : s.segments) {
    const auto v = seg.amplitudes.as_array();
    segs.push_back({{"duration_s", seg.duration}, {"v", {v[0], v[1], v[2], v[3]}}});
  }
  json doc{{"coupling_j_hz", s.coupling_j},
           {"pulse_strength_n", s.pulse_strength_n},
           {"target", target_json(s.target)},
           {"declared_drift_time_s", s.declared_drift_time},
           {"segments", segs}};
  if (s.expected_global_phase) doc["expected_global_phase_rad"] = *s.expected_global_phase;
  return doc.dump(2) + "\n";
}

Schedule schedule_from_string(const std::string &text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_fail("schedule document must be an object");
  Schedule s;
  s.coupling_j = number_at(doc, "coupling_j_hz");
  s.pulse_strength_n = number_at(doc, "pulse_strength_n");
  if (!doc.contains("target")) parse_fail("missing field 'target'");
  s.target = target_from_json(doc["target"]);
  if (!doc.contains("segments") || !doc["segments"].is_array()) {
    parse_fail("missing array 'segments'");
  }
  for (const json &seg : doc["segments"]) {
    if (!seg.is_object()) parse_fail("segments must be objects");
    PulseSegment p;
    p.duration = number_at(seg, "duration_s");
    if (!seg.contains("v") || !seg["v"].is_array() || seg["v"].size() != 4) {
      parse_fail("segment 'v' must be an array of four numbers");
    }
    std::array<double, 4> v{};
    for (int i = 0; i < 4; ++i) {
      if (!seg["v"][i].is_number()) parse_fail("segment amplitudes must be numbers");
      v[i] = seg["v"][i].get<double>();
    }
    p.amplitudes = {v[0], v[1], v[2], v[3]};
    s.segments.push_back(p);
  }
  s.declared_drift_time = doc.contains("declared_drift_time_s")
                              ? number_at(doc, "declared_drift_time_s")
                              : s.drift_time();
  if (doc.contains("expected_global_phase_rad")) {
    s.expected_global_phase = number_at(doc, "expected_global_phase_rad");
  }
  try {
    validate(s);
  } catch (const Error &e) {
    parse_fail(std::string("invalid schedule: ") + e.what());
  }
  return s;
}

void write_schedule_file(const std::filesystem::path &path, const Schedule &s) {
  write_text(path, schedule_to_string(s));
}

Schedule read_schedule_file(const std::filesystem::path &path) {
  return schedule_from_string(read_text(path));
}

std::string matrix_to_string(const Matrix4 &m) { return matrix_json(m).dump(2) + "\n"; }

Unitary4 unitary_from_string(const std::string &text, double tol) {
  return Unitary4(matrix_from_json(parse_json(text)), tol);
}

Unitary4 read_matrix_file(const std::filesystem::path &path, double tol) {
  return unitary_from_string(read_text(path), tol);
}

}  // namespace twoq
