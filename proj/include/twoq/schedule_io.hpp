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

#pragma once

// Text formats.
//
// Schedule document (JSON):
//   {
//     "coupling_j_hz": 1.0,
//     "pulse_strength_n": 1000.0,
//     "target": {"gate": "cnot"},
//     "declared_drift_time_s": 0.5,            (optional)
//     "expected_global_phase_rad": -0.785...,  (optional)
//     "segments": [{"duration_s": 0.001, "v": [0, -500, 0, -250]}, ...]
//   }
// target is {"gate": "cnot" | "swap" | "sqrtswap"},
// {"gate": "cu", "gamma": [g1, g2, g3]} or
// {"gate": "custom", "re": [[..4..] x4], "im": [[..4..] x4]}.
// Numbers are written with round-trip (17 significant digit) precision.
//
// Matrix document (JSON): {"re": [[..4..] x4], "im": [[..4..] x4]}, row-major.

#include <filesystem>
#include <string>

#include "twoq/schedule.hpp"

namespace twoq {

std::string schedule_to_string(const Schedule &s);
/// Throws Error(ParseError) on malformed input.
Schedule schedule_from_string(const std::string &text);

/// Throws Error(IoError) when the file cannot be written.
void write_schedule_file(const std::filesystem::path &path, const Schedule &s);
/// Throws Error(IoError) or Error(ParseError).
Schedule read_schedule_file(const std::filesystem::path &path);

std::string matrix_to_string(const Matrix4 &m);
/// Parses a matrix document and checks unitarity within tol.
/// Throws Error(ParseError) or Error(NotUnitary).
Unitary4 unitary_from_string(const std::string &text, double tol);
Unitary4 read_matrix_file(const std::filesystem::path &path, double tol);

}  // namespace twoq
