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

#include <stdexcept>
#include <string>

namespace twoq {

enum class ErrorCode {
  InvalidArgument,
  NotUnitary,
  NonHermitian,
  NonRealG2,
  PositiveDiscriminant,
  ResidualTooLarge,
  NotLocal,
  ReconstructionFailed,
  HardPulseRegimeViolated,
  NonPositiveCoupling,
  ParseError,
  IoError,
};

const char *error_code_name(ErrorCode code);

// All failures raised by the library carry one of the codes above so that the
// C API can map them onto status values without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Tolerances used throughout the library. Every value is multiplied by the
/// process-wide scale set with set_tolerance_scale().
struct Tolerances {
  double unitary = 1e-10;         // Unitary4 construction
  double hermitian = 1e-10;       // Hermitian4 construction
  double identity = 1e-9;         // derived identities
  double user_unitary = 1e-8;     // matrices read from user files
  double imag_g2 = 1e-8;          // |Im G2| before NonRealG2
  double positive_disc = 1e-9;    // discriminant above this is rejected
  double degenerate_disc = 1e-12; // 1 - |T| routed to the double root
  double triple_root = 1e-12;     // |P|, |Q| below this give X = 0 three times
  double double_root = 1e-14;     // squared gap of the deflated pair
  double root_residual = 1e-8;
  double root_clamp = 1e-9;
  double root_snap = 1e-14;
  double not_local = 1e-8;        // second singular value of the reshuffle
  double reconstruction = 1e-7;   // KAK round trip, max-norm
};

double tolerance_scale();
void set_tolerance_scale(double scale);
Tolerances tolerances();

}  // namespace twoq
