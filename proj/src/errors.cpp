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

#include "twoq/errors.hpp"

#include <atomic>
#include <cmath>

namespace twoq {

namespace {
std::atomic<double> g_tolerance_scale{1.0};
}

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NonRealG2: return "NonRealG2";
    case ErrorCode::PositiveDiscriminant: return "PositiveDiscriminant";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::HardPulseRegimeViolated: return "HardPulseRegimeViolated";
    case ErrorCode::NonPositiveCoupling: return "NonPositiveCoupling";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

double tolerance_scale() { return g_tolerance_scale.load(); }

void set_tolerance_scale(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::InvalidArgument,
                "tolerance scale must be positive and finite");
  }
  g_tolerance_scale.store(scale);
}

Tolerances tolerances() {
  const double s = tolerance_scale();
  Tolerances t;
  if (s == 1.0) return t;
  for (double *v : {&t.unitary, &t.hermitian, &t.identity, &t.user_unitary,
                    &t.imag_g2, &t.positive_disc, &t.degenerate_disc,
                    &t.triple_root, &t.double_root, &t.root_residual,
                    &t.root_clamp, &t.root_snap,
                    &t.not_local, &t.reconstruction}) {
    *v *= s;
  }
  return t;
}

}  // namespace twoq
