// Copyright 2026 The nvccd Authors
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

#include "nvccd/drive.hpp"

#include <cmath>
#include <numbers>

#include "nvccd/error.hpp"

namespace nvccd {

std::string_view to_string(DriveOrder order) {
  switch (order) {
    case DriveOrder::Off: return "off";
    case DriveOrder::Constant: return "constant";
    case DriveOrder::First: return "first";
    case DriveOrder::Second: return "second";
    case DriveOrder::Third: return "third";
  }
  return "unknown";
}

DriveOrder parse_drive_order(std::string_view text) {
  if (text == "off" || text == "none" || text == "0") return DriveOrder::Off;
  if (text == "constant" || text == "const") return DriveOrder::Constant;
  if (text == "first" || text == "1" || text == "I") return DriveOrder::First;
  if (text == "second" || text == "2" || text == "II") return DriveOrder::Second;
  if (text == "third" || text == "3" || text == "III") return DriveOrder::Third;
  throw ConfigError("unknown drive order '" + std::string(text) +
                    "' (expected off, constant, first, second or third)");
}

double drive_amplitude(const DriveConfig& cfg, Branch branch, double t,
                       std::optional<double> amplitude_noise) {
  const BranchDrive& b = cfg.branch(branch);
  const double scale = 1.0 + amplitude_noise.value_or(0.0);
  const double wt = b.carrier * t;

  switch (cfg.order) {
    case DriveOrder::Off:
      return 0.0;
    case DriveOrder::Constant:
      return b.constant * scale;
    case DriveOrder::First:
      return b.amp1 * scale * std::cos(wt);
    case DriveOrder::Second:
      return b.amp1 * scale * std::cos(wt) +
             2.0 * b.amp2 * std::cos(wt + std::numbers::pi / 2) * std::cos(b.amp1 * t);
    case DriveOrder::Third:
      return b.amp1 * scale * std::cos(wt) +
             2.0 * b.amp2 * std::cos(wt + std::numbers::pi / 2) * std::cos(b.amp1 * t) +
             2.0 * b.amp3 * std::cos(wt) * std::cos(b.amp2 * t);
  }
  throw ConfigError("drive_amplitude: unknown drive order");
}

std::vector<std::string> validate(const DriveConfig& cfg) {
  std::vector<std::string> warnings;
  for (Branch br : {Branch::Plus, Branch::Minus}) {
    const BranchDrive& b = cfg.branch(br);
    const std::string name = br == Branch::Plus ? "plus" : "minus";
    if (b.amp1 < 0 || b.amp2 < 0 || b.amp3 < 0 || b.constant < 0) {
      warnings.push_back(name + ": negative drive amplitude");
    }
    const bool second = cfg.order == DriveOrder::Second || cfg.order == DriveOrder::Third;
    const bool third = cfg.order == DriveOrder::Third;
    if ((second && b.amp2 > b.amp1) || (third && b.amp3 > b.amp2)) {
      warnings.push_back(name + ": RWA hierarchy violated (need amp3 <= amp2 <= amp1)");
    }
    const bool oscillating = cfg.order != DriveOrder::Off && cfg.order != DriveOrder::Constant;
    if (oscillating && b.carrier == 0.0) {
      warnings.push_back(name + ": zero carrier frequency");
    }
  }
  return warnings;
}

}  // namespace nvccd
