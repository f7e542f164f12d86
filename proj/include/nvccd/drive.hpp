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

// Concatenated continuous-decoupling drive fields.
//
// Each branch (+ and -) carries a carrier frequency and a hierarchy of
// amplitudes amp1 >> amp2 >> amp3. For a branch with carrier w:
//
//   first  : amp1 cos(w t)
//   second : first  + 2 amp2 cos(w t + pi/2) cos(amp1 t)
//   third  : second + 2 amp3 cos(w t) cos(amp2 t)
//
// The third-order carrier has no pi/2 shift. Microwave-source noise z1
// scales the standalone amp1 term only: amp1 (1 + z1) cos(w t); the amp1
// inside the second-order envelope stays nominal.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nvccd {

enum class DriveOrder { Off, Constant, First, Second, Third };

enum class Branch { Plus, Minus };

std::string_view to_string(DriveOrder order);
/// Accepts "off", "none", "constant", "1"/"first"/"I", "2"/"second"/"II",
/// "3"/"third"/"III". Throws ConfigError otherwise.
DriveOrder parse_drive_order(std::string_view text);

struct BranchDrive {
  double carrier = 0.0;   // omega_{+/-}
  double amp1 = 0.0;
  double amp2 = 0.0;
  double amp3 = 0.0;
  double constant = 0.0;  // used when order == Constant
};

struct DriveConfig {
  DriveOrder order = DriveOrder::Off;
  BranchDrive plus;
  BranchDrive minus;

  const BranchDrive& branch(Branch b) const { return b == Branch::Plus ? plus : minus; }
  BranchDrive& branch(Branch b) { return b == Branch::Plus ? plus : minus; }
};

/// Omega_branch(t). `amplitude_noise` is the instantaneous z1 sample.
double drive_amplitude(const DriveConfig& cfg, Branch branch, double t,
                       std::optional<double> amplitude_noise = std::nullopt);

/// Non-fatal configuration diagnostics (RWA hierarchy, signs, zero carriers).
std::vector<std::string> validate(const DriveConfig& cfg);

}  // namespace nvccd
