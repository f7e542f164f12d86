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

#pragma once

#include <functional>

#include "nvccd/drive.hpp"
#include "nvccd/qutrit.hpp"

namespace nvccd {

/// Energies in units of the zero-field splitting, time in its inverse.
struct NVParams {
  double delta_plus = 0.0;  // detuning on both excited levels
  DriveConfig drive;
};

/// Instantaneous noise samples entering the Hamiltonian.
struct FieldNoise {
  double detuning = 0.0;   // bath shift zeta on the excited levels
  double amp_plus = 0.0;   // microwave amplitude noise, + branch
  double amp_minus = 0.0;  // microwave amplitude noise, - branch
};

/// Time-dependent Hamiltonian, as used by the generic propagators.
using HamiltonianFn = std::function<Matrix3c(double)>;

/// [[0, W-/2, W+/2], [W-/2, -D + z, 0], [W+/2, 0, -D + z]].
Matrix3c hamiltonian_at(const NVParams& params, double t, const FieldNoise& noise = {});

/// Noise-free closure over `params`.
HamiltonianFn make_hamiltonian(const NVParams& params);

}  // namespace nvccd
