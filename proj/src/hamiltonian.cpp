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

#include "nvccd/hamiltonian.hpp"

namespace nvccd {

Matrix3c hamiltonian_at(const NVParams& params, double t, const FieldNoise& noise) {
  const double half_plus = 0.5 * drive_amplitude(params.drive, Branch::Plus, t, noise.amp_plus);
  const double half_minus =
      0.5 * drive_amplitude(params.drive, Branch::Minus, t, noise.amp_minus);
  const double excited = -params.delta_plus + noise.detuning;

  Matrix3c h = Matrix3c::Zero();
  h(0, 1) = h(1, 0) = half_minus;
  h(0, 2) = h(2, 0) = half_plus;
  h(1, 1) = excited;
  h(2, 2) = excited;
  return h;
}

HamiltonianFn make_hamiltonian(const NVParams& params) {
  return [params](double t) { return hamiltonian_at(params, t); };
}

}  // namespace nvccd
