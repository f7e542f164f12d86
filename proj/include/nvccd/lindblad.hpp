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

// Open-system evolution with a single Gell-Mann collapse operator
//
//   L = sqrt(Gamma) [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
//
// integrated in the vectorized form xi = (r11, r12, r13, r21, r22, r23,
// r31, r32, r33). Bath noise zeta shifts the excited-level detuning.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nvccd/hamiltonian.hpp"
#include "nvccd/noise.hpp"
#include "nvccd/qutrit.hpp"

namespace nvccd {

struct LindbladParams {
  NVParams nv;
  double gamma = 0.0;
};

using XiVector = Eigen::Matrix<Complex, 9, 1>;

XiVector to_xi(const Matrix3c& rho);
Matrix3c from_xi(const XiVector& xi);

/// Component form of the master equation. `noise` carries the bath shift
/// and the microwave amplitude samples, held fixed over the call.
XiVector lindblad_rhs(const XiVector& xi, const LindbladParams& params, double t,
                      const FieldNoise& noise = {});

/// Convenience overload with detuning noise only.
XiVector lindblad_rhs(const XiVector& xi, const LindbladParams& params, double t, double zeta);

/// One independent OU process per source; absent sources contribute zero.
struct NoiseSources {
  std::optional<OUProcess> detuning;
  std::optional<OUProcess> amp_plus;
  std::optional<OUProcess> amp_minus;
};

struct LindbladOptions {
  double dt = 1e-3;
  int sample_every = 100;
  /// Record the noise samples alongside the observables.
  bool record_noise = false;
};

struct LindbladSample {
  double t = 0.0;
  Matrix3c rho;
  double purity = 0.0;
  double entropy = 0.0;
  FieldNoise noise;  // filled when record_noise is set
};

struct LindbladTrace {
  std::vector<LindbladSample> samples;
  double max_trace_drift = 0.0;
  double max_hermiticity_residual = 0.0;
  double min_eigenvalue = 1.0;
  std::vector<std::string> warnings;
};

/// Fixed-step RK4. Noise samples are held constant within a step and the
/// OU processes are advanced after it.
///
/// Throws IntegrationError when the trace drifts by more than 1e-6. An
/// eigenvalue below -1e-6 adds a warning (once) and the entropy of that
/// sample is computed with the negative part clamped.
LindbladTrace propagate_lindblad(const LindbladParams& params, const DensityMatrix& rho0,
                                 double t_max, const LindbladOptions& options = {},
                                 NoiseSources noise = {});

}  // namespace nvccd
