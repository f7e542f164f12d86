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

// Two-level concatenated-drive check.
//
//   H(t) = (w + zb)/2 sz + W1 (1 + z1) cos(w t) sx
//        + W2 (1 + z2) cos(w t + pi/2) cos(W1 t) sx
//
// First interaction picture: psi1 = exp(i w t sz / 2) psi. Second picture:
// psi2 = exp(i W1 t sx / 2) psi1. Dressed states are sx eigenstates in the
// first picture and sy eigenstates in the second.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nvccd/qutrit.hpp"

namespace nvccd {

struct TwoLevelParams {
  double omega = 1.0;
  double omega1 = 0.1;
  double omega2 = 0.02;
  /// Number of active drive terms: 0 (none), 1 or 2.
  int drive_order = 2;
};

struct TwoLevelNoise {
  double zeta_b = 0.0;
  double zeta1 = 0.0;
  double zeta2 = 0.0;
};

Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();

Matrix2c lab_frame_hamiltonian(const TwoLevelParams& p, double t, const TwoLevelNoise& noise = {});

/// First picture (order 1): W1 (1 + z1)/2 sx + zb/2 sz.
/// Second picture (order 2): W2 (1 + z2)/2 sy + W1 z1/2 (identity).
/// Throws ConfigError for any other order.
Matrix2c rwa_effective_hamiltonian(const TwoLevelParams& p, int order,
                                   const TwoLevelNoise& noise = {});

/// RWA hierarchy diagnostics (W2 << W1 << w).
std::vector<std::string> validate(const TwoLevelParams& p);

enum class DressedBasis { X, Y };

/// +1 eigenstate of sx or sy.
Vector2c dressed_state(DressedBasis basis);

/// Lab-frame state mapped into the picture where `basis` is the dressed basis.
Vector2c to_dressed_frame(const TwoLevelParams& p, DressedBasis basis, double t,
                          const Vector2c& psi_lab);

struct LeakageConfig {
  TwoLevelParams params;
  DressedBasis basis = DressedBasis::X;
  double bath_intensity = 0.0;   // zb
  double drive1_intensity = 0.0; // z1
  double drive2_intensity = 0.0; // z2
  double tau = 250.0;
  double t_max = 100.0;
  double dt = 0.01;
  int sample_every = 100;
  int n_realizations = 1;
  std::uint64_t master_seed = 0;
};

struct LeakageResult {
  std::vector<double> time;
  std::vector<double> mean_leakage;
  std::vector<double> std_err;
  /// Mean of the leakage series over the samples after t = 0.
  double time_average = 0.0;
};

/// Starts every realization in the dressed state, integrates the lab-frame
/// Schrodinger equation (RK4, noise held over a step) and reports
/// 1 - |<dressed|psi>|^2 averaged over realizations. Realization k uses seeds
/// derive_seed(master, k, s) with s = 0, 1, 2 for zb, z1, z2, so two
/// configurations with the same master seed see identical noise paths.
LeakageResult dressed_population_leakage(const LeakageConfig& cfg, int workers = 1);

struct ProtectionSuite {
  // RWA validity: noise off, frame-1 evolution vs exp(-i W1 t sx / 2).
  double rwa_error = 0.0;
  bool rwa_pass = false;
  // (a) bath noise, first-order drive vs no drive, sx basis.
  LeakageResult bath_driven, bath_undriven;
  double bath_factor = 0.0;
  bool bath_pass = false;
  // (b) drive-amplitude noise z1, sy basis in the second picture,
  // second-order drive vs first order only.
  LeakageResult drive_order2, drive_order1;
  bool drive_pass = false;

  bool pass() const { return rwa_pass && bath_pass && drive_pass; }
  std::string report() const;
};

struct ProtectionSuiteConfig {
  TwoLevelParams params;  // drive_order is overridden per run
  double intensity = 0.25;
  double tau = 250.0;
  double dt = 0.01;
  double bath_t_max = 200.0;
  double drive_t_max = 400.0;
  int bath_realizations = 100;
  int drive_realizations = 100;
  std::uint64_t master_seed = 0;
};

ProtectionSuite run_protection_suite(const ProtectionSuiteConfig& cfg, int workers = 1);

/// Max |psi1 - exp(-i W1 t sx / 2) psi0| over one Rabi period with noise off.
double rwa_deviation(const TwoLevelParams& p, double dt = 0.01);

}  // namespace nvccd
