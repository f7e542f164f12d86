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

// Closed-system propagation of the three-level system.
//
// The block-decomposition backend writes the propagator as
//
//   U(t) = T(z, w) D(t),   T = [[I, z], [0, 1]] [[I, 0], [w^dagger, 1]],
//
// with D block-diagonal (2 + 1). With H partitioned as
// [[H2, V], [V^dagger, h]], z obeys the matrix Riccati equation
//
//   i dz/dt = H2 z + V - z (V^dagger z + h),
//
// w is tied to z by w = -z / (1 + z^dagger z), and D obeys
// i dD/dt = Heff D with Heff = T^-1 H T - i T^-1 dT/dt (block-diagonal once
// z follows the Riccati flow). The non-unitary factors are rebalanced with
// the Hermitian gauge g1 = (I + z z^dagger)^(1/2), g2 = (1 + z^dagger z)^(-1/2).
//
// The direct backend integrates i dU/dt = H U and serves as the reference.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nvccd/hamiltonian.hpp"
#include "nvccd/qutrit.hpp"

namespace nvccd {

enum class Backend { BlockDecomposition, Direct };

std::string_view to_string(Backend backend);
/// "block", "block-decomposition" or "direct".
Backend parse_backend(std::string_view text);

/// H = [[upper, coupling], [coupling^dagger, lower]].
struct BlockPartition {
  Matrix2c upper;
  Vector2c coupling;
  Complex lower;
};

BlockPartition partition(const Matrix3c& h);

/// dz/dt = -i [H2 z + V - z (V^dagger z + h)].
Vector2c z_rhs(const Vector2c& z, const Matrix3c& h);

/// w = -z / (1 + z^dagger z).
Vector2c w_from_z(const Vector2c& z);

/// T(z, w) = [[I + z w^dagger, z], [w^dagger, 1]].
Matrix3c triangular_factor(const Vector2c& z, const Vector2c& w);

/// Closed-form inverse of T: [[I, -z], [-w^dagger, 1 + w^dagger z]].
Matrix3c triangular_factor_inverse(const Vector2c& z, const Vector2c& w);

/// Principal square root of a 2x2 Hermitian positive-definite matrix.
Matrix2c hermitian_sqrt2(const Matrix2c& a);

struct EffectiveHamiltonian {
  Matrix3c matrix;          // block-diagonal part
  double off_block_residue; // max off-block entry, relative to max(1, |z|^2)
};

/// T^-1 H T - i T^-1 dT/dt, with dw/dt derived from (z, dz/dt).
///
/// Throws IntegrationError if the off-block residue exceeds 1e-6, which
/// means z and zdot are not consistent with the Riccati flow for H.
EffectiveHamiltonian effective_hamiltonian(const Vector2c& z, const Vector2c& w,
                                           const Vector2c& zdot, const Matrix3c& h);

struct UnitaryOptions {
  double dt = 1e-3;
  int sample_every = 100;
  /// |z| above this aborts with RiccatiBlowupError.
  double z_guard = 1e6;
  /// Each outer step is split into 1 + floor(|z|) RK4 substeps, capped here.
  int max_substeps = 1 << 16;
};

struct UnitarySample {
  double t = 0.0;
  QutritState state;
  Vector3d populations;
  double norm_drift = 0.0;
  double unitarity_residual = 0.0;
};

struct UnitaryTrace {
  std::vector<UnitarySample> samples;
  Matrix3c final_propagator;
  double max_norm_drift = 0.0;
  double max_unitarity_residual = 0.0;
  double max_z_norm = 0.0;  // block backend only
};

/// One trajectory of the block-decomposition propagator.
class BlockPropagator {
 public:
  BlockPropagator(HamiltonianFn hamiltonian, UnitaryOptions options = {});

  /// Advance by one outer step dt.
  void step();

  double time() const noexcept { return time_; }
  const Vector2c& z() const noexcept { return z_; }
  Vector2c w() const { return w_from_z(z_); }
  /// Block-diagonal factor D (off-block entries exactly zero).
  Matrix3c block_factor() const;
  /// Gauge-balanced factors U1 = T g and U2 = g^-1 D; U = U1 U2.
  Matrix3c unitary_left() const;
  Matrix3c unitary_right() const;
  Matrix3c propagator() const;

 private:
  struct State {
    Vector2c z;
    Matrix2c upper;
    Complex lower;
  };
  State rhs(double t, const State& s) const;
  void rk4(double t, double h);

  HamiltonianFn hamiltonian_;
  UnitaryOptions options_;
  std::int64_t steps_ = 0;
  double time_ = 0.0;
  Vector2c z_ = Vector2c::Zero();
  Matrix2c upper_ = Matrix2c::Identity();
  Complex lower_ = 1.0;
};

UnitaryTrace propagate_unitary(const HamiltonianFn& hamiltonian, double t_max,
                               const QutritState& psi0, const UnitaryOptions& options = {});

UnitaryTrace propagate_unitary(const NVParams& params, double t_max, const QutritState& psi0,
                               const UnitaryOptions& options = {});

/// RK4 on i dU/dt = H U (fixed step, no substeps).
UnitaryTrace propagate_direct(const HamiltonianFn& hamiltonian, double t_max,
                              const QutritState& psi0, const UnitaryOptions& options = {});

UnitaryTrace propagate(Backend backend, const HamiltonianFn& hamiltonian, double t_max,
                       const QutritState& psi0, const UnitaryOptions& options = {});

}  // namespace nvccd
