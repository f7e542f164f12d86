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

#include "nvccd/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

#include "nvccd/error.hpp"

namespace nvccd {

XiVector to_xi(const Matrix3c& rho) {
  XiVector xi;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) xi(3 * i + j) = rho(i, j);
  return xi;
}

Matrix3c from_xi(const XiVector& xi) {
  Matrix3c rho;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rho(i, j) = xi(3 * i + j);
  return rho;
}

XiVector lindblad_rhs(const XiVector& xi, const LindbladParams& params, double t,
                      const FieldNoise& noise) {
  const DriveConfig& drive = params.nv.drive;
  const double a = 0.5 * drive_amplitude(drive, Branch::Minus, t, noise.amp_minus);
  const double b = 0.5 * drive_amplitude(drive, Branch::Plus, t, noise.amp_plus);
  const double d = -params.nv.delta_plus + noise.detuning;
  const double g = params.gamma;

  const Complex r11 = xi(0), r12 = xi(1), r13 = xi(2);
  const Complex r21 = xi(3), r22 = xi(4), r23 = xi(5);
  const Complex r31 = xi(6), r32 = xi(7), r33 = xi(8);

  XiVector dxi;
  dxi(0) = -kI * (a * (r21 - r12) + b * (r31 - r13)) + g * (r22 - r11);
  dxi(1) = -kI * (a * (r22 - r11) + b * r32 - d * r12) + g * (r21 - r12);
  dxi(2) = -kI * (a * r23 + b * (r33 - r11) - d * r13) - 0.5 * g * r13;
  dxi(3) = -kI * (a * (r11 - r22) - b * r23 + d * r21) + g * (r12 - r21);
  dxi(4) = -kI * a * (r12 - r21) + g * (r11 - r22);
  dxi(5) = -kI * (a * r13 - b * r21) - 0.5 * g * r23;
  dxi(6) = -kI * (b * (r11 - r33) - a * r32 + d * r31) - 0.5 * g * r31;
  dxi(7) = -kI * (b * r12 - a * r31) - 0.5 * g * r32;
  dxi(8) = -kI * b * (r13 - r31);
  return dxi;
}

XiVector lindblad_rhs(const XiVector& xi, const LindbladParams& params, double t, double zeta) {
  FieldNoise noise;
  noise.detuning = zeta;
  return lindblad_rhs(xi, params, t, noise);
}

namespace {

double trace_drift(const XiVector& xi) { return std::abs(xi(0) + xi(4) + xi(8) - 1.0); }

FieldNoise current(const NoiseSources& src) {
  FieldNoise n;
  if (src.detuning) n.detuning = src.detuning->value();
  if (src.amp_plus) n.amp_plus = src.amp_plus->value();
  if (src.amp_minus) n.amp_minus = src.amp_minus->value();
  return n;
}

void advance(NoiseSources& src, double dt) {
  if (src.detuning) src.detuning->step(dt);
  if (src.amp_plus) src.amp_plus->step(dt);
  if (src.amp_minus) src.amp_minus->step(dt);
}

}  // namespace

LindbladTrace propagate_lindblad(const LindbladParams& params, const DensityMatrix& rho0,
                                 double t_max, const LindbladOptions& options,
                                 NoiseSources noise) {
  if (!(params.gamma >= 0.0)) throw ConfigError("lindblad.gamma must be >= 0");
  if (!(options.dt > 0.0)) throw ConfigError("simulation.dt must be positive");
  if (!(t_max >= 0.0)) throw ConfigError("simulation.t_max must be non-negative");
  if (options.sample_every < 1) throw ConfigError("simulation.sample_every must be >= 1");
  if (rho0.trace_residual() > kTraceTolerance)
    throw StateError("initial density matrix does not have unit trace");
  if (rho0.hermiticity_residual() > kHermiticityTolerance)
    throw StateError("initial density matrix is not Hermitian");

  const double dt = options.dt;
  const std::int64_t steps = std::llround(t_max / dt);

  LindbladTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(steps / options.sample_every + 2));
  bool warned = false;

  XiVector xi = to_xi(rho0.matrix());

  auto record = [&](double t, const FieldNoise& fn) {
    const DensityMatrix rho(from_xi(xi));
    trace.max_hermiticity_residual =
        std::max(trace.max_hermiticity_residual, rho.hermiticity_residual());
    const Vector3d eig = spectrum(rho);
    trace.min_eigenvalue = std::min(trace.min_eigenvalue, eig(0));
    if (eig(0) < -1e-6 && !warned) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "negative eigenvalue %.3e at t=%.6g (clamped for entropy)",
                    eig(0), t);
      trace.warnings.emplace_back(buf);
      warned = true;
    }
    LindbladSample s;
    s.t = t;
    s.rho = rho.matrix();
    s.purity = purity(rho);
    s.entropy = entropy_from_spectrum(eig, std::numeric_limits<double>::infinity());
    if (options.record_noise) s.noise = fn;
    trace.samples.push_back(std::move(s));
  };

  record(0.0, current(noise));
  for (std::int64_t k = 1; k <= steps; ++k) {
    const double t0 = static_cast<double>(k - 1) * dt;
    const FieldNoise fn = current(noise);
    const XiVector k1 = lindblad_rhs(xi, params, t0, fn);
    const XiVector k2 = lindblad_rhs(xi + 0.5 * dt * k1, params, t0 + 0.5 * dt, fn);
    const XiVector k3 = lindblad_rhs(xi + 0.5 * dt * k2, params, t0 + 0.5 * dt, fn);
    const XiVector k4 = lindblad_rhs(xi + dt * k3, params, t0 + dt, fn);
    xi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    advance(noise, dt);

    const double t = static_cast<double>(k) * dt;
    const double drift = trace_drift(xi);
    trace.max_trace_drift = std::max(trace.max_trace_drift, drift);
    if (!(drift <= 1e-6)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "trace drift %.3e exceeds 1e-6", drift);
      throw IntegrationError(buf, t);
    }
    if (k % options.sample_every == 0 || k == steps) record(t, current(noise));
  }
  return trace;
}

}  // namespace nvccd
