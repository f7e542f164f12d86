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

#include "nvccd/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "nvccd/error.hpp"

namespace nvccd {

namespace {

constexpr double kOffBlockTolerance = 1e-6;

std::int64_t step_count(double t_max, double dt) {
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(t_max >= 0.0)) throw ConfigError("t_max must be non-negative");
  return static_cast<std::int64_t>(std::llround(t_max / dt));
}

void check_initial_state(const QutritState& psi0) {
  if (std::abs(psi0.norm_squared() - 1.0) > 1e-9) {
    throw ConfigError("initial state must be normalized");
  }
}

void record_sample(UnitaryTrace& trace, double t, const Matrix3c& u, const QutritState& psi0) {
  UnitarySample s;
  s.t = t;
  s.state = QutritState(u * psi0.amplitudes());
  s.populations = populations(s.state);
  s.norm_drift = std::abs(s.state.norm_squared() - 1.0);
  s.unitarity_residual = unitarity_residual(u);
  trace.max_norm_drift = std::max(trace.max_norm_drift, s.norm_drift);
  trace.max_unitarity_residual = std::max(trace.max_unitarity_residual, s.unitarity_residual);
  trace.samples.push_back(std::move(s));
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::Direct ? "direct" : "block-decomposition";
}

Backend parse_backend(std::string_view text) {
  if (text == "block" || text == "block-decomposition") return Backend::BlockDecomposition;
  if (text == "direct") return Backend::Direct;
  throw ConfigError("unknown backend '" + std::string(text) +
                    "' (expected block-decomposition or direct)");
}

BlockPartition partition(const Matrix3c& h) {
  return {h.topLeftCorner<2, 2>(), h.topRightCorner<2, 1>(), h(2, 2)};
}

Vector2c z_rhs(const Vector2c& z, const Matrix3c& h) {
  const BlockPartition p = partition(h);
  const Complex vz = p.coupling.dot(z);  // V^dagger z
  return -kI * (p.upper * z + p.coupling - z * (vz + p.lower));
}

Vector2c w_from_z(const Vector2c& z) {
  return -z / (1.0 + z.squaredNorm());
}

Matrix3c triangular_factor(const Vector2c& z, const Vector2c& w) {
  Matrix3c t;
  t.topLeftCorner<2, 2>() = Matrix2c::Identity() + z * w.adjoint();
  t.topRightCorner<2, 1>() = z;
  t.bottomLeftCorner<1, 2>() = w.adjoint();
  t(2, 2) = 1.0;
  return t;
}

Matrix3c triangular_factor_inverse(const Vector2c& z, const Vector2c& w) {
  Matrix3c t;
  t.topLeftCorner<2, 2>() = Matrix2c::Identity();
  t.topRightCorner<2, 1>() = -z;
  t.bottomLeftCorner<1, 2>() = -w.adjoint();
  t(2, 2) = 1.0 + w.dot(z);
  return t;
}

Matrix2c hermitian_sqrt2(const Matrix2c& a) {
  const double det = a.determinant().real();
  const double tr = a.trace().real();
  if (!(det > 0.0) || !(tr > 0.0)) {
    throw IntegrationError("hermitian_sqrt2: matrix is not positive definite", 0.0);
  }
  const double s = std::sqrt(det);
  return (a + s * Matrix2c::Identity()) / std::sqrt(tr + 2.0 * s);
}

EffectiveHamiltonian effective_hamiltonian(const Vector2c& z, const Vector2c& w,
                                           const Vector2c& zdot, const Matrix3c& h) {
  // dw/dt from w = -z s, s = 1 / (1 + z^dagger z).
  const double s = 1.0 / (1.0 + z.squaredNorm());
  const double sdot = -2.0 * s * s * z.dot(zdot).real();
  const Vector2c wdot = -zdot * s - z * sdot;

  Matrix3c tdot = Matrix3c::Zero();
  tdot.topLeftCorner<2, 2>() = zdot * w.adjoint() + z * wdot.adjoint();
  tdot.topRightCorner<2, 1>() = zdot;
  tdot.bottomLeftCorner<1, 2>() = wdot.adjoint();

  const Matrix3c t = triangular_factor(z, w);
  const Matrix3c t_inv = triangular_factor_inverse(z, w);
  const Matrix3c full = t_inv * h * t - kI * (t_inv * tdot);

  const double scale = std::max(1.0, z.squaredNorm());
  const double residue = std::max(full.topRightCorner<2, 1>().cwiseAbs().maxCoeff(),
                                  full.bottomLeftCorner<1, 2>().cwiseAbs().maxCoeff()) /
                         scale;
  if (residue > kOffBlockTolerance) {
    std::ostringstream msg;
    msg << "effective Hamiltonian off-block residue " << residue
        << " exceeds tolerance; z is inconsistent with the Riccati flow";
    throw IntegrationError(msg.str(), 0.0);
  }

  EffectiveHamiltonian out{Matrix3c::Zero(), residue};
  out.matrix.topLeftCorner<2, 2>() = full.topLeftCorner<2, 2>();
  out.matrix(2, 2) = full(2, 2);
  return out;
}

// --------------------------------------------------------------------------
// BlockPropagator

BlockPropagator::BlockPropagator(HamiltonianFn hamiltonian, UnitaryOptions options)
    : hamiltonian_(std::move(hamiltonian)), options_(options) {
  if (!(options_.dt > 0.0)) throw ConfigError("dt must be positive");
  if (options_.max_substeps < 1) throw ConfigError("max_substeps must be >= 1");
}

BlockPropagator::State BlockPropagator::rhs(double t, const State& s) const {
  const Matrix3c h = hamiltonian_(t);
  const Vector2c zdot = z_rhs(s.z, h);
  const EffectiveHamiltonian heff = effective_hamiltonian(s.z, w_from_z(s.z), zdot, h);
  return {zdot, -kI * (heff.matrix.topLeftCorner<2, 2>() * s.upper),
          -kI * heff.matrix(2, 2) * s.lower};
}

void BlockPropagator::rk4(double t, double h) {
  const State y{z_, upper_, lower_};
  auto shifted = [&](const State& k, double f) {
    return State{y.z + f * k.z, y.upper + f * k.upper, y.lower + f * k.lower};
  };
  const State k1 = rhs(t, y);
  const State k2 = rhs(t + 0.5 * h, shifted(k1, 0.5 * h));
  const State k3 = rhs(t + 0.5 * h, shifted(k2, 0.5 * h));
  const State k4 = rhs(t + h, shifted(k3, h));
  const double c = h / 6.0;
  z_ = y.z + c * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
  upper_ = y.upper + c * (k1.upper + 2.0 * k2.upper + 2.0 * k3.upper + k4.upper);
  lower_ = y.lower + c * (k1.lower + 2.0 * k2.lower + 2.0 * k3.lower + k4.lower);
}

void BlockPropagator::step() {
  const double t0 = static_cast<double>(steps_) * options_.dt;
  const double zn = z_.norm();
  const int substeps =
      static_cast<int>(std::min<double>(options_.max_substeps, 1.0 + std::floor(zn)));
  const double h = options_.dt / substeps;
  for (int j = 0; j < substeps; ++j) {
    const double t = t0 + j * h;
    try {
      rk4(t, h);
    } catch (const IntegrationError& e) {
      throw IntegrationError(e.what(), t);
    }
    const double norm = z_.norm();
    if (!(norm <= options_.z_guard)) {
      std::ostringstream msg;
      msg << "Riccati blowup: |z| = " << norm << " exceeds guard " << options_.z_guard
          << " near t = " << t + h << " (try --backend direct)";
      throw RiccatiBlowupError(msg.str(), t + h, norm);
    }
  }
  ++steps_;
  time_ = static_cast<double>(steps_) * options_.dt;
}

Matrix3c BlockPropagator::block_factor() const {
  Matrix3c d = Matrix3c::Zero();
  d.topLeftCorner<2, 2>() = upper_;
  d(2, 2) = lower_;
  return d;
}

Matrix3c BlockPropagator::unitary_left() const {
  const double g2 = 1.0 / std::sqrt(1.0 + z_.squaredNorm());
  Matrix3c g = Matrix3c::Zero();
  g.topLeftCorner<2, 2>() = hermitian_sqrt2(Matrix2c::Identity() + z_ * z_.adjoint());
  g(2, 2) = g2;
  return triangular_factor(z_, w()) * g;
}

Matrix3c BlockPropagator::unitary_right() const {
  const double g2 = 1.0 / std::sqrt(1.0 + z_.squaredNorm());
  const Matrix2c g1 = hermitian_sqrt2(Matrix2c::Identity() + z_ * z_.adjoint());
  Matrix3c d = Matrix3c::Zero();
  d.topLeftCorner<2, 2>() = g1.inverse() * upper_;
  d(2, 2) = lower_ / g2;
  return d;
}

Matrix3c BlockPropagator::propagator() const {
  return unitary_left() * unitary_right();
}

// --------------------------------------------------------------------------
// Drivers

UnitaryTrace propagate_unitary(const HamiltonianFn& hamiltonian, double t_max,
                               const QutritState& psi0, const UnitaryOptions& options) {
  const std::int64_t n = step_count(t_max, options.dt);
  if (options.sample_every < 1) throw ConfigError("sample_every must be >= 1");
  check_initial_state(psi0);

  BlockPropagator prop(hamiltonian, options);
  UnitaryTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(n / options.sample_every + 2));
  record_sample(trace, 0.0, prop.propagator(), psi0);
  for (std::int64_t k = 1; k <= n; ++k) {
    prop.step();
    trace.max_z_norm = std::max(trace.max_z_norm, prop.z().norm());
    if (k % options.sample_every == 0 || k == n) {
      record_sample(trace, prop.time(), prop.propagator(), psi0);
    }
  }
  trace.final_propagator = prop.propagator();
  return trace;
}

UnitaryTrace propagate_unitary(const NVParams& params, double t_max, const QutritState& psi0,
                               const UnitaryOptions& options) {
  return propagate_unitary(make_hamiltonian(params), t_max, psi0, options);
}

UnitaryTrace propagate_direct(const HamiltonianFn& hamiltonian, double t_max,
                              const QutritState& psi0, const UnitaryOptions& options) {
  const std::int64_t n = step_count(t_max, options.dt);
  if (options.sample_every < 1) throw ConfigError("sample_every must be >= 1");
  check_initial_state(psi0);

  const double dt = options.dt;
  auto f = [&](double t, const Matrix3c& u) -> Matrix3c { return -kI * (hamiltonian(t) * u); };

  Matrix3c u = Matrix3c::Identity();
  UnitaryTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(n / options.sample_every + 2));
  record_sample(trace, 0.0, u, psi0);
  for (std::int64_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    const Matrix3c k1 = f(t, u);
    const Matrix3c k2 = f(t + 0.5 * dt, u + 0.5 * dt * k1);
    const Matrix3c k3 = f(t + 0.5 * dt, u + 0.5 * dt * k2);
    const Matrix3c k4 = f(t + dt, u + dt * k3);
    u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((k + 1) % options.sample_every == 0 || k + 1 == n) {
      record_sample(trace, static_cast<double>(k + 1) * dt, u, psi0);
    }
  }
  trace.final_propagator = u;
  return trace;
}

UnitaryTrace propagate(Backend backend, const HamiltonianFn& hamiltonian, double t_max,
                       const QutritState& psi0, const UnitaryOptions& options) {
  return backend == Backend::Direct ? propagate_direct(hamiltonian, t_max, psi0, options)
                                    : propagate_unitary(hamiltonian, t_max, psi0, options);
}

}  // namespace nvccd
