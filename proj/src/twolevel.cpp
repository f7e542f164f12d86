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

#include "nvccd/twolevel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "nvccd/error.hpp"
#include "nvccd/noise.hpp"

namespace nvccd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Matrix2c pauli_x() {
  Matrix2c m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2c pauli_y() {
  Matrix2c m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Matrix2c pauli_z() {
  Matrix2c m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix2c lab_frame_hamiltonian(const TwoLevelParams& p, double t, const TwoLevelNoise& noise) {
  double drive = 0.0;
  if (p.drive_order >= 1) drive += p.omega1 * (1.0 + noise.zeta1) * std::cos(p.omega * t);
  if (p.drive_order >= 2)
    drive += p.omega2 * (1.0 + noise.zeta2) * std::cos(p.omega * t + 0.5 * kPi) *
             std::cos(p.omega1 * t);
  return 0.5 * (p.omega + noise.zeta_b) * pauli_z() + drive * pauli_x();
}

Matrix2c rwa_effective_hamiltonian(const TwoLevelParams& p, int order, const TwoLevelNoise& noise) {
  if (order == 1)
    return 0.5 * p.omega1 * (1.0 + noise.zeta1) * pauli_x() + 0.5 * noise.zeta_b * pauli_z();
  if (order == 2)
    return 0.5 * p.omega2 * (1.0 + noise.zeta2) * pauli_y() +
           Matrix2c(0.5 * p.omega1 * noise.zeta1 * Matrix2c::Identity());
  throw ConfigError("two-level RWA Hamiltonian: order must be 1 or 2");
}

std::vector<std::string> validate(const TwoLevelParams& p) {
  std::vector<std::string> w;
  if (p.drive_order < 0 || p.drive_order > 2) w.push_back("drive order outside 0..2");
  if (p.omega1 > 0.1 * p.omega) w.push_back("RWA: omega1 is not small against omega");
  if (p.drive_order >= 2 && p.omega2 > 0.2 * p.omega1)
    w.push_back("RWA: omega2 is not small against omega1");
  return w;
}

Vector2c dressed_state(DressedBasis basis) {
  const double s = 1.0 / std::sqrt(2.0);
  Vector2c v;
  if (basis == DressedBasis::X)
    v << s, s;
  else
    v << s, kI * s;
  return v;
}

Vector2c to_dressed_frame(const TwoLevelParams& p, DressedBasis basis, double t,
                          const Vector2c& psi_lab) {
  const double ph = 0.5 * p.omega * t;
  Vector2c v(std::exp(kI * ph) * psi_lab(0), std::exp(-kI * ph) * psi_lab(1));
  if (basis == DressedBasis::Y) {
    const double th = 0.5 * p.omega1 * t;
    const Complex c = std::cos(th), s = kI * std::sin(th);
    v = Vector2c(c * v(0) + s * v(1), s * v(0) + c * v(1)).eval();
  }
  return v;
}

namespace {

struct Trajectory {
  std::vector<double> leakage;
  std::vector<double> time;
};

Trajectory run_trajectory(const LeakageConfig& cfg, std::uint64_t k) {
  const auto seed = [&](std::uint64_t s) { return derive_seed(cfg.master_seed, k, s); };
  std::optional<OUProcess> zb, z1, z2;
  if (cfg.bath_intensity > 0.0) zb = OUProcess::from_intensity(cfg.bath_intensity, cfg.tau, seed(0));
  if (cfg.drive1_intensity > 0.0)
    z1 = OUProcess::from_intensity(cfg.drive1_intensity, cfg.tau, seed(1));
  if (cfg.drive2_intensity > 0.0)
    z2 = OUProcess::from_intensity(cfg.drive2_intensity, cfg.tau, seed(2));

  const Vector2c ref = dressed_state(cfg.basis);
  Vector2c psi = ref;
  const double dt = cfg.dt;
  const std::int64_t steps = std::llround(cfg.t_max / dt);
  Trajectory tr;
  tr.leakage.push_back(0.0);
  tr.time.push_back(0.0);
  for (std::int64_t n = 1; n <= steps; ++n) {
    const double t = static_cast<double>(n - 1) * dt;
    TwoLevelNoise noise;
    if (zb) noise.zeta_b = zb->value();
    if (z1) noise.zeta1 = z1->value();
    if (z2) noise.zeta2 = z2->value();
    const Matrix2c h0 = lab_frame_hamiltonian(cfg.params, t, noise);
    const Matrix2c hm = lab_frame_hamiltonian(cfg.params, t + 0.5 * dt, noise);
    const Matrix2c h1 = lab_frame_hamiltonian(cfg.params, t + dt, noise);
    const Vector2c k1 = -kI * (h0 * psi);
    const Vector2c k2 = -kI * (hm * (psi + 0.5 * dt * k1));
    const Vector2c k3 = -kI * (hm * (psi + 0.5 * dt * k2));
    const Vector2c k4 = -kI * (h1 * (psi + dt * k3));
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (zb) zb->step(dt);
    if (z1) z1->step(dt);
    if (z2) z2->step(dt);
    if (!std::isfinite(psi.squaredNorm())) throw IntegrationError("two-level state diverged", t + dt);
    if (n % cfg.sample_every == 0 || n == steps) {
      const double tt = static_cast<double>(n) * dt;
      const Vector2c v = to_dressed_frame(cfg.params, cfg.basis, tt, psi);
      tr.leakage.push_back(1.0 - std::norm(ref.dot(v)));
      tr.time.push_back(tt);
    }
  }
  return tr;
}

}  // namespace

LeakageResult dressed_population_leakage(const LeakageConfig& cfg, int workers) {
  if (cfg.n_realizations < 1) throw ConfigError("two-level: realizations must be >= 1");
  if (!(cfg.dt > 0.0)) throw ConfigError("two-level: dt must be positive");
  if (!(cfg.t_max > 0.0)) throw ConfigError("two-level: t_max must be positive");
  if (cfg.sample_every < 1) throw ConfigError("two-level: sample_every must be >= 1");
  const std::size_t n = static_cast<std::size_t>(cfg.n_realizations);
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), n));

  std::vector<Trajectory> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      try {
        out[k] = run_trajectory(cfg, k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!errors[k]) continue;
    std::string what;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      what = e.what();
    }
    throw RealizationError("two-level realization " + std::to_string(k) + " failed (master seed " +
                               std::to_string(cfg.master_seed) + "): " + what,
                           k, cfg.master_seed);
  }

  LeakageResult res;
  res.time = out[0].time;
  const std::size_t m = res.time.size();
  res.mean_leakage.assign(m, 0.0);
  res.std_err.assign(m, 0.0);
  const double nn = static_cast<double>(n);
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += out[k].leakage[i];
    const double mean = s / nn;
    res.mean_leakage[i] = mean;
    if (n > 1) {
      double v = 0.0;
      for (std::size_t k = 0; k < n; ++k) v += (out[k].leakage[i] - mean) * (out[k].leakage[i] - mean);
      res.std_err[i] = std::sqrt(v / (nn - 1.0) / nn);
    }
  }
  if (m > 1) {
    double s = 0.0;
    for (std::size_t i = 1; i < m; ++i) s += res.mean_leakage[i];
    res.time_average = s / static_cast<double>(m - 1);
  }
  return res;
}

double rwa_deviation(const TwoLevelParams& p, double dt) {
  TwoLevelParams q = p;
  q.drive_order = 1;
  const double period = 2.0 * kPi / q.omega1;
  const std::int64_t steps = std::llround(period / dt);
  Vector2c psi(1.0, 0.0);
  const Vector2c psi0 = psi;
  const Matrix2c sx = pauli_x();
  double worst = 0.0;
  for (std::int64_t n = 1; n <= steps; ++n) {
    const double t = static_cast<double>(n - 1) * dt;
    const Matrix2c h0 = lab_frame_hamiltonian(q, t);
    const Matrix2c hm = lab_frame_hamiltonian(q, t + 0.5 * dt);
    const Matrix2c h1 = lab_frame_hamiltonian(q, t + dt);
    const Vector2c k1 = -kI * (h0 * psi);
    const Vector2c k2 = -kI * (hm * (psi + 0.5 * dt * k1));
    const Vector2c k3 = -kI * (hm * (psi + 0.5 * dt * k2));
    const Vector2c k4 = -kI * (h1 * (psi + dt * k3));
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double tt = static_cast<double>(n) * dt;
    const Vector2c v = to_dressed_frame(q, DressedBasis::X, tt, psi);
    const double th = 0.5 * q.omega1 * tt;
    const Vector2c expect =
        (std::cos(th) * Matrix2c::Identity() - kI * std::sin(th) * sx) * psi0;
    worst = std::max(worst, 1.0 - std::norm(expect.dot(v)));
  }
  return worst;
}

ProtectionSuite run_protection_suite(const ProtectionSuiteConfig& cfg, int workers) {
  ProtectionSuite s;
  TwoLevelParams rwa = cfg.params;
  rwa.omega1 = std::min(rwa.omega1, 0.05 * rwa.omega);
  s.rwa_error = rwa_deviation(rwa, cfg.dt);
  s.rwa_pass = s.rwa_error <= 0.02;

  LeakageConfig lc;
  lc.params = cfg.params;
  lc.tau = cfg.tau;
  lc.dt = cfg.dt;
  lc.master_seed = cfg.master_seed;

  lc.basis = DressedBasis::X;
  lc.bath_intensity = cfg.intensity;
  lc.t_max = cfg.bath_t_max;
  lc.n_realizations = cfg.bath_realizations;
  lc.params.drive_order = 1;
  s.bath_driven = dressed_population_leakage(lc, workers);
  lc.params.drive_order = 0;
  s.bath_undriven = dressed_population_leakage(lc, workers);
  s.bath_factor = s.bath_driven.time_average > 0.0
                      ? s.bath_undriven.time_average / s.bath_driven.time_average
                      : 0.0;
  s.bath_pass = s.bath_undriven.time_average >= 2.0 * s.bath_driven.time_average;

  lc.basis = DressedBasis::Y;
  lc.bath_intensity = 0.0;
  lc.drive1_intensity = cfg.intensity;
  lc.t_max = cfg.drive_t_max;
  lc.n_realizations = cfg.drive_realizations;
  lc.params.drive_order = 2;
  s.drive_order2 = dressed_population_leakage(lc, workers);
  lc.params.drive_order = 1;
  s.drive_order1 = dressed_population_leakage(lc, workers);
  s.drive_pass = s.drive_order2.time_average < s.drive_order1.time_average;
  return s;
}

std::string ProtectionSuite::report() const {
  char buf[512];
  std::ostringstream os;
  std::snprintf(buf, sizeof buf, "%s rwa validity: max infidelity %.4g (limit 0.02)\n",
                rwa_pass ? "PASS" : "FAIL", rwa_error);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "%s bath protection: leakage driven %.4g vs undriven %.4g (factor %.3g, need >= 2)\n",
                bath_pass ? "PASS" : "FAIL", bath_driven.time_average, bath_undriven.time_average,
                bath_factor);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "%s drive-noise protection: sy leakage order 2 %.4g vs order 1 %.4g (need <)\n",
                drive_pass ? "PASS" : "FAIL", drive_order2.time_average, drive_order1.time_average);
  os << buf;
  return os.str();
}

}  // namespace nvccd
