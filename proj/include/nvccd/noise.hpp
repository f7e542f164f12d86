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

// Ornstein-Uhlenbeck noise with exact discretization:
//
//   z(t + dt) = z(t) e^{-dt/tau} + sqrt((c tau / 2)(1 - e^{-2 dt/tau})) n,
//
// n ~ N(0, 1), z(0) = 0. Stationary variance sigma^2 = c tau / 2,
// autocorrelation sigma^2 e^{-|t|/tau}, intensity I_n = sigma^2 tau.

#pragma once

#include <cstdint>
#include <random>

namespace nvccd {

/// Noise source identifiers used when deriving per-realization seeds.
enum class NoiseSource : std::uint64_t { Bath = 0, MicrowavePlus = 1, MicrowaveMinus = 2 };

/// Deterministic seed for (master, realization, source) via SplitMix64 mixing.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t realization,
                          std::uint64_t source);

class OUProcess {
 public:
  /// Throws ConfigError if tau <= 0 or c < 0.
  OUProcess(double tau, double c, std::uint64_t seed);

  /// Process with intensity I_n = sigma^2 tau, i.e. c = 2 I_n / tau^2.
  static OUProcess from_intensity(double intensity, double tau, std::uint64_t seed);

  /// Advance by dt and return the new sample. Throws ConfigError if dt <= 0.
  double step(double dt);

  double value() const noexcept { return value_; }
  double tau() const noexcept { return tau_; }
  double diffusion() const noexcept { return c_; }
  double variance() const noexcept { return 0.5 * c_ * tau_; }
  double intensity() const noexcept { return variance() * tau_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  double tau_;
  double c_;
  std::uint64_t seed_;
  double value_ = 0.0;
  // Cached coefficients for the most recent dt.
  double cached_dt_ = -1.0;
  double decay_ = 0.0;
  double spread_ = 0.0;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace nvccd
