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

#include "nvccd/noise.hpp"

#include <cmath>

#include "nvccd/error.hpp"

namespace nvccd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t realization,
                          std::uint64_t source) {
  return splitmix64(splitmix64(splitmix64(master_seed) ^ realization) ^ source);
}

OUProcess::OUProcess(double tau, double c, std::uint64_t seed)
    : tau_(tau), c_(c), seed_(seed), rng_(seed) {
  if (!(tau > 0.0)) throw ConfigError("OU process: tau must be positive");
  if (!(c >= 0.0)) throw ConfigError("OU process: diffusion constant must be non-negative");
}

OUProcess OUProcess::from_intensity(double intensity, double tau, std::uint64_t seed) {
  if (!(intensity >= 0.0)) throw ConfigError("OU process: intensity must be non-negative");
  if (!(tau > 0.0)) throw ConfigError("OU process: tau must be positive");
  return OUProcess(tau, 2.0 * intensity / (tau * tau), seed);
}

double OUProcess::step(double dt) {
  if (!(dt > 0.0)) throw ConfigError("OU process: dt must be positive");
  if (dt != cached_dt_) {
    decay_ = std::exp(-dt / tau_);
    spread_ = std::sqrt(0.5 * c_ * tau_ * (1.0 - std::exp(-2.0 * dt / tau_)));
    cached_dt_ = dt;
  }
  value_ = value_ * decay_ + spread_ * normal_(rng_);
  return value_;
}

}  // namespace nvccd
