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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "nvccd/error.hpp"
#include "nvccd/noise.hpp"

using namespace nvccd;

namespace {

double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / v.size();
}

double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return s / (v.size() - 1);
}

// Stationary samples: run each of n independent processes for `burn` time.
std::vector<double> stationary(int n, double tau, double c, double dt, double burn, std::uint64_t base) {
  std::vector<double> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    OUProcess p(tau, c, derive_seed(base, k, 0));
    for (double t = 0; t < burn - 1e-9; t += dt) p.step(dt);
    out.push_back(p.value());
  }
  return out;
}

}  // namespace

TEST(OUProcess, StartsAtZeroAndZeroDiffusionStaysAtZero) {
  OUProcess p(25.0, 0.0, 1);
  EXPECT_EQ(p.value(), 0.0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(p.step(0.1), 0.0);
}

TEST(OUProcess, FromIntensityAlgebra) {
  const OUProcess a = OUProcess::from_intensity(0.25, 1.0, 0);
  EXPECT_DOUBLE_EQ(a.diffusion(), 0.5);
  EXPECT_DOUBLE_EQ(a.variance(), 0.25);
  EXPECT_DOUBLE_EQ(a.intensity(), 0.25);
  EXPECT_DOUBLE_EQ(OUProcess::from_intensity(0.001, 1.0, 0).variance(), 0.001);
  const OUProcess b = OUProcess::from_intensity(0.25, 25.0, 0);
  EXPECT_DOUBLE_EQ(b.variance() * b.tau(), 0.25);
  EXPECT_EQ(OUProcess::from_intensity(0.0, 3.0, 0).diffusion(), 0.0);
}

TEST(OUProcess, ConfigurationErrors) {
  EXPECT_THROW(OUProcess(0.0, 1.0, 0), ConfigError);
  EXPECT_THROW(OUProcess(-1.0, 1.0, 0), ConfigError);
  EXPECT_THROW(OUProcess::from_intensity(-0.1, 1.0, 0), ConfigError);
  OUProcess p(1.0, 1.0, 0);
  EXPECT_THROW(p.step(0.0), ConfigError);
}

TEST(OUProcess, SeededDeterminism) {
  OUProcess a(2.0, 0.3, 77), b(2.0, 0.3, 77), c(2.0, 0.3, 78);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.step(0.01);
    EXPECT_EQ(x, b.step(0.01));
    differs = differs || x != c.step(0.01);
  }
  EXPECT_TRUE(differs);
}

TEST(OUProcess, EnsembleMeanIsZero) {
  const auto v = stationary(10000, 1.0, 2.0, 0.5, 1.0, 3);
  const double se = std::sqrt(variance(v) / v.size());
  EXPECT_LT(std::abs(mean(v)), 3 * se);
}

TEST(OUProcess, StationaryVarianceAndAutocorrelation) {
  const double tau = 2.0, c = 0.6, s2 = c * tau / 2;
  const int n = 10000;
  std::vector<double> x0, prod;
  for (int k = 0; k < n; ++k) {
    OUProcess p(tau, c, derive_seed(9, k, 0));
    p.step(20 * tau);
    const double a = p.value();
    for (int i = 0; i < 10; ++i) p.step(tau / 10);
    x0.push_back(a);
    prod.push_back(a * p.value());
  }
  const double var_se = s2 * std::sqrt(2.0 / (n - 1));
  EXPECT_LT(std::abs(variance(x0) - s2), 3 * var_se);
  const double ac_se = std::sqrt(variance(prod) / n);
  EXPECT_LT(std::abs(mean(prod) - s2 * std::exp(-1.0)), 3 * ac_se);
}

TEST(OUProcess, HalfStepsMatchFullStepInDistribution) {
  const int n = 100000;
  const double tau = 1.0, c = 1.0, dt = 0.8;
  std::vector<double> full, half;
  for (int k = 0; k < n; ++k) {
    OUProcess a(tau, c, derive_seed(21, k, 0)), b(tau, c, derive_seed(21, k, 1));
    a.step(dt);
    a.step(dt);
    b.step(dt / 2);
    b.step(dt / 2);
    b.step(dt / 2);
    b.step(dt / 2);
    full.push_back(a.value());
    half.push_back(b.value());
  }
  const double expect = c * tau / 2 * (1 - std::exp(-2 * 2 * dt / tau));
  const double se = expect * std::sqrt(2.0 / (n - 1));
  EXPECT_LT(std::abs(variance(full) - expect), 3 * se);
  EXPECT_LT(std::abs(variance(half) - expect), 3 * se);
  EXPECT_LT(std::abs(variance(full) - variance(half)), 3 * std::sqrt(2.0) * se);
  EXPECT_LT(std::abs(mean(full) - mean(half)), 3 * std::sqrt(2 * expect / n));
}

TEST(OUProcess, StationaryDistributionPassesKolmogorovSmirnov) {
  const double tau = 1.0, c = 2.0, sigma = std::sqrt(c * tau / 2);
  auto v = stationary(10000, tau, c, 0.25, 10.0, 5);
  std::sort(v.begin(), v.end());
  double d = 0.0;
  const double n = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double cdf = 0.5 * std::erfc(-v[i] / (sigma * std::sqrt(2.0)));
    d = std::max({d, std::abs(cdf - i / n), std::abs(cdf - (i + 1) / n)});
  }
  EXPECT_LT(d, 1.628 / std::sqrt(n));
}

TEST(DeriveSeed, DistinctAcrossInputs) {
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 0), derive_seed(1, 2, 1));
  EXPECT_NE(derive_seed(1, 2, 0), derive_seed(1, 3, 0));
  EXPECT_NE(derive_seed(1, 2, 0), derive_seed(2, 2, 0));
}
