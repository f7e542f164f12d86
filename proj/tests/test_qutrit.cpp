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

#include <cmath>

#include "nvccd/error.hpp"
#include "nvccd/qutrit.hpp"

using namespace nvccd;

TEST(Observables, DiagonalSpotValues) {
  // Purity is sum p^2; entropy is -sum p log3 p, evaluated by hand.
  const DensityMatrix a = DensityMatrix::diagonal(0.0, 0.5, 0.5);
  EXPECT_NEAR(purity(a), 0.5, 1e-14);
  EXPECT_NEAR(entropy(a), std::log(2.0) / std::log(3.0), 1e-14);

  const DensityMatrix b = DensityMatrix::diagonal(0.4, 0.3, 0.3);
  EXPECT_NEAR(purity(b), 0.34, 1e-14);
  const double sb = -(0.4 * std::log(0.4) + 0.6 * std::log(0.3)) / std::log(3.0);
  EXPECT_NEAR(entropy(b), sb, 1e-14);

  const DensityMatrix c = DensityMatrix::diagonal(1.0 / 3, 1.0 / 3, 1.0 / 3);
  EXPECT_NEAR(purity(c), 1.0 / 3, 1e-14);
  EXPECT_NEAR(entropy(c), 1.0, 1e-14);
}

TEST(Observables, PureStateHasUnitPurityZeroEntropy) {
  Vector3c v(Complex(1, 1), Complex(0.5, -2), Complex(0, 0.3));
  const DensityMatrix rho = DensityMatrix::pure(QutritState(v).normalized());
  EXPECT_NEAR(purity(rho), 1.0, 1e-14);
  EXPECT_NEAR(entropy(rho), 0.0, 1e-7);
  EXPECT_GE(entropy(rho), 0.0);
}

TEST(Observables, EntropyIsUnitaryInvariant) {
  Matrix3c rho = Matrix3c::Zero();
  rho(0, 0) = 0.5; rho(1, 1) = 0.3; rho(2, 2) = 0.2;
  rho(0, 1) = Complex(0.1, 0.05); rho(1, 0) = std::conj(rho(0, 1));
  Matrix3c h = Matrix3c::Zero();
  h(0, 2) = h(2, 0) = 0.7; h(1, 1) = 0.3;
  Eigen::SelfAdjointEigenSolver<Matrix3c> es(h);
  Eigen::Vector3cd ph;
  for (int i = 0; i < 3; ++i) ph(i) = std::exp(Complex(0, -es.eigenvalues()(i) * 1.7));
  const Matrix3c u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  const DensityMatrix r0(rho), r1(u * rho * u.adjoint());
  EXPECT_NEAR(entropy(r0), entropy(r1), 1e-12);
  EXPECT_NEAR(purity(r0), purity(r1), 1e-12);
}

TEST(Observables, TraceViolationThrows) {
  EXPECT_THROW(purity(DensityMatrix::diagonal(0.5, 0.5, 0.1)), StateError);
}

TEST(Observables, NegativeEigenvalueHandling) {
  EXPECT_NEAR(entropy_from_spectrum(Vector3d(-1e-10, 0.5, 0.5)), std::log(2.0) / std::log(3.0),
              1e-12);
  try {
    entropy_from_spectrum(Vector3d(-1e-3, 0.5, 0.501));
    FAIL() << "expected PositivityError";
  } catch (const PositivityError& e) {
    EXPECT_DOUBLE_EQ(e.eigenvalue(), -1e-3);
  }
}

TEST(Observables, PurityAndEntropyBounds) {
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    const DensityMatrix rho = DensityMatrix::diagonal(p, (1 - p) * 0.7, (1 - p) * 0.3);
    EXPECT_GE(purity(rho), 1.0 / 3 - 1e-12);
    EXPECT_LE(purity(rho), 1.0 + 1e-12);
    EXPECT_GE(entropy(rho), 0.0);
    EXPECT_LE(entropy(rho), 1.0 + 1e-12);
  }
}

TEST(QutritState, BasisAndPopulations) {
  EXPECT_EQ(QutritState().amplitudes(), QutritState::basis(0).amplitudes());
  EXPECT_THROW(QutritState::basis(3), ConfigError);
  const QutritState psi(Vector3c(Complex(0.6, 0), Complex(0, 0.8), 0));
  const Vector3d p = populations(psi);
  EXPECT_NEAR(p(0), 0.36, 1e-15);
  EXPECT_NEAR(p(1), 0.64, 1e-15);
  EXPECT_NEAR(p.sum(), psi.norm_squared(), 1e-15);
}

TEST(DensityMatrix, Residuals) {
  Matrix3c m = Matrix3c::Identity() / 3.0;
  m(0, 1) = Complex(0.1, 0.2);
  m(1, 0) = Complex(0.1, 0.1);
  const DensityMatrix rho(m);
  EXPECT_NEAR(rho.hermiticity_residual(), std::abs(Complex(0, 0.3)), 1e-15);
  EXPECT_NEAR(rho.trace_residual(), 0.0, 1e-15);
}

TEST(Unitarity, Residual) {
  EXPECT_EQ(unitarity_residual(Matrix3c::Identity()), 0.0);
  EXPECT_NEAR(unitarity_residual(1.01 * Matrix3c::Identity()), 0.0201, 1e-12);
}
