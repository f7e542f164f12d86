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

#include "nvccd/qutrit.hpp"

#include <cmath>
#include <sstream>

#include "nvccd/error.hpp"

namespace nvccd {

QutritState QutritState::basis(int level) {
  if (level < 0 || level > 2) {
    throw ConfigError("QutritState::basis: level must be 0, 1 or 2");
  }
  Vector3c c = Vector3c::Zero();
  c(level) = 1.0;
  return QutritState(c);
}

DensityMatrix DensityMatrix::pure(const QutritState& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::diagonal(double p0, double p1, double p2) {
  Matrix3c rho = Matrix3c::Zero();
  rho(0, 0) = p0;
  rho(1, 1) = p1;
  rho(2, 2) = p2;
  return DensityMatrix(rho);
}

double DensityMatrix::hermiticity_residual() const {
  return max_abs(rho_ - rho_.adjoint());
}

double unitarity_residual(const Matrix3c& u) {
  return max_abs(u.adjoint() * u - Matrix3c::Identity());
}

double purity(const DensityMatrix& rho) {
  if (rho.trace_residual() > kTraceTolerance) {
    std::ostringstream msg;
    msg << "purity: density matrix trace deviates from 1 by " << rho.trace_residual();
    throw StateError(msg.str());
  }
  return (rho.matrix() * rho.matrix()).trace().real();
}

Vector3d spectrum(const DensityMatrix& rho) {
  const Matrix3c h = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix3c> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double entropy_from_spectrum(const Vector3d& eigenvalues, double negative_tolerance) {
  static const double kLog3 = std::log(3.0);
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double lambda = eigenvalues(i);
    if (lambda < -negative_tolerance) {
      std::ostringstream msg;
      msg << "entropy: eigenvalue " << lambda << " violates positivity";
      throw PositivityError(msg.str(), lambda);
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  // Round-off can leave -0 or a tiny negative for pure states.
  return std::max(0.0, s / kLog3);
}

double entropy(const DensityMatrix& rho, double negative_tolerance) {
  return entropy_from_spectrum(spectrum(rho), negative_tolerance);
}

Vector3d populations(const QutritState& psi) {
  return psi.amplitudes().cwiseAbs2();
}

}  // namespace nvccd
