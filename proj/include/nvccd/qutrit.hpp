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

// Fixed-size three-level algebra and coherence observables.
//
// Basis ordering throughout the library is |0>, |-1>, |+1> (indices 0, 1, 2),
// i.e. the NV ground state first and the two excited sublevels after it.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace nvccd {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;
using Vector3d = Eigen::Vector3d;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerances shared by the state types and observables.
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kHermiticityTolerance = 1e-9;
inline constexpr double kNegativeEigenvalueTolerance = 1e-8;

/// Pure state of the three-level system.
class QutritState {
 public:
  QutritState() : amplitudes_(Vector3c::Zero()) { amplitudes_(0) = 1.0; }
  explicit QutritState(const Vector3c& amplitudes) : amplitudes_(amplitudes) {}

  static QutritState basis(int level);

  const Vector3c& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](int i) const { return amplitudes_(i); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }
  QutritState normalized() const { return QutritState(amplitudes_.normalized()); }

 private:
  Vector3c amplitudes_;
};

/// 3x3 density matrix. Construction does not validate; the observables do.
class DensityMatrix {
 public:
  DensityMatrix() : rho_(Matrix3c::Zero()) { rho_(0, 0) = 1.0; }
  explicit DensityMatrix(const Matrix3c& rho) : rho_(rho) {}

  static DensityMatrix pure(const QutritState& psi);
  static DensityMatrix diagonal(double p0, double p1, double p2);

  const Matrix3c& matrix() const noexcept { return rho_; }
  Complex operator()(int i, int j) const { return rho_(i, j); }

  double trace_residual() const { return std::abs(rho_.trace() - 1.0); }
  double hermiticity_residual() const;

 private:
  Matrix3c rho_;
};

/// Largest absolute entry.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// max |U^dagger U - I|.
double unitarity_residual(const Matrix3c& u);

/// Tr(rho^2). Throws StateError if |Tr rho - 1| exceeds kTraceTolerance.
double purity(const DensityMatrix& rho);

/// Eigenvalues of the Hermitian part of rho, ascending.
Vector3d spectrum(const DensityMatrix& rho);

/// -Tr(rho log_3 rho) from the Hermitian eigendecomposition.
///
/// Eigenvalues in [-negative_tolerance, 0) are treated as zero; anything
/// lower throws PositivityError. 0 log 0 is taken as 0.
double entropy(const DensityMatrix& rho,
               double negative_tolerance = kNegativeEigenvalueTolerance);

/// Entropy of an explicit eigenvalue list (same clamping rules).
double entropy_from_spectrum(const Vector3d& eigenvalues,
                             double negative_tolerance = kNegativeEigenvalueTolerance);

/// (|C1|^2, |C2|^2, |C3|^2).
Vector3d populations(const QutritState& psi);

}  // namespace nvccd
