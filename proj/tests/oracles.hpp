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

// Independent reference computations used by the tests. None of these call
// into the propagators they are used to check.

#pragma once

#include <random>
#include <vector>

#include "nvccd/hamiltonian.hpp"
#include "nvccd/qutrit.hpp"

namespace nvccd::oracle {

/// exp(-i H t) from the Hermitian eigendecomposition.
Matrix3c expm_hermitian(const Matrix3c& h, double t);

/// -i[H, rho] + Gamma (l rho l - 1/2 {l l, rho}), l the first Gell-Mann matrix.
Matrix3c master_equation_rhs(const Matrix3c& rho, const Matrix3c& h, double gamma);

/// Plain RK4 on i dpsi/dt = H(t) psi, sampled every `sample_every` steps.
std::vector<Vector3c> schrodinger_rk4(const HamiltonianFn& h, const Vector3c& psi0, double t_max,
                                      double dt, int sample_every);

/// Entries of the real and imaginary parts drawn from N(0, scale^2).
Matrix3c random_hermitian(std::mt19937_64& rng, double scale = 1.0);

/// Random full-rank density matrix.
Matrix3c random_density(std::mt19937_64& rng);

/// Spearman rank correlation (average ranks for ties).
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Mean of v over indices with t[i] >= t_from.
double tail_mean(const std::vector<double>& t, const std::vector<double>& v, double t_from);

}  // namespace nvccd::oracle
