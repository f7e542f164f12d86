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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nvccd::oracle {

Matrix3c expm_hermitian(const Matrix3c& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix3c> es(h);
  Eigen::Vector3cd phase;
  for (int i = 0; i < 3; ++i) phase(i) = std::exp(Complex(0.0, -es.eigenvalues()(i) * t));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix3c master_equation_rhs(const Matrix3c& rho, const Matrix3c& h, double gamma) {
  Matrix3c l = Matrix3c::Zero();
  l(0, 1) = l(1, 0) = std::sqrt(gamma);
  const Matrix3c ll = l.adjoint() * l;
  const Complex i(0.0, 1.0);
  return -i * (h * rho - rho * h) + l * rho * l.adjoint() - 0.5 * (ll * rho + rho * ll);
}

std::vector<Vector3c> schrodinger_rk4(const HamiltonianFn& h, const Vector3c& psi0, double t_max,
                                      double dt, int sample_every) {
  const Complex i(0.0, 1.0);
  const long steps = std::lround(t_max / dt);
  std::vector<Vector3c> out{psi0};
  Vector3c psi = psi0;
  for (long k = 0; k < steps; ++k) {
    const double t = k * dt;
    const Matrix3c h0 = h(t), hm = h(t + dt / 2), h1 = h(t + dt);
    const Vector3c k1 = -i * h0 * psi;
    const Vector3c k2 = -i * hm * (psi + dt / 2 * k1);
    const Vector3c k3 = -i * hm * (psi + dt / 2 * k2);
    const Vector3c k4 = -i * h1 * (psi + dt * k3);
    psi += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((k + 1) % sample_every == 0 || k + 1 == steps) out.push_back(psi);
  }
  return out;
}

Matrix3c random_hermitian(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  Matrix3c a;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = Complex(n(rng), n(rng));
  return 0.5 * (a + a.adjoint());
}

Matrix3c random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix3c a;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = Complex(n(rng), n(rng));
  Matrix3c rho = a * a.adjoint();
  return rho / rho.trace().real();
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j);
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double tail_mean(const std::vector<double>& t, const std::vector<double>& v, double t_from) {
  double s = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= t_from - 1e-12) {
      s += v[i];
      ++n;
    }
  return n ? s / n : 0.0;
}

}  // namespace nvccd::oracle
