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

// Monte-Carlo averaging of noisy Lindblad trajectories.
//
// Realization k draws its bath process from derive_seed(master, k, 0) and
// its microwave processes from sources 1 (+ branch) and 2 (- branch). Each
// realization writes into its own pre-allocated slot and the reduction runs
// in realization order, so results do not depend on the worker count.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nvccd/lindblad.hpp"

namespace nvccd {

struct EnsembleConfig {
  int n_realizations = 1;
  std::uint64_t master_seed = 0;
  double bath_intensity = 0.0;
  double mw_intensity = 0.0;
  double bath_tau = 25.0;
  double mw_tau = 25.0;
  LindbladParams lindblad;
  DensityMatrix rho0;
  double t_max = 10.0;
  double dt = 1e-3;
  int sample_every = 100;
  /// Purity/entropy of the averaged state instead of averaged observables.
  bool average_rho_first = false;
  bool keep_traces = false;
  bool keep_noise = false;
};

struct RealizationTrace {
  std::vector<double> purity;
  std::vector<double> entropy;
  std::vector<FieldNoise> noise;  // only with keep_noise
};

struct EnsembleResult {
  std::vector<double> time;
  std::vector<double> mean_purity;
  std::vector<double> mean_entropy;
  std::vector<double> std_err_purity;   // zero with average_rho_first
  std::vector<double> std_err_entropy;
  /// Per realization: bath, + microwave, - microwave seeds.
  std::vector<std::array<std::uint64_t, 3>> seeds;
  std::vector<RealizationTrace> traces;
  std::vector<std::string> warnings;
};

/// Microwave noise is attached only when the drive is on.
NoiseSources make_noise_sources(const EnsembleConfig& cfg, std::uint64_t realization);

/// `workers` <= 0 selects std::thread::hardware_concurrency().
/// A failing realization aborts the run with RealizationError.
EnsembleResult run_ensemble(const EnsembleConfig& cfg, int workers = 1);

struct WindowRanking {
  double t_begin = 0.0;
  double t_end = 0.0;
  std::vector<std::size_t> by_purity;   // descending mean purity
  std::vector<std::size_t> by_entropy;  // ascending mean entropy
};

struct OrderingReport {
  std::vector<std::string> labels;
  std::vector<WindowRanking> windows;  // four quarters of the run
  /// Final-quarter window means and standard errors, per configuration.
  std::vector<double> final_purity, final_purity_se;
  std::vector<double> final_entropy, final_entropy_se;
  /// Adjacent pairs of the final-quarter ranking have non-overlapping
  /// +/-2 standard-error bands.
  bool purity_separated = false;
  bool entropy_separated = false;

  std::string summary() const;
};

/// Throws ConfigError when the results do not share a time grid.
OrderingReport coherence_ordering_report(const std::vector<EnsembleResult>& results,
                                         const std::vector<std::string>& labels);

}  // namespace nvccd
