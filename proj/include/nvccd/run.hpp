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

// Executes a resolved configuration and writes its artifacts.
//
// CSV layouts (12 significant digits, header row, long format):
//
//   evolve           t,pop1,pop2,pop3,norm_drift,unitarity_residual
//   lindblad         t,purity,entropy
//   ensemble         t,purity,entropy,std_err_purity,std_err_entropy
//   oracle-2lvl      t,leakage,std_err,label
//   noise traces     t,realization,bath,mw_plus,mw_minus
//
// Comparison runs append a trailing `label` column. Next to `out.csv` the
// run writes `out.manifest.json` (the resolved configuration plus seeds,
// version and timing; it can be fed back as a config) and, when noise
// traces are requested, `out.noise.csv`.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nvccd/config.hpp"

namespace nvccd {

struct RunArtifacts {
  std::string csv;
  std::string noise_csv;  // empty unless noise traces were requested
  std::string report;     // human-readable summary (orderings, pass/fail)
  Json seeds = Json::object();
  std::vector<std::string> warnings;
  bool passed = true;     // oracle-2lvl verdict; always true otherwise
};

/// Runs every scenario. Pure with respect to the filesystem.
RunArtifacts execute(const RunConfig& cfg, int workers = 1);

/// Manifest document for a finished run.
Json make_manifest(const RunConfig& cfg, const RunArtifacts& art, double wall_seconds);

std::string manifest_path(const std::string& csv_path);
std::string noise_path(const std::string& csv_path);

/// Worker count: `flag` if given, else NVCCD_WORKERS, else 1.
int resolve_workers(std::optional<int> flag);

/// Execute and write CSV, manifest and noise files. Returns the exit code
/// (0 on success, 1 if the two-level oracle reports a failure).
int run_and_write(const RunConfig& cfg, int workers, std::ostream& log);

std::string version();

}  // namespace nvccd
