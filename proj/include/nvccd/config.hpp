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

// Run configuration.
//
// A configuration is a JSON document with sections mirroring the modules:
//
//   {
//     "mode": "evolve" | "lindblad" | "ensemble" | "oracle-2lvl",
//     "backend": "block-decomposition" | "direct",
//     "figure": "fig2" | ... | "fig8",
//     "simulation": {"t_max", "dt", "sample_every", "seed"},
//     "hamiltonian": {"delta_plus"},
//     "drive": {"order", "plus": {...}, "minus": {...}},
//     "lindblad": {"gamma"},
//     "noise": {"bath_intensity", "mw_intensity", "bath_tau", "mw_tau",
//               "write_traces"},
//     "ensemble": {"realizations", "average_rho_first"},
//     "twolevel": {...},
//     "output": {"path"},
//     "variants": [{"label": ..., "set": {<partial document>}}],
//     "manifest": {...}    // written by runs, ignored on input
//   }
//
// Resolution order: figure preset, then the file, then command-line flags.
// If an explicit key collides with a key the preset varies, the preset's
// variants are dropped and a single run is made.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nvccd/ensemble.hpp"
#include "nvccd/twolevel.hpp"
#include "nvccd/unitary.hpp"

namespace nvccd {

using Json = nlohmann::json;

enum class Mode { Evolve, Lindblad, Ensemble, TwoLevelOracle };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// One fully typed simulation (the base document or one variant of it).
struct Scenario {
  std::string label;
  Mode mode = Mode::Evolve;
  Backend backend = Backend::BlockDecomposition;
  double t_max = 0.0;
  double dt = 1e-3;
  int sample_every = 100;
  std::uint64_t seed = 0;
  LindbladParams lindblad;  // lindblad.nv holds the Hamiltonian parameters
  double bath_intensity = 0.0;
  double mw_intensity = 0.0;
  double bath_tau = 25.0;
  double mw_tau = 25.0;
  bool write_noise = false;
  int realizations = 1;
  bool average_rho_first = false;
  ProtectionSuiteConfig twolevel;

  EnsembleConfig ensemble_config() const;
};

struct RunConfig {
  /// Resolved document: no "figure" key, variants explicit. Running this
  /// document again yields the same outputs.
  Json document;
  std::string figure;
  std::string output_path;
  std::vector<Scenario> scenarios;
  std::vector<std::string> warnings;
  /// True when the outputs carry a label column.
  bool comparison = false;
};

/// Preset document for a figure name. Throws ConfigError for unknown names.
Json figure_preset(std::string_view name);
std::vector<std::string> figure_names();

/// Resolve preset + file + flags. `file` and `flags` may be null/empty.
/// The preset name is taken from flags, else the file.
RunConfig resolve_config(const Json& file, const Json& flags);

/// Parse a JSON config file. Throws ConfigError on I/O or syntax errors.
Json load_config_file(const std::string& path);

/// "a.b.c=value" -> {"a": {"b": {"c": value}}}; value parsed as JSON when
/// possible, otherwise taken as a string.
Json assignment_patch(std::string_view assignment);

}  // namespace nvccd
