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

#include "nvccd/run.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "nvccd/error.hpp"

#ifndef NVCCD_VERSION
#define NVCCD_VERSION "0.0.0"
#endif

namespace nvccd {

std::string version() { return NVCCD_VERSION; }

namespace {

// Appends one CSV row of %.12g fields and an optional trailing label.
class Rows {
 public:
  explicit Rows(std::string& out) : out_(out) {}

  void row(std::initializer_list<double> values, const std::string* label = nullptr) {
    bool first = true;
    for (double v : values) {
      if (!first) out_ += ',';
      first = false;
      std::snprintf(buf_, sizeof buf_, "%.12g", v);
      out_ += buf_;
    }
    if (label) {
      out_ += ',';
      out_ += *label;
    }
    out_ += '\n';
  }

 private:
  std::string& out_;
  char buf_[32];
};

void header(std::string& out, const char* cols, bool label) {
  out += cols;
  if (label) out += ",label";
  out += '\n';
}

void run_evolve(const Scenario& s, const std::string* label, std::string& csv) {
  UnitaryOptions opts;
  opts.dt = s.dt;
  opts.sample_every = s.sample_every;
  const UnitaryTrace tr =
      propagate(s.backend, make_hamiltonian(s.lindblad.nv), s.t_max, QutritState{}, opts);
  Rows rows(csv);
  for (const auto& p : tr.samples)
    rows.row({p.t, p.populations(0), p.populations(1), p.populations(2), p.norm_drift,
              p.unitarity_residual},
             label);
}

void noise_rows(std::string& out, double t, std::size_t k, const FieldNoise& n,
                const std::string* label) {
  Rows rows(out);
  rows.row({t, static_cast<double>(k), n.detuning, n.amp_plus, n.amp_minus}, label);
}

Json seed_triple(const EnsembleConfig& c, std::uint64_t k) {
  return Json::array({derive_seed(c.master_seed, k, 0), derive_seed(c.master_seed, k, 1),
                      derive_seed(c.master_seed, k, 2)});
}

void run_lindblad(const Scenario& s, const std::string* label, RunArtifacts& art) {
  const EnsembleConfig ec = s.ensemble_config();
  LindbladOptions opts;
  opts.dt = s.dt;
  opts.sample_every = s.sample_every;
  opts.record_noise = s.write_noise;
  const LindbladTrace tr = propagate_lindblad(s.lindblad, DensityMatrix{}, s.t_max, opts,
                                              make_noise_sources(ec, 0));
  Rows rows(art.csv);
  for (const auto& p : tr.samples) {
    rows.row({p.t, p.purity, p.entropy}, label);
    if (s.write_noise) noise_rows(art.noise_csv, p.t, 0, p.noise, label);
  }
  for (const auto& w : tr.warnings) art.warnings.push_back((label ? *label + ": " : "") + w);
  art.seeds[s.label.empty() ? "run" : s.label] = Json::array({seed_triple(ec, 0)});
}

EnsembleResult run_ensemble_scenario(const Scenario& s, const std::string* label, int workers,
                                     RunArtifacts& art) {
  const EnsembleConfig ec = s.ensemble_config();
  EnsembleResult r = run_ensemble(ec, workers);
  Rows rows(art.csv);
  for (std::size_t i = 0; i < r.time.size(); ++i)
    rows.row({r.time[i], r.mean_purity[i], r.mean_entropy[i], r.std_err_purity[i],
              r.std_err_entropy[i]},
             label);
  if (s.write_noise)
    for (std::size_t k = 0; k < r.traces.size(); ++k)
      for (std::size_t i = 0; i < r.traces[k].noise.size(); ++i)
        noise_rows(art.noise_csv, r.time[i], k, r.traces[k].noise[i], label);
  Json seeds = Json::array();
  for (const auto& t : r.seeds) seeds.push_back(Json::array({t[0], t[1], t[2]}));
  art.seeds[s.label.empty() ? "run" : s.label] = std::move(seeds);
  for (const auto& w : r.warnings) art.warnings.push_back((label ? *label + ": " : "") + w);
  r.traces.clear();
  return r;
}

void run_oracle(const Scenario& s, int workers, RunArtifacts& art) {
  const ProtectionSuite suite = run_protection_suite(s.twolevel, workers);
  const std::pair<const char*, const LeakageResult*> curves[] = {
      {"bath-order1-sx", &suite.bath_driven},
      {"bath-undriven-sx", &suite.bath_undriven},
      {"drive-order2-sy", &suite.drive_order2},
      {"drive-order1-sy", &suite.drive_order1},
  };
  Rows rows(art.csv);
  for (const auto& [name, res] : curves) {
    const std::string label = s.label.empty() ? name : s.label + "/" + name;
    for (std::size_t i = 0; i < res->time.size(); ++i)
      rows.row({res->time[i], res->mean_leakage[i], res->std_err[i]}, &label);
  }
  art.report += suite.report();
  art.passed = art.passed && suite.pass();
  art.seeds[s.label.empty() ? "run" : s.label] = {{"master_seed", s.seed}};
}

}  // namespace

RunArtifacts execute(const RunConfig& cfg, int workers) {
  RunArtifacts art;
  const Mode mode = cfg.scenarios.front().mode;
  const bool label_col = cfg.comparison || mode == Mode::TwoLevelOracle;
  bool noise = false;
  for (const auto& s : cfg.scenarios) noise = noise || s.write_noise;

  switch (mode) {
    case Mode::Evolve:
      header(art.csv, "t,pop1,pop2,pop3,norm_drift,unitarity_residual", label_col);
      break;
    case Mode::Lindblad:
      header(art.csv, "t,purity,entropy", label_col);
      break;
    case Mode::Ensemble:
      header(art.csv, "t,purity,entropy,std_err_purity,std_err_entropy", label_col);
      break;
    case Mode::TwoLevelOracle:
      art.csv += "t,leakage,std_err,label\n";
      break;
  }
  if (noise && (mode == Mode::Lindblad || mode == Mode::Ensemble))
    header(art.noise_csv, "t,realization,bath,mw_plus,mw_minus", label_col);

  std::vector<EnsembleResult> ensembles;
  std::vector<std::string> labels;
  for (const auto& s : cfg.scenarios) {
    const std::string* label = label_col ? &s.label : nullptr;
    switch (mode) {
      case Mode::Evolve:
        run_evolve(s, label, art.csv);
        break;
      case Mode::Lindblad:
        run_lindblad(s, label, art);
        break;
      case Mode::Ensemble:
        ensembles.push_back(run_ensemble_scenario(s, label, workers, art));
        labels.push_back(s.label);
        break;
      case Mode::TwoLevelOracle:
        run_oracle(s, workers, art);
        break;
    }
  }
  if (ensembles.size() > 1) {
    if (ensembles.front().time.size() >= 4)
      art.report += coherence_ordering_report(ensembles, labels).summary();
    else
      art.warnings.push_back("ordering report skipped: fewer than 4 samples per run");
  }
  return art;
}

Json make_manifest(const RunConfig& cfg, const RunArtifacts& art, double wall_seconds) {
  Json m = cfg.document;
  Json info;
  info["version"] = version();
  if (!cfg.figure.empty()) info["figure"] = cfg.figure;
  info["wall_time_s"] = wall_seconds;
  info["outputs"] = {{"csv", cfg.output_path}};
  if (!art.noise_csv.empty()) info["outputs"]["noise_csv"] = noise_path(cfg.output_path);
  info["seeds"] = art.seeds;
  info["warnings"] = art.warnings;
  if (!art.report.empty()) info["report"] = art.report;
  m["manifest"] = std::move(info);
  return m;
}

namespace {

std::string stem(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return path.substr(0, dot);
  return path;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace

std::string manifest_path(const std::string& csv_path) { return stem(csv_path) + ".manifest.json"; }
std::string noise_path(const std::string& csv_path) { return stem(csv_path) + ".noise.csv"; }

int resolve_workers(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw ConfigError("--workers must be >= 1");
    return *flag;
  }
  if (const char* env = std::getenv("NVCCD_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw ConfigError("NVCCD_WORKERS must be a positive integer, got '" + std::string(env) + "'");
    return static_cast<int>(v);
  }
  return 1;
}

int run_and_write(const RunConfig& cfg, int workers, std::ostream& log) {
  for (const auto& w : cfg.warnings) log << "warning: " << w << '\n';
  const auto start = std::chrono::steady_clock::now();
  const RunArtifacts art = execute(cfg, workers);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_file(cfg.output_path, art.csv);
  if (!art.noise_csv.empty()) write_file(noise_path(cfg.output_path), art.noise_csv);
  write_file(manifest_path(cfg.output_path), make_manifest(cfg, art, wall).dump(2) + "\n");

  for (const auto& w : art.warnings) log << "warning: " << w << '\n';
  if (!art.report.empty()) log << art.report;
  log << "wrote " << cfg.output_path << " and " << manifest_path(cfg.output_path) << '\n';
  return art.passed ? 0 : 1;
}

}  // namespace nvccd
