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

// nvccd command-line front end.
//
//   nvccd evolve      --figure fig3 -o fig3.csv
//   nvccd lindblad    --figure fig4 --order 2 -o fig4_order2.csv
//   nvccd ensemble    --figure fig7 --realizations 200 --workers 8
//   nvccd oracle-2lvl -o leakage.csv
//   nvccd run         --config fig7.manifest.json

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nvccd/config.hpp"
#include "nvccd/error.hpp"
#include "nvccd/run.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> figure, backend, order, output;
  std::optional<double> t_max, dt, delta_plus, gamma;
  std::optional<double> bath_intensity, mw_intensity, bath_tau, mw_tau;
  std::optional<std::uint64_t> seed;
  std::optional<int> sample_every, realizations, workers;
  bool average_rho_first = false;
  bool noise_traces = false;
  bool print_config = false;
  std::vector<std::string> sets;
};

void add_options(CLI::App* app, Flags& f) {
  app->add_option("-c,--config", f.config, "JSON config or manifest file");
  app->add_option("--figure", f.figure, "Figure preset: fig2, fig3, fig4, fig5, fig7, fig8");
  app->add_option("--backend", f.backend, "block-decomposition (default) or direct");
  app->add_option("--t-max", f.t_max, "Final time");
  app->add_option("--dt", f.dt, "Integrator step");
  app->add_option("--sample-every", f.sample_every, "Steps between output samples");
  app->add_option("--seed", f.seed, "Master seed");
  app->add_option("--order", f.order, "Drive order: off, constant, 1, 2, 3");
  app->add_option("--delta-plus", f.delta_plus, "Detuning of the excited levels");
  app->add_option("--gamma", f.gamma, "Relaxation rate");
  app->add_option("--bath-intensity", f.bath_intensity, "Bath noise intensity");
  app->add_option("--mw-intensity", f.mw_intensity, "Microwave amplitude noise intensity");
  app->add_option("--bath-tau", f.bath_tau, "Bath noise correlation time");
  app->add_option("--mw-tau", f.mw_tau, "Microwave noise correlation time");
  app->add_option("--realizations", f.realizations, "Ensemble size");
  app->add_flag("--average-rho-first", f.average_rho_first,
                "Observables of the averaged state instead of averaged observables");
  app->add_flag("--noise-traces", f.noise_traces, "Also write the sampled noise to <out>.noise.csv");
  app->add_option("-o,--output", f.output, "Output CSV path");
  app->add_option("--workers", f.workers, "Worker threads (default: NVCCD_WORKERS or 1)");
  app->add_option("--set", f.sets, "Override any config key: section.key=value")->take_all();
  app->add_flag("--print-config", f.print_config, "Print the resolved config and exit");
}

nvccd::Json flag_patch(const Flags& f, const std::string& mode) {
  nvccd::Json p = nvccd::Json::object();
  if (!mode.empty()) p["mode"] = mode;
  if (f.figure) p["figure"] = *f.figure;
  if (f.backend) p["backend"] = *f.backend;
  if (f.t_max) p["simulation"]["t_max"] = *f.t_max;
  if (f.dt) p["simulation"]["dt"] = *f.dt;
  if (f.sample_every) p["simulation"]["sample_every"] = *f.sample_every;
  if (f.seed) p["simulation"]["seed"] = *f.seed;
  if (f.order) p["drive"]["order"] = *f.order;
  if (f.delta_plus) p["hamiltonian"]["delta_plus"] = *f.delta_plus;
  if (f.gamma) p["lindblad"]["gamma"] = *f.gamma;
  if (f.bath_intensity) p["noise"]["bath_intensity"] = *f.bath_intensity;
  if (f.mw_intensity) p["noise"]["mw_intensity"] = *f.mw_intensity;
  if (f.bath_tau) p["noise"]["bath_tau"] = *f.bath_tau;
  if (f.mw_tau) p["noise"]["mw_tau"] = *f.mw_tau;
  if (f.noise_traces) p["noise"]["write_traces"] = true;
  if (f.realizations) p["ensemble"]["realizations"] = *f.realizations;
  if (f.average_rho_first) p["ensemble"]["average_rho_first"] = true;
  if (f.output) p["output"]["path"] = *f.output;
  for (const auto& s : f.sets) p.merge_patch(nvccd::assignment_patch(s));
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-level NV spin dynamics under concatenated continuous driving"};
  app.set_version_flag("--version", nvccd::version());
  app.require_subcommand(1);

  Flags flags;
  struct Sub {
    const char* name;
    const char* mode;
    const char* help;
  };
  const Sub subs[] = {
      {"evolve", "evolve", "Closed-system populations"},
      {"lindblad", "lindblad", "Open-system purity and entropy"},
      {"ensemble", "ensemble", "Noise-averaged purity and entropy"},
      {"oracle-2lvl", "oracle-2lvl", "Two-level dressed-state protection checks"},
      {"run", "", "Run a config or manifest as written"},
  };
  std::string mode;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_options(sub, flags);
    const std::string m = s.mode;
    sub->callback([&mode, m] { mode = m; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const nvccd::Json file =
        flags.config.empty() ? nvccd::Json() : nvccd::load_config_file(flags.config);
    const nvccd::RunConfig cfg = nvccd::resolve_config(file, flag_patch(flags, mode));
    if (flags.print_config) {
      std::cout << cfg.document.dump(2) << '\n';
      return 0;
    }
    const int workers = nvccd::resolve_workers(flags.workers);
    return nvccd::run_and_write(cfg, workers, std::cerr);
  } catch (const nvccd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const nvccd::RealizationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const nvccd::IntegrationError& e) {
    std::cerr << "integration error at t=" << e.time() << ": " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
