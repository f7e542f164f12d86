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

#include "nvccd/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "nvccd/error.hpp"

namespace nvccd {

NoiseSources make_noise_sources(const EnsembleConfig& cfg, std::uint64_t realization) {
  NoiseSources src;
  const auto seed = [&](NoiseSource s) {
    return derive_seed(cfg.master_seed, realization, static_cast<std::uint64_t>(s));
  };
  if (cfg.bath_intensity > 0.0)
    src.detuning = OUProcess::from_intensity(cfg.bath_intensity, cfg.bath_tau,
                                             seed(NoiseSource::Bath));
  if (cfg.mw_intensity > 0.0 && cfg.lindblad.nv.drive.order != DriveOrder::Off) {
    src.amp_plus = OUProcess::from_intensity(cfg.mw_intensity, cfg.mw_tau,
                                             seed(NoiseSource::MicrowavePlus));
    src.amp_minus = OUProcess::from_intensity(cfg.mw_intensity, cfg.mw_tau,
                                              seed(NoiseSource::MicrowaveMinus));
  }
  return src;
}

namespace {

void check(const EnsembleConfig& cfg) {
  if (cfg.n_realizations < 1) throw ConfigError("ensemble.realizations must be >= 1");
  if (!(cfg.bath_intensity >= 0.0)) throw ConfigError("noise.bath_intensity must be >= 0");
  if (!(cfg.mw_intensity >= 0.0)) throw ConfigError("noise.mw_intensity must be >= 0");
  if (!(cfg.bath_tau > 0.0)) throw ConfigError("noise.bath_tau must be positive");
  if (!(cfg.mw_tau > 0.0)) throw ConfigError("noise.mw_tau must be positive");
}

// Per-realization output slot.
struct Slot {
  std::vector<double> purity;
  std::vector<double> entropy;
  std::vector<Matrix3c> rho;
  std::vector<FieldNoise> noise;
  std::vector<double> time;
  std::vector<std::string> warnings;
  std::exception_ptr error;
};

void run_one(const EnsembleConfig& cfg, std::size_t k, Slot& slot) {
  LindbladOptions opts;
  opts.dt = cfg.dt;
  opts.sample_every = cfg.sample_every;
  opts.record_noise = cfg.keep_noise;
  const LindbladTrace tr =
      propagate_lindblad(cfg.lindblad, cfg.rho0, cfg.t_max, opts, make_noise_sources(cfg, k));
  const std::size_t m = tr.samples.size();
  slot.purity.resize(m);
  slot.entropy.resize(m);
  if (k == 0) slot.time.resize(m);
  if (cfg.average_rho_first) slot.rho.resize(m);
  if (cfg.keep_noise) slot.noise.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const LindbladSample& s = tr.samples[i];
    slot.purity[i] = s.purity;
    slot.entropy[i] = s.entropy;
    if (k == 0) slot.time[i] = s.t;
    if (cfg.average_rho_first) slot.rho[i] = s.rho;
    if (cfg.keep_noise) slot.noise[i] = s.noise;
  }
  for (const auto& w : tr.warnings) slot.warnings.push_back("realization " + std::to_string(k) + ": " + w);
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleConfig& cfg, int workers) {
  check(cfg);
  const std::size_t n = static_cast<std::size_t>(cfg.n_realizations);
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), n));

  std::vector<Slot> slots(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= n || failed.load()) return;
      try {
        run_one(cfg, k, slots[k]);
      } catch (...) {
        slots[k].error = std::current_exception();
        failed.store(true);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (!slots[k].error) continue;
    std::string what;
    try {
      std::rethrow_exception(slots[k].error);
    } catch (const std::exception& e) {
      what = e.what();
    }
    throw RealizationError("realization " + std::to_string(k) + " failed (master seed " +
                               std::to_string(cfg.master_seed) + "): " + what,
                           k, cfg.master_seed);
  }

  EnsembleResult res;
  res.time = slots[0].time;
  const std::size_t m = res.time.size();
  res.mean_purity.assign(m, 0.0);
  res.mean_entropy.assign(m, 0.0);
  res.std_err_purity.assign(m, 0.0);
  res.std_err_entropy.assign(m, 0.0);
  res.seeds.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint64_t s = 0; s < 3; ++s) res.seeds[k][s] = derive_seed(cfg.master_seed, k, s);
    for (const auto& w : slots[k].warnings) res.warnings.push_back(w);
  }

  const double nn = static_cast<double>(n);
  if (cfg.average_rho_first) {
    for (std::size_t i = 0; i < m; ++i) {
      Matrix3c mean = Matrix3c::Zero();
      for (std::size_t k = 0; k < n; ++k) mean += slots[k].rho[i];
      mean /= nn;
      const DensityMatrix rho(mean);
      res.mean_purity[i] = purity(rho);
      res.mean_entropy[i] =
          entropy_from_spectrum(spectrum(rho), std::numeric_limits<double>::infinity());
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      double sp = 0.0, se = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sp += slots[k].purity[i];
        se += slots[k].entropy[i];
      }
      const double mp = sp / nn, me = se / nn;
      res.mean_purity[i] = mp;
      res.mean_entropy[i] = me;
      if (n > 1) {
        double vp = 0.0, ve = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          vp += (slots[k].purity[i] - mp) * (slots[k].purity[i] - mp);
          ve += (slots[k].entropy[i] - me) * (slots[k].entropy[i] - me);
        }
        res.std_err_purity[i] = std::sqrt(vp / (nn - 1.0) / nn);
        res.std_err_entropy[i] = std::sqrt(ve / (nn - 1.0) / nn);
      }
    }
  }

  if (cfg.keep_traces || cfg.keep_noise) {
    res.traces.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (cfg.keep_traces) {
        res.traces[k].purity = std::move(slots[k].purity);
        res.traces[k].entropy = std::move(slots[k].entropy);
      }
      res.traces[k].noise = std::move(slots[k].noise);
    }
  }
  return res;
}

namespace {

std::vector<std::size_t> rank(const std::vector<double>& v, bool descending) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return descending ? v[a] > v[b] : v[a] < v[b];
  });
  return idx;
}

double window_mean(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += v[i];
  return s / static_cast<double>(hi - lo);
}

bool separated(const std::vector<std::size_t>& order, const std::vector<double>& mean,
               const std::vector<double>& se) {
  for (std::size_t r = 0; r + 1 < order.size(); ++r) {
    const std::size_t a = order[r], b = order[r + 1];
    if (!(std::abs(mean[a] - mean[b]) > 2.0 * (se[a] + se[b]))) return false;
  }
  return true;
}

}  // namespace

OrderingReport coherence_ordering_report(const std::vector<EnsembleResult>& results,
                                         const std::vector<std::string>& labels) {
  if (results.empty()) throw ConfigError("ordering report: no results");
  if (labels.size() != results.size())
    throw ConfigError("ordering report: label count does not match result count");
  const std::vector<double>& grid = results.front().time;
  if (grid.size() < 4) throw ConfigError("ordering report: time grid too short");
  for (const auto& r : results)
    if (r.time != grid) throw ConfigError("ordering report: results do not share a time grid");

  OrderingReport rep;
  rep.labels = labels;
  const std::size_t m = grid.size();
  const double t0 = grid.front(), span = grid.back() - grid.front();
  const std::size_t c = results.size();

  std::vector<std::size_t> bounds(5);
  for (int q = 0; q <= 4; ++q) {
    const double edge = t0 + span * q / 4.0;
    bounds[q] = q == 4 ? m
                       : static_cast<std::size_t>(
                             std::lower_bound(grid.begin(), grid.end(), edge - 1e-12) -
                             grid.begin());
  }
  for (int q = 0; q < 4; ++q) {
    const std::size_t lo = bounds[q], hi = std::max(bounds[q + 1], lo + 1);
    std::vector<double> p(c), e(c), pse(c), ese(c);
    for (std::size_t j = 0; j < c; ++j) {
      p[j] = window_mean(results[j].mean_purity, lo, hi);
      e[j] = window_mean(results[j].mean_entropy, lo, hi);
      pse[j] = window_mean(results[j].std_err_purity, lo, hi);
      ese[j] = window_mean(results[j].std_err_entropy, lo, hi);
    }
    WindowRanking w;
    w.t_begin = grid[lo];
    w.t_end = grid[hi - 1];
    w.by_purity = rank(p, true);
    w.by_entropy = rank(e, false);
    if (q == 3) {
      rep.final_purity = p;
      rep.final_purity_se = pse;
      rep.final_entropy = e;
      rep.final_entropy_se = ese;
      rep.purity_separated = separated(w.by_purity, p, pse);
      rep.entropy_separated = separated(w.by_entropy, e, ese);
    }
    rep.windows.push_back(std::move(w));
  }
  return rep;
}

std::string OrderingReport::summary() const {
  std::ostringstream os;
  const auto join = [&](const std::vector<std::size_t>& order) {
    std::string s;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) s += ", ";
      s += labels[order[i]];
    }
    return s;
  };
  for (const auto& w : windows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.4g, %.4g]", w.t_begin, w.t_end);
    os << buf << " purity desc: " << join(w.by_purity) << "; entropy asc: " << join(w.by_entropy)
       << '\n';
  }
  os << "final quarter purity " << (purity_separated ? "separated" : "not separated")
     << ", entropy " << (entropy_separated ? "separated" : "not separated") << '\n';
  return os.str();
}

}  // namespace nvccd
