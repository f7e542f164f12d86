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

#include "nvccd/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "nvccd/error.hpp"

namespace nvccd {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Evolve: return "evolve";
    case Mode::Lindblad: return "lindblad";
    case Mode::Ensemble: return "ensemble";
    case Mode::TwoLevelOracle: return "oracle-2lvl";
  }
  return "evolve";
}

Mode parse_mode(std::string_view text) {
  if (text == "evolve") return Mode::Evolve;
  if (text == "lindblad") return Mode::Lindblad;
  if (text == "ensemble") return Mode::Ensemble;
  if (text == "oracle-2lvl") return Mode::TwoLevelOracle;
  throw ConfigError("mode: unknown value '" + std::string(text) +
                    "' (expected evolve, lindblad, ensemble or oracle-2lvl)");
}

EnsembleConfig Scenario::ensemble_config() const {
  EnsembleConfig c;
  c.n_realizations = realizations;
  c.master_seed = seed;
  c.bath_intensity = bath_intensity;
  c.mw_intensity = mw_intensity;
  c.bath_tau = bath_tau;
  c.mw_tau = mw_tau;
  c.lindblad = lindblad;
  c.t_max = t_max;
  c.dt = dt;
  c.sample_every = sample_every;
  c.average_rho_first = average_rho_first;
  c.keep_noise = write_noise;
  return c;
}

namespace {

// Leaf type tags: "number", "integer", "uint", "bool", "string", "order".
const Json& schema() {
  static const Json s = [] {
    const Json branch = {{"carrier", "number"}, {"amp1", "number"}, {"amp2", "number"},
                         {"amp3", "number"},    {"constant", "number"}};
    return Json{
        {"mode", "string"},
        {"backend", "string"},
        {"figure", "string"},
        {"simulation",
         {{"t_max", "number"}, {"dt", "number"}, {"sample_every", "integer"}, {"seed", "uint"}}},
        {"hamiltonian", {{"delta_plus", "number"}}},
        {"drive", {{"order", "order"}, {"plus", branch}, {"minus", branch}}},
        {"lindblad", {{"gamma", "number"}}},
        {"noise",
         {{"bath_intensity", "number"},
          {"mw_intensity", "number"},
          {"bath_tau", "number"},
          {"mw_tau", "number"},
          {"write_traces", "bool"}}},
        {"ensemble", {{"realizations", "integer"}, {"average_rho_first", "bool"}}},
        {"twolevel",
         {{"omega", "number"},
          {"omega1", "number"},
          {"omega2", "number"},
          {"intensity", "number"},
          {"tau", "number"},
          {"dt", "number"},
          {"bath_t_max", "number"},
          {"drive_t_max", "number"},
          {"bath_realizations", "integer"},
          {"drive_realizations", "integer"}}},
        {"output", {{"path", "string"}}},
    };
  }();
  return s;
}

const Json& defaults() {
  static const Json d = [] {
    const Json branch = {
        {"carrier", 0.0}, {"amp1", 0.0}, {"amp2", 0.0}, {"amp3", 0.0}, {"constant", 0.0}};
    return Json{
        {"backend", "block-decomposition"},
        {"simulation", {{"dt", 1e-3}, {"sample_every", 100}, {"seed", 0}}},
        {"drive", {{"plus", branch}, {"minus", branch}}},
        {"lindblad", {{"gamma", 0.0}}},
        {"noise",
         {{"bath_intensity", 0.0},
          {"mw_intensity", 0.0},
          {"bath_tau", 25.0},
          {"mw_tau", 25.0},
          {"write_traces", false}}},
        {"ensemble", {{"realizations", 1}, {"average_rho_first", false}}},
        {"twolevel",
         {{"omega", 1.0},
          {"omega1", 0.1},
          {"omega2", 0.02},
          {"intensity", 0.25},
          {"tau", 250.0},
          {"dt", 0.01},
          {"bath_t_max", 200.0},
          {"drive_t_max", 400.0},
          {"bath_realizations", 100},
          {"drive_realizations", 100}}},
        {"output", {{"path", "nvccd_output.csv"}}},
    };
  }();
  return d;
}

std::string join_path(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

bool type_ok(const std::string& tag, const Json& v) {
  if (tag == "number") return v.is_number();
  if (tag == "integer") return v.is_number_integer();
  if (tag == "uint") return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
  if (tag == "bool") return v.is_boolean();
  if (tag == "string") return v.is_string();
  if (tag == "order") return v.is_string() || v.is_number_integer();
  return false;
}

std::string expected(const std::string& tag) {
  if (tag == "uint") return "non-negative integer";
  if (tag == "bool") return "boolean";
  if (tag == "order") return "string or integer";
  return tag;
}

// Checks keys and leaf types of `doc` against `sch`.
void check_against(const Json& doc, const Json& sch, const std::string& prefix) {
  if (!doc.is_object())
    throw ConfigError((prefix.empty() ? std::string("config") : prefix) + ": expected object, got " +
                      doc.type_name());
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string path = join_path(prefix, it.key());
    if (!sch.contains(it.key())) throw ConfigError(path + ": unknown key");
    const Json& s = sch.at(it.key());
    if (s.is_object()) {
      check_against(it.value(), s, path);
    } else if (!type_ok(s.get<std::string>(), it.value())) {
      throw ConfigError(path + ": expected " + expected(s.get<std::string>()) + ", got " +
                        it.value().type_name());
    }
  }
}

// Top-level check, including the variants and manifest sections.
void check_document(const Json& doc, const std::string& origin) {
  if (doc.is_null()) return;
  if (!doc.is_object()) throw ConfigError(origin + ": expected a JSON object");
  Json plain = doc;
  plain.erase("manifest");
  if (plain.contains("variants")) {
    const Json& vars = plain.at("variants");
    if (!vars.is_array()) throw ConfigError("variants: expected array, got " + std::string(vars.type_name()));
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string p = "variants[" + std::to_string(i) + "]";
      const Json& v = vars[i];
      if (!v.is_object()) throw ConfigError(p + ": expected object");
      for (auto it = v.begin(); it != v.end(); ++it)
        if (it.key() != "label" && it.key() != "set") throw ConfigError(p + "." + it.key() + ": unknown key");
      if (!v.contains("label") || !v.at("label").is_string())
        throw ConfigError(p + ".label: required string");
      if (v.contains("set")) check_against(v.at("set"), schema(), p + ".set");
    }
    plain.erase("variants");
  }
  check_against(plain, schema(), "");
}

void leaf_paths(const Json& doc, const std::string& prefix, std::set<std::string>& out) {
  if (!doc.is_object()) {
    out.insert(prefix);
    return;
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) leaf_paths(it.value(), join_path(prefix, it.key()), out);
}

const Json* find_path(const Json& doc, const std::string& path) {
  const Json* cur = &doc;
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &cur->at(key);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return cur;
}

void check_required(const Json& doc, const std::string& where) {
  std::vector<std::string> missing;
  const Json* mode = find_path(doc, "mode");
  if (!mode) missing.push_back("mode");
  const bool oracle = mode && mode->is_string() && mode->get<std::string>() == "oracle-2lvl";
  if (!oracle) {
    for (const char* key : {"simulation.t_max", "hamiltonian.delta_plus", "drive.order"})
      if (!find_path(doc, key)) missing.push_back(key);
  }
  if (missing.empty()) return;
  std::string msg = "missing required field";
  msg += missing.size() > 1 ? "s" : "";
  msg += where.empty() ? "" : " (" + where + ")";
  msg += ":";
  for (const auto& m : missing) msg += " " + m;
  throw ConfigError(msg);
}

BranchDrive branch_from(const Json& j) {
  BranchDrive b;
  b.carrier = j.at("carrier").get<double>();
  b.amp1 = j.at("amp1").get<double>();
  b.amp2 = j.at("amp2").get<double>();
  b.amp3 = j.at("amp3").get<double>();
  b.constant = j.at("constant").get<double>();
  return b;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Scenario scenario_from(const Json& d, const std::string& label, std::vector<std::string>& warnings) {
  Scenario s;
  s.label = label;
  s.mode = parse_mode(d.at("mode").get<std::string>());
  try {
    s.backend = parse_backend(d.at("backend").get<std::string>());
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("backend: ") + e.what());
  }
  const Json& sim = d.at("simulation");
  s.dt = sim.at("dt").get<double>();
  s.sample_every = sim.at("sample_every").get<int>();
  s.seed = sim.at("seed").get<std::uint64_t>();
  require(s.dt > 0.0, "simulation.dt must be > 0 (got " + num(s.dt) + ")");
  require(s.sample_every >= 1, "simulation.sample_every must be >= 1");

  const Json& tl = d.at("twolevel");
  ProtectionSuiteConfig& t = s.twolevel;
  t.params.omega = tl.at("omega").get<double>();
  t.params.omega1 = tl.at("omega1").get<double>();
  t.params.omega2 = tl.at("omega2").get<double>();
  t.intensity = tl.at("intensity").get<double>();
  t.tau = tl.at("tau").get<double>();
  t.dt = tl.at("dt").get<double>();
  t.bath_t_max = tl.at("bath_t_max").get<double>();
  t.drive_t_max = tl.at("drive_t_max").get<double>();
  t.bath_realizations = tl.at("bath_realizations").get<int>();
  t.drive_realizations = tl.at("drive_realizations").get<int>();
  t.master_seed = s.seed;

  if (s.mode == Mode::TwoLevelOracle) {
    require(t.intensity >= 0.0, "twolevel.intensity must be >= 0");
    require(t.tau > 0.0, "twolevel.tau must be > 0");
    require(t.dt > 0.0, "twolevel.dt must be > 0");
    require(t.bath_t_max > 0.0 && t.drive_t_max > 0.0, "twolevel t_max values must be > 0");
    require(t.bath_realizations >= 1 && t.drive_realizations >= 1,
            "twolevel realizations must be >= 1");
    for (const auto& w : validate(t.params)) warnings.push_back("twolevel: " + w);
    return s;
  }

  s.t_max = sim.at("t_max").get<double>();
  require(s.t_max > 0.0, "simulation.t_max must be > 0 (got " + num(s.t_max) + ")");

  NVParams& nv = s.lindblad.nv;
  nv.delta_plus = d.at("hamiltonian").at("delta_plus").get<double>();
  const Json& drv = d.at("drive");
  const Json& order = drv.at("order");
  try {
    nv.drive.order = parse_drive_order(order.is_string() ? order.get<std::string>()
                                                         : std::to_string(order.get<int>()));
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("drive.order: ") + e.what());
  }
  nv.drive.plus = branch_from(drv.at("plus"));
  nv.drive.minus = branch_from(drv.at("minus"));
  for (const auto& w : validate(nv.drive)) warnings.push_back((label.empty() ? "" : label + ": ") + w);

  s.lindblad.gamma = d.at("lindblad").at("gamma").get<double>();
  require(s.lindblad.gamma >= 0.0,
          "lindblad.gamma must be >= 0 (got " + num(s.lindblad.gamma) + ")");

  const Json& nz = d.at("noise");
  s.bath_intensity = nz.at("bath_intensity").get<double>();
  s.mw_intensity = nz.at("mw_intensity").get<double>();
  s.bath_tau = nz.at("bath_tau").get<double>();
  s.mw_tau = nz.at("mw_tau").get<double>();
  s.write_noise = nz.at("write_traces").get<bool>();
  require(s.bath_intensity >= 0.0, "noise.bath_intensity must be >= 0");
  require(s.mw_intensity >= 0.0, "noise.mw_intensity must be >= 0");
  require(s.bath_tau > 0.0, "noise.bath_tau must be > 0");
  require(s.mw_tau > 0.0, "noise.mw_tau must be > 0");

  s.realizations = d.at("ensemble").at("realizations").get<int>();
  s.average_rho_first = d.at("ensemble").at("average_rho_first").get<bool>();
  require(s.realizations >= 1, "ensemble.realizations must be >= 1");

  if (s.mode == Mode::Evolve && (s.bath_intensity > 0.0 || s.mw_intensity > 0.0 || s.lindblad.gamma > 0.0))
    warnings.push_back((label.empty() ? "" : label + ": ") +
                       "evolve mode is closed-system; gamma and noise settings are ignored");
  return s;
}

Json branch_json(double carrier, double a1, double a2, double a3, double constant) {
  return {{"carrier", carrier}, {"amp1", a1}, {"amp2", a2}, {"amp3", a3}, {"constant", constant}};
}

Json order_variant(const std::string& label, const std::string& order) {
  return {{"label", label}, {"set", {{"drive", {{"order", order}}}}}};
}

// Parameter sets from the figure captions.
Json slow_drive() {
  const Json b = branch_json(0.15, 0.9, 0.45, 0.225, 0.9);
  return {{"plus", b}, {"minus", b}};
}

Json asymmetric_drive() {
  return {{"plus", branch_json(1.0, 1.0, 0.5, 0.25, 1.0)},
          {"minus", branch_json(0.35, 0.8, 0.4, 0.2, 0.8)}};
}

}  // namespace

std::vector<std::string> figure_names() { return {"fig2", "fig3", "fig4", "fig5", "fig7", "fig8"}; }

Json figure_preset(std::string_view name) {
  Json p;
  if (name == "fig2" || name == "fig3") {
    p = {{"mode", "evolve"},
         {"simulation", {{"t_max", name == "fig2" ? 30.0 : 100.0}}},
         {"hamiltonian", {{"delta_plus", -1.0}}},
         {"drive", slow_drive()}};
    p["drive"]["order"] = "first";
    p["variants"] = Json::array();
    if (name == "fig2") p["variants"].push_back(order_variant("constant", "constant"));
    p["variants"].push_back(order_variant("order-I", "first"));
    p["variants"].push_back(order_variant("order-II", "second"));
  } else if (name == "fig4") {
    p = {{"mode", "lindblad"},
         {"simulation", {{"t_max", 10.0}}},
         {"hamiltonian", {{"delta_plus", 0.9}}},
         {"drive", asymmetric_drive()},
         {"lindblad", {{"gamma", 0.05}}}};
    p["drive"]["order"] = "first";
    p["variants"] = Json::array({order_variant("no-drive", "off"),
                                 order_variant("constant", "constant"),
                                 order_variant("order-I", "first"),
                                 order_variant("order-II", "second"),
                                 order_variant("order-III", "third")});
  } else if (name == "fig5") {
    p = {{"mode", "lindblad"},
         {"simulation", {{"t_max", 50.0}}},
         {"hamiltonian", {{"delta_plus", -1.0}}},
         {"drive", slow_drive()},
         {"lindblad", {{"gamma", 0.05}}}};
    p["drive"]["order"] = "second";
    p["variants"] = Json::array();
    for (double g : {0.05, 0.1, 0.5}) {
      std::ostringstream label;
      label << "gamma-" << g;
      p["variants"].push_back({{"label", label.str()}, {"set", {{"lindblad", {{"gamma", g}}}}}});
    }
  } else if (name == "fig7" || name == "fig8") {
    p = {{"mode", "ensemble"},
         {"simulation", {{"t_max", 10.0}}},
         {"hamiltonian", {{"delta_plus", 0.9}}},
         {"drive", asymmetric_drive()},
         {"lindblad", {{"gamma", 0.05}}},
         {"noise", {{"bath_intensity", 0.25}, {"mw_intensity", 0.001}}},
         {"ensemble", {{"realizations", 1000}}}};
    p["drive"]["order"] = "second";
    p["variants"] = Json::array({order_variant("constant", "constant"),
                                 order_variant("order-I", "first"),
                                 order_variant("order-II", "second")});
    for (double in : {0.05, 0.5}) {
      std::ostringstream label;
      label << "order-II-bath-" << in;
      p["variants"].push_back(
          {{"label", label.str()},
           {"set", {{"drive", {{"order", "second"}}}, {"noise", {{"bath_intensity", in}}}}}});
    }
  } else {
    throw ConfigError("figure: unknown preset '" + std::string(name) +
                      "' (expected fig2, fig3, fig4, fig5, fig7 or fig8)");
  }
  p["figure"] = std::string(name);
  return p;
}

RunConfig resolve_config(const Json& file, const Json& flags) {
  check_document(file, "config file");
  check_document(flags, "flags");

  RunConfig rc;
  if (flags.is_object() && flags.contains("figure"))
    rc.figure = flags.at("figure").get<std::string>();
  else if (file.is_object() && file.contains("figure"))
    rc.figure = file.at("figure").get<std::string>();

  Json base = rc.figure.empty() ? Json::object() : figure_preset(rc.figure);
  Json variants = base.contains("variants") ? base.at("variants") : Json::array();
  base.erase("variants");
  base.erase("figure");

  Json explicit_doc = Json::object();
  if (file.is_object()) {
    Json f = file;
    f.erase("manifest");
    f.erase("figure");
    if (f.contains("variants")) {
      variants = f.at("variants");
      f.erase("variants");
    }
    explicit_doc.merge_patch(f);
  }
  if (flags.is_object()) {
    Json f = flags;
    f.erase("figure");
    f.erase("manifest");
    if (f.contains("variants")) {
      variants = f.at("variants");
      f.erase("variants");
    }
    explicit_doc.merge_patch(f);
  }

  // Explicit keys that a preset varies collapse the comparison.
  if (!rc.figure.empty() && !(file.is_object() && file.contains("variants"))) {
    std::set<std::string> expl, varied;
    leaf_paths(explicit_doc, "", expl);
    for (const auto& v : variants)
      if (v.contains("set")) leaf_paths(v.at("set"), "", varied);
    std::vector<std::string> clash;
    std::set_intersection(expl.begin(), expl.end(), varied.begin(), varied.end(),
                          std::back_inserter(clash));
    if (!clash.empty()) {
      std::string keys;
      for (const auto& k : clash) keys += (keys.empty() ? "" : ", ") + k;
      rc.warnings.push_back("preset " + rc.figure + " variants replaced by explicit " + keys);
      variants = Json::array();
    }
  }

  Json doc = base;
  doc.merge_patch(explicit_doc);
  if (variants.empty()) {
    check_required(doc, "");
  } else {
    for (const auto& v : variants) {
      Json vd = doc;
      if (v.contains("set")) vd.merge_patch(v.at("set"));
      check_required(vd, "variant " + v.at("label").get<std::string>());
    }
  }

  Json resolved = defaults();
  resolved.merge_patch(doc);
  if (!variants.empty()) resolved["variants"] = variants;
  rc.document = resolved;
  rc.output_path = resolved.at("output").at("path").get<std::string>();

  if (variants.empty()) {
    rc.scenarios.push_back(scenario_from(resolved, "", rc.warnings));
  } else {
    std::set<std::string> labels;
    for (const auto& v : variants) {
      const std::string label = v.at("label").get<std::string>();
      if (!labels.insert(label).second) throw ConfigError("variants: duplicate label '" + label + "'");
      Json vd = resolved;
      vd.erase("variants");
      if (v.contains("set")) vd.merge_patch(v.at("set"));
      rc.scenarios.push_back(scenario_from(vd, label, rc.warnings));
    }
    rc.comparison = true;
  }
  const Mode m = rc.scenarios.front().mode;
  for (const auto& s : rc.scenarios)
    if (s.mode != m) throw ConfigError("variants: all variants must share one mode");
  return rc;
}

Json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

Json assignment_patch(std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ConfigError("--set expects key.path=value, got '" + std::string(assignment) + "'");
  const std::string path(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  Json patch = value;
  std::size_t end = path.size();
  for (;;) {
    const std::size_t dot = path.rfind('.', end - 1);
    const std::size_t start = dot == std::string::npos ? 0 : dot + 1;
    const std::string key = path.substr(start, end - start);
    if (key.empty()) throw ConfigError("--set: empty key in '" + path + "'");
    patch = Json{{key, patch}};
    if (dot == std::string::npos) break;
    end = dot;
  }
  return patch;
}

}  // namespace nvccd
