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


#include <gtest/gtest.h>

#include "nvccd/config.hpp"
#include "nvccd/error.hpp"

using namespace nvccd;

namespace {

std::string error_of(const Json& file, const Json& flags) {
  try {
    resolve_config(file, flags);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Config, FigureFourWithExplicitOrder) {
  const RunConfig rc = resolve_config(Json(), {{"figure", "fig4"}, {"drive", {{"order", "2"}}}});
  ASSERT_EQ(rc.scenarios.size(), 1u);
  const Scenario& s = rc.scenarios[0];
  EXPECT_EQ(s.mode, Mode::Lindblad);
  EXPECT_EQ(s.lindblad.nv.drive.order, DriveOrder::Second);
  EXPECT_DOUBLE_EQ(s.lindblad.gamma, 0.05);
  EXPECT_DOUBLE_EQ(s.lindblad.nv.delta_plus, 0.9);
  EXPECT_DOUBLE_EQ(s.lindblad.nv.drive.plus.carrier, 1.0);
  EXPECT_DOUBLE_EQ(s.lindblad.nv.drive.minus.carrier, 0.35);
  EXPECT_DOUBLE_EQ(s.lindblad.nv.drive.plus.amp1, 1.0);
  EXPECT_DOUBLE_EQ(s.lindblad.nv.drive.minus.amp1, 0.8);
  EXPECT_DOUBLE_EQ(s.lindblad.nv.drive.minus.amp2, 0.4);
  EXPECT_DOUBLE_EQ(s.lindblad.nv.drive.minus.amp3, 0.2);
  EXPECT_FALSE(rc.comparison);
  EXPECT_FALSE(rc.warnings.empty());
}

TEST(Config, PresetVariants) {
  const RunConfig rc = resolve_config(Json(), {{"figure", "fig4"}});
  ASSERT_EQ(rc.scenarios.size(), 5u);
  EXPECT_EQ(rc.scenarios[0].label, "no-drive");
  EXPECT_EQ(rc.scenarios[0].lindblad.nv.drive.order, DriveOrder::Off);
  EXPECT_EQ(rc.scenarios[4].lindblad.nv.drive.order, DriveOrder::Third);
  EXPECT_TRUE(rc.comparison);
  EXPECT_FALSE(rc.document.contains("figure"));
  EXPECT_EQ(rc.document.at("variants").size(), 5u);

  const RunConfig f5 = resolve_config(Json(), {{"figure", "fig5"}});
  ASSERT_EQ(f5.scenarios.size(), 3u);
  EXPECT_DOUBLE_EQ(f5.scenarios[2].lindblad.gamma, 0.5);
  EXPECT_DOUBLE_EQ(f5.scenarios[0].lindblad.nv.drive.plus.carrier, 0.15);

  const RunConfig f7 = resolve_config(Json(), {{"figure", "fig7"}});
  EXPECT_EQ(f7.scenarios[0].mode, Mode::Ensemble);
  EXPECT_EQ(f7.scenarios[0].realizations, 1000);
  EXPECT_DOUBLE_EQ(f7.scenarios[0].mw_intensity, 0.001);
  EXPECT_DOUBLE_EQ(f7.scenarios[4].bath_intensity, 0.5);
}

TEST(Config, EveryPresetResolves) {
  for (const auto& name : figure_names())
    EXPECT_NO_THROW(resolve_config(Json(), {{"figure", name}})) << name;
  EXPECT_NE(error_of(Json(), {{"figure", "fig9"}}).find("figure"), std::string::npos);
}

TEST(Config, EmptyConfigListsRequiredFields) {
  EXPECT_EQ(error_of(Json(), Json::object()),
            "missing required fields: mode simulation.t_max hamiltonian.delta_plus drive.order");
}

TEST(Config, NegativeGammaRejected) {
  const std::string e = error_of(Json(), {{"figure", "fig4"}, {"lindblad", {{"gamma", -0.1}}}});
  EXPECT_NE(e.find("lindblad.gamma must be >= 0"), std::string::npos) << e;
}

TEST(Config, UnknownKeysAndTypesNamePaths) {
  EXPECT_EQ(error_of({{"drive", {{"plus", {{"amp4", 1.0}}}}}}, Json()), "drive.plus.amp4: unknown key");
  EXPECT_EQ(error_of({{"simulation", {{"dt", "small"}}}}, Json()),
            "simulation.dt: expected number, got string");
  EXPECT_EQ(error_of({{"ensemble", {{"realizations", 2.5}}}}, Json()),
            "ensemble.realizations: expected integer, got number");
  EXPECT_EQ(error_of({{"variants", {{{"label", "a"}, {"set", {{"bogus", 1}}}}}}}, Json()),
            "variants[0].set.bogus: unknown key");
}

TEST(Config, PrecedencePresetThenFileThenFlags) {
  const Json file = {{"figure", "fig3"}, {"simulation", {{"t_max", 12.0}, {"dt", 5e-4}}}};
  const Json flags = {{"simulation", {{"t_max", 7.0}}}};
  const RunConfig rc = resolve_config(file, flags);
  EXPECT_DOUBLE_EQ(rc.scenarios[0].t_max, 7.0);
  EXPECT_DOUBLE_EQ(rc.scenarios[0].dt, 5e-4);
  EXPECT_DOUBLE_EQ(rc.scenarios[0].lindblad.nv.delta_plus, -1.0);
  EXPECT_EQ(rc.scenarios.size(), 2u);
}

TEST(Config, FileVariantsAreUsedVerbatim) {
  const Json file = {{"mode", "lindblad"},
                     {"simulation", {{"t_max", 1.0}}},
                     {"hamiltonian", {{"delta_plus", 0.9}}},
                     {"drive", {{"order", "off"}}},
                     {"variants",
                      {{{"label", "g1"}, {"set", {{"lindblad", {{"gamma", 0.1}}}}}},
                       {{"label", "g2"}, {"set", {{"lindblad", {{"gamma", 0.2}}}}}}}}};
  const RunConfig rc = resolve_config(file, Json());
  ASSERT_EQ(rc.scenarios.size(), 2u);
  EXPECT_DOUBLE_EQ(rc.scenarios[1].lindblad.gamma, 0.2);
  Json dup = file;
  dup["variants"][1]["label"] = "g1";
  EXPECT_NE(error_of(dup, Json()).find("duplicate"), std::string::npos);
}

TEST(Config, ResolvedDocumentReproducesItself) {
  const RunConfig a = resolve_config(Json(), {{"figure", "fig7"}, {"ensemble", {{"realizations", 10}}}});
  Json manifest = a.document;
  manifest["manifest"] = {{"anything", 1}};
  const RunConfig b = resolve_config(manifest, Json());
  EXPECT_EQ(a.document, b.document);
  EXPECT_EQ(b.scenarios.size(), 5u);
  EXPECT_EQ(b.scenarios[0].realizations, 10);
}

TEST(Config, AssignmentPatch) {
  EXPECT_EQ(assignment_patch("drive.plus.amp1=0.7"), (Json{{"drive", {{"plus", {{"amp1", 0.7}}}}}}));
  EXPECT_EQ(assignment_patch("mode=evolve"), (Json{{"mode", "evolve"}}));
  EXPECT_EQ(assignment_patch("noise.write_traces=true"), (Json{{"noise", {{"write_traces", true}}}}));
  EXPECT_THROW(assignment_patch("novalue"), ConfigError);
  EXPECT_THROW(assignment_patch("a..b=1"), ConfigError);
}

TEST(Config, TwoLevelModeNeedsOnlyMode) {
  const RunConfig rc = resolve_config({{"mode", "oracle-2lvl"}}, Json());
  EXPECT_EQ(rc.scenarios[0].mode, Mode::TwoLevelOracle);
  EXPECT_DOUBLE_EQ(rc.scenarios[0].twolevel.tau, 250.0);
}

TEST(Config, ModeAndBackendParsing) {
  EXPECT_EQ(parse_mode("ensemble"), Mode::Ensemble);
  EXPECT_THROW(parse_mode("fast"), ConfigError);
  EXPECT_NE(error_of({{"figure", "fig3"}, {"backend", "euler"}}, Json()).find("backend"),
            std::string::npos);
}
