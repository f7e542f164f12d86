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

#include <cmath>

#include "nvccd/drive.hpp"
#include "nvccd/error.hpp"

using namespace nvccd;

namespace {

DriveConfig sample(DriveOrder order) {
  DriveConfig c;
  c.order = order;
  c.plus = {0.7, 1.0, 0.5, 0.25, 0.9};
  c.minus = {0.35, 0.8, 0.4, 0.2, 0.6};
  return c;
}

}  // namespace

TEST(Drive, OffAndConstant) {
  EXPECT_EQ(drive_amplitude(sample(DriveOrder::Off), Branch::Plus, 3.0), 0.0);
  EXPECT_EQ(drive_amplitude(sample(DriveOrder::Constant), Branch::Plus, 3.0), 0.9);
  EXPECT_EQ(drive_amplitude(sample(DriveOrder::Constant), Branch::Minus, 3.0), 0.6);
  EXPECT_NEAR(drive_amplitude(sample(DriveOrder::Constant), Branch::Minus, 3.0, 0.1), 0.66, 1e-15);
}

TEST(Drive, FirstOrderIsCarrierTimesAmplitude) {
  const double t = 2.3;
  EXPECT_NEAR(drive_amplitude(sample(DriveOrder::First), Branch::Plus, t), std::cos(0.7 * t), 1e-15);
  EXPECT_NEAR(drive_amplitude(sample(DriveOrder::First), Branch::Minus, t), 0.8 * std::cos(0.35 * t),
              1e-15);
}

TEST(Drive, SecondOrderQuadratureCarrier) {
  // cos(x + pi/2) = -sin(x).
  const double t = 1.9;
  const double expect = std::cos(0.7 * t) - 2 * 0.5 * std::sin(0.7 * t) * std::cos(1.0 * t);
  EXPECT_NEAR(drive_amplitude(sample(DriveOrder::Second), Branch::Plus, t), expect, 1e-14);
}

TEST(Drive, ThirdOrderCarrierHasNoPhaseShift) {
  const double t = 4.1;
  const double second = drive_amplitude(sample(DriveOrder::Second), Branch::Plus, t);
  const double third = drive_amplitude(sample(DriveOrder::Third), Branch::Plus, t);
  EXPECT_NEAR(third - second, 2 * 0.25 * std::cos(0.7 * t) * std::cos(0.5 * t), 1e-14);
}

TEST(Drive, NoiseScalesOnlyStandaloneFirstOrderTerm) {
  const double t = 1.3, z = 0.2;
  const DriveConfig c = sample(DriveOrder::Second);
  const double diff =
      drive_amplitude(c, Branch::Minus, t, z) - drive_amplitude(c, Branch::Minus, t);
  EXPECT_NEAR(diff, z * 0.8 * std::cos(0.35 * t), 1e-14);
}

TEST(Drive, ParseOrder) {
  EXPECT_EQ(parse_drive_order("off"), DriveOrder::Off);
  EXPECT_EQ(parse_drive_order("constant"), DriveOrder::Constant);
  EXPECT_EQ(parse_drive_order("1"), DriveOrder::First);
  EXPECT_EQ(parse_drive_order("II"), DriveOrder::Second);
  EXPECT_EQ(parse_drive_order("third"), DriveOrder::Third);
  EXPECT_THROW(parse_drive_order("fourth"), ConfigError);
  for (DriveOrder o : {DriveOrder::Off, DriveOrder::Constant, DriveOrder::First, DriveOrder::Second,
                       DriveOrder::Third})
    EXPECT_EQ(parse_drive_order(to_string(o)), o);
}

TEST(Drive, Validate) {
  EXPECT_TRUE(validate(sample(DriveOrder::Third)).empty());
  DriveConfig c = sample(DriveOrder::Second);
  c.plus.amp2 = 2.0;
  ASSERT_EQ(validate(c).size(), 1u);
  EXPECT_NE(validate(c)[0].find("RWA"), std::string::npos);
  c = sample(DriveOrder::First);
  c.minus.carrier = 0.0;
  ASSERT_EQ(validate(c).size(), 1u);
  EXPECT_NE(validate(c)[0].find("carrier"), std::string::npos);
}
