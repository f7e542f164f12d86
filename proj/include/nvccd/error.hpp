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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nvccd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent user configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A density matrix that violates the unit-trace or Hermiticity contract.
class StateError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue below the positivity tolerance.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Numerical failure while integrating a trajectory; carries the time reached.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double time) : Error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// The Riccati variable z(t) exceeded its guard; the (3,3) propagator entry
/// is (close to) singular at this time.
class RiccatiBlowupError : public IntegrationError {
 public:
  RiccatiBlowupError(const std::string& what, double time, double z_norm)
      : IntegrationError(what, time), z_norm_(z_norm) {}
  double z_norm() const noexcept { return z_norm_; }

 private:
  double z_norm_;
};

/// Failure of one Monte-Carlo realization, with what is needed to replay it.
class RealizationError : public Error {
 public:
  RealizationError(const std::string& what, std::size_t index, std::uint64_t master_seed)
      : Error(what), index_(index), master_seed_(master_seed) {}
  std::size_t index() const noexcept { return index_; }
  std::uint64_t master_seed() const noexcept { return master_seed_; }

 private:
  std::size_t index_;
  std::uint64_t master_seed_;
};

}  // namespace nvccd
