// Copyright 2026 The gamedyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMEDYN_ERRORS_H_
#define GAMEDYN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gamedyn {

// Bad numeric input: wrong dimension, out-of-range index, non-finite value.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad request from a caller: unknown preset, missing parameter, bad flag.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An object violates the structural assumptions an operation relies on
// (non-Hurwitz filter, non-zero DC gain, indefinite storage matrix, ...).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The integrator produced a non-finite state.
class IntegrationDiverged : public std::runtime_error {
 public:
  IntegrationDiverged(const std::string& what, double last_good_time)
      : std::runtime_error(what), last_good_time_(last_good_time) {}
  double last_good_time() const { return last_good_time_; }

 private:
  double last_good_time_;
};

}  // namespace gamedyn

#endif  // GAMEDYN_ERRORS_H_
