// Copyright 2026 The chainplan Authors
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

#include <stdexcept>

namespace chainplan {

/// omega * T is not a positive whole number of periods.
struct InvalidFrequencyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The simulation step does not divide a phase duration.
struct InvalidStepError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file (bad JSON/CSV, missing or mistyped fields).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Failed to read or write a file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chainplan
