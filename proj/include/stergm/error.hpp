// Copyright 2026 the stergm authors
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
#include <string>

namespace stergm {

/// Bad input: malformed files, invalid arguments, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failure while sampling or fitting a well-formed problem.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The phase space admits no state satisfying the sampler constraints.
class InfeasibleConstraint : public ModelError {
 public:
  using ModelError::ModelError;
};

/// An observed statistic sits at the boundary of its achievable range; the MLE does not exist.
class DegenerateStatistic : public ModelError {
 public:
  using ModelError::ModelError;
};

class NonConvergence : public ModelError {
 public:
  using ModelError::ModelError;
};

class SingularInformation : public ModelError {
 public:
  using ModelError::ModelError;
};

}  // namespace stergm
