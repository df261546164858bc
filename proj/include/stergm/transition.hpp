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

#include <cstddef>

#include "stergm/network.hpp"

namespace stergm {

/// Latent pair behind one observed step: formation = prev ∪ next, dissolution = prev ∩ next.
struct TransitionDecomposition {
  Network formation;
  Network dissolution;
};

TransitionDecomposition decompose_transition(const Network& prev, const Network& next);

/// Recombines a decomposition: formation \ (prev \ dissolution).
/// Requires formation ⊇ prev ⊇ dissolution.
Network apply_transition(const Network& prev, const TransitionDecomposition& d);

struct TransitionSummary {
  std::size_t formed = 0;     // |formation| - |prev|
  std::size_t dissolved = 0;  // |prev| - |dissolution|
  std::size_t preserved = 0;  // |dissolution|
  std::size_t free_formation = 0;    // empty dyads at prev
  std::size_t free_dissolution = 0;  // ties at prev
};

TransitionSummary summarize_transition(const Network& prev, const Network& next);

}  // namespace stergm
