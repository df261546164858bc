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

#include "stergm/transition.hpp"

#include "stergm/error.hpp"

namespace stergm {

TransitionDecomposition decompose_transition(const Network& prev, const Network& next) {
  if (!same_shape(prev, next)) {
    throw InputError("decompose_transition: networks differ in size or directedness");
  }
  return {set_union(prev, next), set_intersection(prev, next)};
}

Network apply_transition(const Network& prev, const TransitionDecomposition& d) {
  if (!same_shape(prev, d.formation) || !same_shape(prev, d.dissolution)) {
    throw InputError("apply_transition: networks differ in size or directedness");
  }
  if (!is_subset(prev, d.formation)) {
    throw InputError("apply_transition: formation network must contain the previous network");
  }
  if (!is_subset(d.dissolution, prev)) {
    throw InputError("apply_transition: dissolution network must be contained in the previous network");
  }
  return set_difference(d.formation, set_difference(prev, d.dissolution));
}

TransitionSummary summarize_transition(const Network& prev, const Network& next) {
  const TransitionDecomposition d = decompose_transition(prev, next);
  TransitionSummary s;
  s.formed = d.formation.edge_count() - prev.edge_count();
  s.dissolved = prev.edge_count() - d.dissolution.edge_count();
  s.preserved = d.dissolution.edge_count();
  s.free_formation = prev.dyad_count() - prev.edge_count();
  s.free_dissolution = prev.edge_count();
  return s;
}

}  // namespace stergm
