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

// Model files:
//
//   # comments run to the end of the line
//   eta_map = identity          # optional, before any section
//   [formation]
//   edges = -3.1                # coefficient optional
//   mixing(sex, F, M) = 0.4
//   [dissolution]
//   edges = 1.2
//
// Within one block either every term has a coefficient or none does.

#include <filesystem>
#include <string>
#include <string_view>

#include "stergm/terms.hpp"

namespace stergm {

ModelSpec parse_model(std::string_view text);
ModelSpec load_model(const std::filesystem::path& path);
std::string format_model(const ModelSpec& model);

}  // namespace stergm
