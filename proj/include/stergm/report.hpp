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

#include <string>
#include <vector>

#include <json.hpp>

#include "stergm/estimation.hpp"

namespace stergm {

/// "***" below 0.001, "**" below 0.01, "*" below 0.05, else empty.
std::string significance_stars(double p_value);

nlohmann::json to_json(const PhaseFit& fit);
nlohmann::json to_json(const DevianceRow& row);
nlohmann::json to_json(const FitResult& fit);

/// Estimates with standard errors and stars, one block per phase.
std::string format_coefficients(const FitResult& fit);

/// Residual and explained deviance with degrees of freedom, AIC and stars.
std::string format_deviance(const std::vector<DevianceRow>& rows);

}  // namespace stergm
