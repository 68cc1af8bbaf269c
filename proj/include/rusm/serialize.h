// Copyright 2026 The Authors.
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

#ifndef RUSM_SERIALIZE_H_
#define RUSM_SERIALIZE_H_

#include "json.hpp"
#include "rusm/hardness.h"
#include "rusm/solvers.h"
#include "rusm/validate.h"

namespace rusm {

nlohmann::json SetToJson(SubsetMask s);
nlohmann::json ToJson(const SolverReport& report);
nlohmann::json ToJson(const LocalSearchDetails& details);
nlohmann::json ToJson(const GapEvaluation& gap);
nlohmann::json ToJson(const ValidationReport& report);
nlohmann::json ToJson(const HardInstanceDescriptor& descriptor);
nlohmann::json ToJson(const LsConfig& config);

}  // namespace rusm

#endif  // RUSM_SERIALIZE_H_
