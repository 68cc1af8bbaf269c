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

#ifndef RUSM_INSTANCE_IO_H_
#define RUSM_INSTANCE_IO_H_

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "rusm/instances.h"
#include "rusm/permutation_group.h"
#include "rusm/set_function.h"

namespace rusm {

// Schema violation; what() starts with the offending field path.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::invalid_argument(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct LoadedInstance {
  RusmInstance instance;
  std::optional<PermutationGroup> group;
  std::optional<HardInstanceDescriptor> descriptor;
};

// {"n": int, "g": {"kind": ..., "params": {...}}, "ell": [w_0, ..., w_{n-1}]}
// Kinds and their params:
//   monotone_sec3   {"r"}
//   negative_sec5   {"n", "t", "r"}  (n is the satellite block size)
//   positive_sec61  {"n"}
//   cut             {"edges": [[u, v, weight], ...]}
//   coverage        {"sets": [[item, ...], ...], "item_values": [...]}
//   table           {"values": [2^n entries], "declared": {...}}
// Hard families are rebuilt from their parameters and their ell must equal
// the family's own.
LoadedInstance InstanceFromJson(const nlohmann::json& doc);
nlohmann::json InstanceToJson(const RusmInstance& instance);
nlohmann::json InstanceToJson(const HardInstanceDescriptor& descriptor);

LoadedInstance LoadInstance(const std::string& path);
void SaveInstance(const RusmInstance& instance, const std::string& path);

// Writes text to path, throwing std::runtime_error on failure.
void WriteTextFile(const std::string& path, const std::string& text);
std::string ReadTextFile(const std::string& path);

}  // namespace rusm

#endif  // RUSM_INSTANCE_IO_H_
