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

#ifndef RUSM_VALIDATE_H_
#define RUSM_VALIDATE_H_

#include <optional>
#include <string>
#include <vector>

#include "rusm/permutation_group.h"
#include "rusm/set_function.h"

namespace rusm {

// Brute-force validators refuse inputs larger than this.
inline constexpr int kMaxValidateElements = 14;

enum class Property {
  kNonNegative,
  kSubmodular,         // f(u|S) >= f(u|T) for S subset T, u not in T
  kSubmodularLattice,  // f(S) + f(T) >= f(S | T) + f(S & T)
  kMonotone,
  kEllNonNegative,
  kEllNonPositive,
  kGroupInvariant,  // needs a group; see ValidateGroupInvariance
};

std::string ToString(Property property);
Property ParseProperty(const std::string& name);

struct ValidationReport {
  Property property = Property::kNonNegative;
  bool passed = true;
  // First violation found, in increasing mask order.
  std::optional<SubsetMask> witness_s;
  std::optional<SubsetMask> witness_t;
  std::optional<int> witness_u;
  std::string detail;
};

// Reports, never repairs: a failing property yields a witness. Throws
// std::invalid_argument when n is too large for the requested check.
ValidationReport Validate(const SetFunction& f, Property property,
                          int max_elements = kMaxValidateElements);
ValidationReport Validate(const RusmInstance& instance, Property property,
                          int max_elements = kMaxValidateElements);

// Checks every property the instance declares.
std::vector<ValidationReport> ValidateDeclared(const RusmInstance& instance);

// g(sigma(S)) == g(S) and l(sigma(S)) == l(S) for all S and each generator.
ValidationReport ValidateGroupInvariance(const RusmInstance& instance,
                                         const PermutationGroup& group,
                                         int max_elements = 20);

}  // namespace rusm

#endif  // RUSM_VALIDATE_H_
