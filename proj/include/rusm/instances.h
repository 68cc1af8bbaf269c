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
#ifndef RUSM_INSTANCES_H_
#define RUSM_INSTANCES_H_

#include <string>
#include <vector>

#include "rusm/families.h"
#include "rusm/permutation_group.h"
#include "rusm/random.h"
#include "rusm/set_function.h"

namespace rusm {

enum class HardFamily { kMonotoneSec3, kNegativeSec5, kPositiveSec61 };

std::string ToString(HardFamily family);
HardFamily ParseHardFamily(const std::string& name);

// Parameters of one hard-instance family member. n is the satellite block
// size; r and t are ignored where a family has no such parameter.
struct HardInstanceDescriptor {
  HardFamily family = HardFamily::kMonotoneSec3;
  int64_t n = 2;
  double r = 0.0;
  double t = 1.0;

  // Throws std::invalid_argument outside the family's parameter domain.
  void Validate() const;
  // Number of elements of the full ground set.
  int64_t GroundSize() const;

  friend bool operator==(const HardInstanceDescriptor&,
                         const HardInstanceDescriptor&) = default;
};

struct InstanceBundle {
  RusmInstance instance;
  PermutationGroup group;
  HardInstanceDescriptor descriptor;
};

// g(S) = min(|S|, 1), l(S) = -r |S|, symmetric under Sym(n).
InstanceBundle MakeMonotoneHard(int n, double r);
// Parity-based non-monotone instance with l = -r on every satellite element.
InstanceBundle MakeNegativeHard(int n, double t, double r);
// Parity-based instance with l = 1/3 on every c_i and 0 on a, b.
InstanceBundle MakePositiveHard(int n);
InstanceBundle MakeHardInstance(const HardInstanceDescriptor& descriptor);

RusmInstance MakeCutInstance(int n, std::vector<WeightedEdge> edges,
                             LinearWeights ell);
RusmInstance MakeCoverageInstance(std::vector<std::vector<int>> sets,
                                  std::vector<double> item_values,
                                  LinearWeights ell);

enum class RandomKind { kCut, kCoverage };

// Weights are drawn on a 1/16 grid so sums of a few of them are exact.
struct RandomFamilyParams {
  RandomKind kind = RandomKind::kCut;
  double edge_probability = 0.5;  // cut
  int universe_size = 0;          // coverage; 0 means 2n
  double item_probability = 0.3;  // coverage
  double max_weight = 1.0;        // edge weights / item values in (0, max]
  EllSign ell_sign = EllSign::kMixed;
  double ell_scale = 1.0;         // |w_u| <= ell_scale
};

std::string ToString(RandomKind kind);
RandomKind ParseRandomKind(const std::string& name);

// Seed-reproducible random cut or coverage instance with random l, n <= 14.
RusmInstance MakeRandomInstance(int n, const RandomFamilyParams& params,
                                Rng& rng);

}  // namespace rusm

#endif  // RUSM_INSTANCES_H_
