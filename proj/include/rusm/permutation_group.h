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
#ifndef RUSM_PERMUTATION_GROUP_H_
#define RUSM_PERMUTATION_GROUP_H_

#include <vector>

#include "rusm/subset.h"

namespace rusm {

using Permutation = std::vector<int>;

// A permutation group on {0, ..., n-1}, stored as its orbit partition plus a
// generating set. Symmetrization only needs the orbits: averaging sigma(x)
// over a uniformly random group element gives every coordinate the mean of
// its orbit. A "paired block" (a <-> b swapped together with a_i <-> b_i) is
// just an orbit that contains both blocks.
class PermutationGroup {
 public:
  // Throws std::invalid_argument unless the orbits partition {0..n-1} and
  // every generator is a permutation mapping each orbit onto itself.
  PermutationGroup(int n, std::vector<std::vector<int>> orbits,
                   std::vector<Permutation> generators = {});

  // Sym(n): one orbit, generated by (0 1) and the n-cycle.
  static PermutationGroup FullSymmetric(int n);
  static PermutationGroup Trivial(int n);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  int OrbitOf(int u) const { return orbit_of_[u]; }

 private:
  int n_;
  std::vector<std::vector<int>> orbits_;
  std::vector<Permutation> generators_;
  std::vector<int> orbit_of_;
};

// sigma(S) = {sigma(u) : u in S}.
SubsetMask ApplyPermutation(const Permutation& sigma, SubsetMask s);
// (sigma(x))_{sigma(u)} = x_u.
std::vector<double> ApplyPermutation(const Permutation& sigma,
                                     const std::vector<double>& x);

}  // namespace rusm

#endif  // RUSM_PERMUTATION_GROUP_H_
