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
#include "rusm/permutation_group.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rusm {

PermutationGroup::PermutationGroup(int n, std::vector<std::vector<int>> orbits,
                                   std::vector<Permutation> generators)
    : n_(n),
      orbits_(std::move(orbits)),
      generators_(std::move(generators)),
      orbit_of_(n, -1) {
  if (n < 1) throw std::invalid_argument("group needs n >= 1");
  for (int k = 0; k < static_cast<int>(orbits_.size()); ++k) {
    if (orbits_[k].empty()) throw std::invalid_argument("empty orbit");
    for (int u : orbits_[k]) {
      if (u < 0 || u >= n) {
        throw std::invalid_argument("orbit element " + std::to_string(u) +
                                    " out of range");
      }
      if (orbit_of_[u] != -1) {
        throw std::invalid_argument("element " + std::to_string(u) +
                                    " appears in two orbits");
      }
      orbit_of_[u] = k;
    }
  }
  for (int u = 0; u < n; ++u) {
    if (orbit_of_[u] == -1) {
      throw std::invalid_argument("element " + std::to_string(u) +
                                  " is not covered by any orbit");
    }
  }
  for (const Permutation& sigma : generators_) {
    if (static_cast<int>(sigma.size()) != n) {
      throw std::invalid_argument("generator has wrong length");
    }
    std::vector<bool> hit(n, false);
    for (int u = 0; u < n; ++u) {
      const int v = sigma[u];
      if (v < 0 || v >= n || hit[v]) {
        throw std::invalid_argument("generator is not a permutation");
      }
      hit[v] = true;
      if (orbit_of_[v] != orbit_of_[u]) {
        throw std::invalid_argument(
            "generator moves element " + std::to_string(u) +
            " out of its orbit");
      }
    }
  }
}

PermutationGroup PermutationGroup::FullSymmetric(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(all);
    std::swap(swap[0], swap[1]);
    Permutation cycle(n);
    for (int u = 0; u < n; ++u) cycle[u] = (u + 1) % n;
    gens = {swap, cycle};
  }
  return PermutationGroup(n, {all}, gens);
}

PermutationGroup PermutationGroup::Trivial(int n) {
  std::vector<std::vector<int>> orbits;
  for (int u = 0; u < n; ++u) orbits.push_back({u});
  return PermutationGroup(n, orbits);
}

SubsetMask ApplyPermutation(const Permutation& sigma, SubsetMask s) {
  SubsetMask out;
  for (int u : s.Elements()) out = out.With(sigma.at(u));
  return out;
}

std::vector<double> ApplyPermutation(const Permutation& sigma,
                                     const std::vector<double>& x) {
  std::vector<double> out(x.size());
  for (size_t u = 0; u < x.size(); ++u) out[sigma.at(u)] = x[u];
  return out;
}

}  // namespace rusm
