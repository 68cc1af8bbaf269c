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
#include "rusm/instances.h"

#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace rusm {
namespace {

constexpr double kGrid = 16.0;

// Uniform on {1/16, 2/16, ..., max}.
double GridWeight(double max, Rng& rng) {
  const auto steps = static_cast<uint64_t>(std::max(1.0, std::floor(max * kGrid)));
  return static_cast<double>(1 + rng.UniformInt(steps)) / kGrid;
}

std::vector<std::string> NegativeLabels(int n) {
  std::vector<std::string> labels = {"a", "b"};
  for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  return labels;
}

std::vector<std::string> PositiveLabels(int n) {
  std::vector<std::string> labels = {"a", "b"};
  for (int i = 1; i <= n; ++i) labels.push_back("c" + std::to_string(i));
  return labels;
}

Permutation Identity(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

std::string ToString(HardFamily family) {
  switch (family) {
    case HardFamily::kMonotoneSec3:
      return "monotone_sec3";
    case HardFamily::kNegativeSec5:
      return "negative_sec5";
    case HardFamily::kPositiveSec61:
      return "positive_sec61";
  }
  return "";
}

HardFamily ParseHardFamily(const std::string& name) {
  if (name == "monotone_sec3") return HardFamily::kMonotoneSec3;
  if (name == "negative_sec5") return HardFamily::kNegativeSec5;
  if (name == "positive_sec61") return HardFamily::kPositiveSec61;
  throw std::invalid_argument("unknown hard family '" + name + "'");
}

void HardInstanceDescriptor::Validate() const {
  switch (family) {
    case HardFamily::kMonotoneSec3:
      if (n < 2) throw std::invalid_argument("monotone_sec3 needs n >= 2");
      if (!(r > 0.0 && r <= 1.0)) {
        throw std::invalid_argument("monotone_sec3 needs r in (0, 1]");
      }
      return;
    case HardFamily::kNegativeSec5:
      if (n < 1) throw std::invalid_argument("negative_sec5 needs n >= 1");
      if (!(t >= 1.0) || !std::isfinite(t)) {
        throw std::invalid_argument("negative_sec5 needs t >= 1");
      }
      if (!(r > 0.0 && r <= 0.5)) {
        throw std::invalid_argument("negative_sec5 needs r in (0, 1/2]");
      }
      return;
    case HardFamily::kPositiveSec61:
      if (n < 2) throw std::invalid_argument("positive_sec61 needs n >= 2");
      return;
  }
}

int64_t HardInstanceDescriptor::GroundSize() const {
  switch (family) {
    case HardFamily::kMonotoneSec3:
      return n;
    case HardFamily::kNegativeSec5:
      return 2 * n + 2;
    case HardFamily::kPositiveSec61:
      return n + 2;
  }
  return n;
}

InstanceBundle MakeMonotoneHard(int n, double r) {
  HardInstanceDescriptor d{HardFamily::kMonotoneSec3, n, r, 1.0};
  d.Validate();
  GroundSet ground(n);
  auto g = std::make_shared<MonotoneHardFunction>(n);
  LinearWeights ell(std::vector<double>(n, -r));
  DeclaredProperties flags{.nonnegative = true,
                           .submodular = true,
                           .monotone = true,
                           .ell_sign = EllSign::kNonPositive};
  return {RusmInstance(ground, g, ell, flags),
          PermutationGroup::FullSymmetric(n), d};
}

InstanceBundle MakeNegativeHard(int n, double t, double r) {
  HardInstanceDescriptor d{HardFamily::kNegativeSec5, n, r, t};
  d.Validate();
  auto g = std::make_shared<NegativeHardFunction>(n, t);
  const int size = g->ground_size();
  GroundSet ground(size, NegativeLabels(n));
  std::vector<double> w(size, -r);
  w[NegativeHardFunction::kA] = 0.0;
  w[NegativeHardFunction::kB] = 0.0;
  DeclaredProperties flags{.nonnegative = true,
                           .submodular = true,
                           .monotone = false,
                           .ell_sign = EllSign::kNonPositive};

  // Orbits {a, b} and {a_i, b_i}. Generators: the a <-> b swap with
  // a_i <-> b_i, and permutations of the a-block mirrored on the b-block.
  std::vector<int> ab = {NegativeHardFunction::kA, NegativeHardFunction::kB};
  std::vector<int> satellites;
  for (int i = 1; i <= n; ++i) satellites.push_back(g->AIndex(i));
  for (int i = 1; i <= n; ++i) satellites.push_back(g->BIndex(i));
  std::vector<Permutation> gens;
  Permutation swap = Identity(size);
  std::swap(swap[0], swap[1]);
  for (int i = 1; i <= n; ++i) std::swap(swap[g->AIndex(i)], swap[g->BIndex(i)]);
  gens.push_back(swap);
  if (n >= 2) {
    Permutation transposition = Identity(size);
    std::swap(transposition[g->AIndex(1)], transposition[g->AIndex(2)]);
    std::swap(transposition[g->BIndex(1)], transposition[g->BIndex(2)]);
    Permutation cycle = Identity(size);
    for (int i = 1; i <= n; ++i) {
      cycle[g->AIndex(i)] = g->AIndex(i % n + 1);
      cycle[g->BIndex(i)] = g->BIndex(i % n + 1);
    }
    gens.push_back(transposition);
    gens.push_back(cycle);
  }
  return {RusmInstance(ground, g, LinearWeights(w), flags),
          PermutationGroup(size, {ab, satellites}, gens), d};
}

InstanceBundle MakePositiveHard(int n) {
  HardInstanceDescriptor d{HardFamily::kPositiveSec61, n, 0.0, 1.0};
  d.Validate();
  auto g = std::make_shared<PositiveHardFunction>(n);
  const int size = g->ground_size();
  GroundSet ground(size, PositiveLabels(n));
  std::vector<double> w(size, 1.0 / 3.0);
  w[PositiveHardFunction::kA] = 0.0;
  w[PositiveHardFunction::kB] = 0.0;
  DeclaredProperties flags{.nonnegative = true,
                           .submodular = true,
                           .monotone = false,
                           .ell_sign = EllSign::kNonNegative};

  std::vector<int> ab = {PositiveHardFunction::kA, PositiveHardFunction::kB};
  std::vector<int> cs;
  for (int i = 1; i <= n; ++i) cs.push_back(g->CIndex(i));
  Permutation swap = Identity(size);
  std::swap(swap[0], swap[1]);
  Permutation transposition = Identity(size);
  std::swap(transposition[g->CIndex(1)], transposition[g->CIndex(2)]);
  Permutation cycle = Identity(size);
  for (int i = 1; i <= n; ++i) cycle[g->CIndex(i)] = g->CIndex(i % n + 1);
  return {RusmInstance(ground, g, LinearWeights(w), flags),
          PermutationGroup(size, {ab, cs}, {swap, transposition, cycle}), d};
}

InstanceBundle MakeHardInstance(const HardInstanceDescriptor& d) {
  d.Validate();
  if (d.GroundSize() > kMaxElements) {
    throw std::invalid_argument(
        "hard instance with " + std::to_string(d.GroundSize()) +
        " elements exceeds the subset-mask capacity; use the closed forms in "
        "hardness.h for large n");
  }
  switch (d.family) {
    case HardFamily::kMonotoneSec3:
      return MakeMonotoneHard(static_cast<int>(d.n), d.r);
    case HardFamily::kNegativeSec5:
      return MakeNegativeHard(static_cast<int>(d.n), d.t, d.r);
    case HardFamily::kPositiveSec61:
      return MakePositiveHard(static_cast<int>(d.n));
  }
  throw std::invalid_argument("unknown family");
}

RusmInstance MakeCutInstance(int n, std::vector<WeightedEdge> edges,
                             LinearWeights ell) {
  auto g = std::make_shared<CutFunction>(n, std::move(edges));
  DeclaredProperties flags{.nonnegative = true,
                           .submodular = true,
                           .monotone = false,
                           .ell_sign = ell.IsNonNegative()   ? EllSign::kNonNegative
                                       : ell.IsNonPositive() ? EllSign::kNonPositive
                                                             : EllSign::kMixed};
  return RusmInstance(GroundSet(n), g, std::move(ell), flags);
}

RusmInstance MakeCoverageInstance(std::vector<std::vector<int>> sets,
                                  std::vector<double> item_values,
                                  LinearWeights ell) {
  auto g = std::make_shared<CoverageFunction>(std::move(sets),
                                              std::move(item_values));
  const int n = g->ground_size();
  DeclaredProperties flags{.nonnegative = true,
                           .submodular = true,
                           .monotone = true,
                           .ell_sign = ell.IsNonNegative()   ? EllSign::kNonNegative
                                       : ell.IsNonPositive() ? EllSign::kNonPositive
                                                             : EllSign::kMixed};
  return RusmInstance(GroundSet(n), g, std::move(ell), flags);
}

std::string ToString(RandomKind kind) {
  return kind == RandomKind::kCut ? "cut" : "coverage";
}

RandomKind ParseRandomKind(const std::string& name) {
  if (name == "cut") return RandomKind::kCut;
  if (name == "coverage") return RandomKind::kCoverage;
  throw std::invalid_argument("unknown random family '" + name + "'");
}

RusmInstance MakeRandomInstance(int n, const RandomFamilyParams& params,
                                Rng& rng) {
  if (n < 1 || n > 14) {
    throw std::invalid_argument("random instances are meant for 1 <= n <= 14");
  }
  std::vector<double> w(n);
  for (int u = 0; u < n; ++u) {
    const double magnitude =
        static_cast<double>(rng.UniformInt(
            static_cast<uint64_t>(params.ell_scale * kGrid) + 1)) /
        kGrid;
    switch (params.ell_sign) {
      case EllSign::kNonNegative:
        w[u] = magnitude;
        break;
      case EllSign::kNonPositive:
        w[u] = -magnitude;
        break;
      case EllSign::kMixed:
        w[u] = rng.Bernoulli(0.5) ? magnitude : -magnitude;
        break;
    }
  }
  LinearWeights ell(w);

  if (params.kind == RandomKind::kCut) {
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.Bernoulli(params.edge_probability)) {
          edges.push_back({u, v, GridWeight(params.max_weight, rng)});
        }
      }
    }
    RusmInstance inst = MakeCutInstance(n, std::move(edges), ell);
    DeclaredProperties flags = inst.flags();
    flags.ell_sign = params.ell_sign;
    return RusmInstance(inst.ground(), inst.g(), ell, flags);
  }

  const int items = params.universe_size > 0 ? params.universe_size : 2 * n;
  std::vector<double> values(items);
  for (double& v : values) v = GridWeight(params.max_weight, rng);
  std::vector<std::vector<int>> sets(n);
  for (int u = 0; u < n; ++u) {
    for (int item = 0; item < items; ++item) {
      if (rng.Bernoulli(params.item_probability)) sets[u].push_back(item);
    }
  }
  RusmInstance inst = MakeCoverageInstance(std::move(sets), std::move(values), ell);
  DeclaredProperties flags = inst.flags();
  flags.ell_sign = params.ell_sign;
  return RusmInstance(inst.ground(), inst.g(), ell, flags);
}

}  // namespace rusm
