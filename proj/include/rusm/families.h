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
#ifndef RUSM_FAMILIES_H_
#define RUSM_FAMILIES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rusm/set_function.h"
#include "rusm/subset.h"

namespace rusm {

// g(S) = min(|S|, 1).
class MonotoneHardFunction : public SetFunction {
 public:
  explicit MonotoneHardFunction(int n) : n_(n) {}
  int ground_size() const override { return n_; }
  double Evaluate(SubsetMask s) const override {
    return ValueFromCount(s.Size());
  }
  std::string kind() const override { return "monotone_sec3"; }
  static double ValueFromCount(int64_t k) { return k >= 1 ? 1.0 : 0.0; }

 private:
  int n_;
};

// Ground set {a, b} + {a_1..a_n} + {b_1..b_n}, laid out as a = 0, b = 1,
// a_i = 1 + i, b_i = 1 + n + i for i = 1..n.
//   g(S) = t * (|S & {a,b}| mod 2)
//        + [a not in S] * [S meets {a_i}] + [b not in S] * [S meets {b_i}].
class NegativeHardFunction : public SetFunction {
 public:
  NegativeHardFunction(int n, double t);
  int ground_size() const override { return 2 * n_ + 2; }
  double Evaluate(SubsetMask s) const override;
  std::string kind() const override { return "negative_sec5"; }

  int block_size() const { return n_; }
  double t() const { return t_; }
  static constexpr int kA = 0;
  static constexpr int kB = 1;
  int AIndex(int i) const { return 1 + i; }       // i in 1..n
  int BIndex(int i) const { return 1 + n_ + i; }  // i in 1..n
  SubsetMask ABlock() const { return a_block_; }
  SubsetMask BBlock() const { return b_block_; }

  // Closed form from membership of a, b and whether any a_i / b_i is present.
  static double Value(double t, bool has_a, bool has_b, bool any_a_block,
                      bool any_b_block);

 private:
  int n_;
  double t_;
  SubsetMask a_block_;
  SubsetMask b_block_;
};

// Ground set {a, b} + {c_1..c_n}, laid out as a = 0, b = 1, c_i = 1 + i.
//   g(S) = 2 * (|S & {a,b}| mod 2) + [S meets {a,b}] * [{c_i} not inside S].
class PositiveHardFunction : public SetFunction {
 public:
  explicit PositiveHardFunction(int n);
  int ground_size() const override { return n_ + 2; }
  double Evaluate(SubsetMask s) const override;
  std::string kind() const override { return "positive_sec61"; }

  int block_size() const { return n_; }
  static constexpr int kA = 0;
  static constexpr int kB = 1;
  int CIndex(int i) const { return 1 + i; }  // i in 1..n
  SubsetMask CBlock() const { return c_block_; }

  static double Value(int64_t n, bool has_a, bool has_b, int64_t c_count);

 private:
  int n_;
  SubsetMask c_block_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

// Total weight of edges with exactly one endpoint in S.
class CutFunction : public SetFunction {
 public:
  CutFunction(int n, std::vector<WeightedEdge> edges);
  int ground_size() const override { return n_; }
  double Evaluate(SubsetMask s) const override;
  std::string kind() const override { return "cut"; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<uint64_t> neighbors_;  // adjacency mask per vertex
  std::vector<double> weights_;      // n x n, symmetric
};

// Element u picks the universe items in sets[u]; g(S) is the total value of
// the items covered by the chosen sets.
class CoverageFunction : public SetFunction {
 public:
  CoverageFunction(std::vector<std::vector<int>> sets,
                   std::vector<double> item_values);
  int ground_size() const override { return static_cast<int>(sets_.size()); }
  double Evaluate(SubsetMask s) const override;
  std::string kind() const override { return "coverage"; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<double>& item_values() const { return item_values_; }

 private:
  std::vector<std::vector<int>> sets_;
  std::vector<double> item_values_;
  int words_ = 0;
  std::vector<uint64_t> coverage_;  // sets_.size() x words_
};

}  // namespace rusm

#endif  // RUSM_FAMILIES_H_
