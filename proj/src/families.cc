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
#include "rusm/families.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace rusm {
namespace {

SubsetMask Range(int first, int count) {
  SubsetMask s;
  for (int u = first; u < first + count; ++u) s = s.With(u);
  return s;
}

}  // namespace

NegativeHardFunction::NegativeHardFunction(int n, double t)
    : n_(n),
      t_(t),
      a_block_(Range(2, n)),
      b_block_(Range(2 + n, n)) {
  if (n < 1 || 2 * n + 2 > kMaxElements) {
    throw std::invalid_argument("negative_sec5 needs 1 <= n and 2n+2 <= " +
                                std::to_string(kMaxElements));
  }
}

double NegativeHardFunction::Value(double t, bool has_a, bool has_b,
                                   bool any_a_block, bool any_b_block) {
  const int parity = (static_cast<int>(has_a) + static_cast<int>(has_b)) % 2;
  return t * parity + ((!has_a && any_a_block) ? 1.0 : 0.0) +
         ((!has_b && any_b_block) ? 1.0 : 0.0);
}

double NegativeHardFunction::Evaluate(SubsetMask s) const {
  return Value(t_, s.Contains(kA), s.Contains(kB),
               !s.Intersect(a_block_).IsEmpty(),
               !s.Intersect(b_block_).IsEmpty());
}

PositiveHardFunction::PositiveHardFunction(int n)
    : n_(n), c_block_(Range(2, n)) {
  if (n < 2 || n + 2 > kMaxElements) {
    throw std::invalid_argument("positive_sec61 needs 2 <= n and n+2 <= " +
                                std::to_string(kMaxElements));
  }
}

double PositiveHardFunction::Value(int64_t n, bool has_a, bool has_b,
                                   int64_t c_count) {
  const int parity = (static_cast<int>(has_a) + static_cast<int>(has_b)) % 2;
  const bool meets_ab = has_a || has_b;
  const bool c_missing = c_count < n;
  return 2.0 * parity + ((meets_ab && c_missing) ? 1.0 : 0.0);
}

double PositiveHardFunction::Evaluate(SubsetMask s) const {
  return Value(n_, s.Contains(kA), s.Contains(kB),
               s.Intersect(c_block_).Size());
}

CutFunction::CutFunction(int n, std::vector<WeightedEdge> edges)
    : n_(n),
      edges_(std::move(edges)),
      neighbors_(n, 0),
      weights_(static_cast<size_t>(n) * n, 0.0) {
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("cut graph size out of range");
  }
  for (const WeightedEdge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!(e.weight >= 0.0)) {
      throw std::invalid_argument("cut edge weights must be non-negative, got " +
                                  std::to_string(e.weight));
    }
    if (e.u == e.v) continue;  // self-loops never cross a cut
    neighbors_[e.u] |= uint64_t{1} << e.v;
    neighbors_[e.v] |= uint64_t{1} << e.u;
    weights_[e.u * n + e.v] += e.weight;
    weights_[e.v * n + e.u] += e.weight;
  }
}

double CutFunction::Evaluate(SubsetMask s) const {
  const uint64_t inside = s.bits();
  double total = 0.0;
  for (uint64_t b = inside; b != 0; b &= b - 1) {
    const int u = std::countr_zero(b);
    const double* row = &weights_[static_cast<size_t>(u) * n_];
    for (uint64_t c = neighbors_[u] & ~inside; c != 0; c &= c - 1) {
      total += row[std::countr_zero(c)];
    }
  }
  return total;
}

CoverageFunction::CoverageFunction(std::vector<std::vector<int>> sets,
                                   std::vector<double> item_values)
    : sets_(std::move(sets)), item_values_(std::move(item_values)) {
  if (sets_.empty() || static_cast<int>(sets_.size()) > kMaxElements) {
    throw std::invalid_argument("coverage needs 1..63 sets");
  }
  for (double v : item_values_) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("coverage item values must be >= 0");
    }
  }
  const int items = static_cast<int>(item_values_.size());
  words_ = (items + 63) / 64;
  coverage_.assign(sets_.size() * words_, 0);
  for (size_t u = 0; u < sets_.size(); ++u) {
    for (int item : sets_[u]) {
      if (item < 0 || item >= items) {
        throw std::invalid_argument("set " + std::to_string(u) +
                                    " references unknown item " +
                                    std::to_string(item));
      }
      coverage_[u * words_ + item / 64] |= uint64_t{1} << (item % 64);
    }
  }
}

double CoverageFunction::Evaluate(SubsetMask s) const {
  double total = 0.0;
  for (int w = 0; w < words_; ++w) {
    uint64_t covered = 0;
    for (uint64_t b = s.bits(); b != 0; b &= b - 1) {
      covered |= coverage_[std::countr_zero(b) * words_ + w];
    }
    for (; covered != 0; covered &= covered - 1) {
      total += item_values_[w * 64 + std::countr_zero(covered)];
    }
  }
  return total;
}

}  // namespace rusm
