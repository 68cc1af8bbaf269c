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

#ifndef RUSM_SUBSET_H_
#define RUSM_SUBSET_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rusm {

// Largest ground set that fits in a machine-word mask.
inline constexpr int kMaxElements = 63;

// A subset of a ground set {0, ..., n-1}, one bit per element.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask Empty() { return SubsetMask(); }
  // {0, ..., n-1}.
  static constexpr SubsetMask Full(int n) {
    return SubsetMask(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static constexpr SubsetMask Singleton(int u) {
    return SubsetMask(uint64_t{1} << u);
  }
  static SubsetMask FromElements(const std::vector<int>& elements);

  constexpr uint64_t bits() const { return bits_; }
  constexpr int Size() const { return std::popcount(bits_); }
  constexpr bool IsEmpty() const { return bits_ == 0; }
  constexpr bool Contains(int u) const { return (bits_ >> u) & 1; }

  // S + u and S - u.
  constexpr SubsetMask With(int u) const {
    return SubsetMask(bits_ | (uint64_t{1} << u));
  }
  constexpr SubsetMask Without(int u) const {
    return SubsetMask(bits_ & ~(uint64_t{1} << u));
  }

  constexpr SubsetMask Union(SubsetMask other) const {
    return SubsetMask(bits_ | other.bits_);
  }
  constexpr SubsetMask Intersect(SubsetMask other) const {
    return SubsetMask(bits_ & other.bits_);
  }
  constexpr SubsetMask Minus(SubsetMask other) const {
    return SubsetMask(bits_ & ~other.bits_);
  }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> Elements() const;
  // "{0, 3, 5}".
  std::string ToString() const;

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  uint64_t bits_ = 0;
};

// Calls fn(R) for every R subset of `set`, in increasing mask order.
template <typename Fn>
void ForEachSubset(SubsetMask set, Fn&& fn) {
  const uint64_t s = set.bits();
  uint64_t r = 0;
  while (true) {
    fn(SubsetMask(r));
    if (r == s) break;
    r = (r - s) & s;
  }
}

class GroundSet {
 public:
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }
  // Label of element u, or its index when unlabeled.
  std::string Label(int u) const;
  SubsetMask All() const { return SubsetMask::Full(n_); }
  void CheckElement(int u) const {
    if (u < 0 || u >= n_) {
      throw std::out_of_range("element " + std::to_string(u) +
                              " outside ground set of size " +
                              std::to_string(n_));
    }
  }
  void CheckMask(SubsetMask s) const {
    if (!s.IsSubsetOf(All())) {
      throw std::out_of_range("subset " + s.ToString() +
                              " outside ground set of size " +
                              std::to_string(n_));
    }
  }

 private:
  int n_;
  std::optional<std::vector<std::string>> labels_;
};

}  // namespace rusm

#endif  // RUSM_SUBSET_H_
