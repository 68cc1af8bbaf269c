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

#include "rusm/subset.h"

#include <set>

namespace rusm {

SubsetMask SubsetMask::FromElements(const std::vector<int>& elements) {
  SubsetMask s;
  for (int u : elements) {
    if (u < 0 || u >= kMaxElements) {
      throw std::out_of_range("element index " + std::to_string(u) +
                              " not representable in a subset mask");
    }
    s = s.With(u);
  }
  return s;
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  out.reserve(Size());
  for (uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string SubsetMask::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int u : Elements()) {
    if (!first) out += ", ";
    out += std::to_string(u);
    first = false;
  }
  return out + "}";
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("ground set size must be in [1, " +
                                std::to_string(kMaxElements) + "], got " +
                                std::to_string(n));
  }
}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : GroundSet(n) {
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " labels, got " +
                                std::to_string(labels.size()));
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw std::invalid_argument("element labels must be distinct");
  }
  labels_ = std::move(labels);
}

std::string GroundSet::Label(int u) const {
  CheckElement(u);
  return labels_ ? (*labels_)[u] : std::to_string(u);
}

}  // namespace rusm
