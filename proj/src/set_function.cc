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
#include "rusm/set_function.h"

#include <stdexcept>

namespace rusm {

TableSetFunction::TableSetFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument("table functions support 1 <= n <= 24");
  }
  if (values_.size() != (size_t{1} << n)) {
    throw std::invalid_argument("table needs 2^n = " +
                                std::to_string(size_t{1} << n) +
                                " values, got " +
                                std::to_string(values_.size()));
  }
}

SetFunctionOracle::SetFunctionOracle(std::shared_ptr<const SetFunction> fn)
    : fn_(std::move(fn)) {
  if (fn_ == nullptr) throw std::invalid_argument("null set function");
}

SubsetMask LinearWeights::PositiveSupport() const {
  SubsetMask s;
  for (int u = 0; u < size(); ++u) {
    if (w_[u] > 0) s = s.With(u);
  }
  return s;
}

bool LinearWeights::IsNonNegative() const {
  for (double w : w_) {
    if (w < 0) return false;
  }
  return true;
}

bool LinearWeights::IsNonPositive() const {
  for (double w : w_) {
    if (w > 0) return false;
  }
  return true;
}

std::string ToString(EllSign sign) {
  switch (sign) {
    case EllSign::kMixed:
      return "mixed";
    case EllSign::kNonNegative:
      return "nonneg";
    case EllSign::kNonPositive:
      return "nonpos";
  }
  return "mixed";
}

EllSign ParseEllSign(const std::string& name) {
  if (name == "mixed") return EllSign::kMixed;
  if (name == "nonneg") return EllSign::kNonNegative;
  if (name == "nonpos") return EllSign::kNonPositive;
  throw std::invalid_argument("unknown ell sign '" + name +
                              "' (expected mixed, nonneg or nonpos)");
}

RusmInstance::RusmInstance(GroundSet ground,
                           std::shared_ptr<const SetFunction> g,
                           LinearWeights ell, DeclaredProperties flags)
    : ground_(std::move(ground)),
      g_(std::move(g)),
      ell_(std::move(ell)),
      flags_(flags) {
  if (g_ == nullptr) throw std::invalid_argument("instance needs a g oracle");
  if (g_->ground_size() != ground_.size()) {
    throw std::invalid_argument("g is defined on " +
                                std::to_string(g_->ground_size()) +
                                " elements but the ground set has " +
                                std::to_string(ground_.size()));
  }
  if (ell_.size() != ground_.size()) {
    throw std::invalid_argument("ell has " + std::to_string(ell_.size()) +
                                " weights but the ground set has " +
                                std::to_string(ground_.size()));
  }
}

}  // namespace rusm
