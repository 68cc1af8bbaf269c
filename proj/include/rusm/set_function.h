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
#ifndef RUSM_SET_FUNCTION_H_
#define RUSM_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rusm/subset.h"

namespace rusm {

// A real-valued function on subsets of {0, ..., n-1}. Implementations are
// immutable and may be evaluated concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int ground_size() const = 0;
  virtual double Evaluate(SubsetMask s) const = 0;
  // Short family name, e.g. "cut".
  virtual std::string kind() const = 0;
};

// Wraps an arbitrary callable; mostly for tests and tabulated inputs.
class LambdaSetFunction : public SetFunction {
 public:
  LambdaSetFunction(int n, std::function<double(SubsetMask)> fn,
                    std::string kind = "lambda")
      : n_(n), fn_(std::move(fn)), kind_(std::move(kind)) {}
  int ground_size() const override { return n_; }
  double Evaluate(SubsetMask s) const override { return fn_(s); }
  std::string kind() const override { return kind_; }

 private:
  int n_;
  std::function<double(SubsetMask)> fn_;
  std::string kind_;
};

// Explicit value table over all 2^n subsets, indexed by mask.
class TableSetFunction : public SetFunction {
 public:
  explicit TableSetFunction(int n, std::vector<double> values);
  int ground_size() const override { return n_; }
  double Evaluate(SubsetMask s) const override { return values_[s.bits()]; }
  std::string kind() const override { return "table"; }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

// Value oracle: the only access path algorithms have to g. Each Evaluate call
// counts as exactly one query. Copies share the function but start a fresh
// counter, so each worker keeps its own tally.
class SetFunctionOracle {
 public:
  explicit SetFunctionOracle(std::shared_ptr<const SetFunction> fn);
  SetFunctionOracle(const SetFunctionOracle& other) : fn_(other.fn_) {}
  SetFunctionOracle& operator=(const SetFunctionOracle& other) {
    fn_ = other.fn_;
    queries_.store(0, std::memory_order_relaxed);
    return *this;
  }

  int ground_size() const { return fn_->ground_size(); }
  double Evaluate(SubsetMask s) const {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return fn_->Evaluate(s);
  }
  double operator()(SubsetMask s) const { return Evaluate(s); }

  int64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }
  void ResetQueryCount() const { queries_.store(0, std::memory_order_relaxed); }

  const std::shared_ptr<const SetFunction>& function() const { return fn_; }

 private:
  std::shared_ptr<const SetFunction> fn_;
  mutable std::atomic<int64_t> queries_{0};
};

// l(S) = sum of w_u over u in S, recomputed on every call.
class LinearWeights {
 public:
  LinearWeights() = default;
  explicit LinearWeights(std::vector<double> w) : w_(std::move(w)) {}
  static LinearWeights Zero(int n) {
    return LinearWeights(std::vector<double>(n, 0.0));
  }

  int size() const { return static_cast<int>(w_.size()); }
  double Weight(int u) const { return w_.at(u); }
  std::span<const double> weights() const { return w_; }
  double Evaluate(SubsetMask s) const {
    double total = 0.0;
    for (uint64_t b = s.bits(); b != 0; b &= b - 1) {
      total += w_[std::countr_zero(b)];
    }
    return total;
  }
  double operator()(SubsetMask s) const { return Evaluate(s); }
  SubsetMask PositiveSupport() const;
  bool IsNonNegative() const;
  bool IsNonPositive() const;

 private:
  std::vector<double> w_;
};

enum class EllSign { kMixed, kNonNegative, kNonPositive };

std::string ToString(EllSign sign);
EllSign ParseEllSign(const std::string& name);

// Properties an instance claims; validators check them on small inputs.
struct DeclaredProperties {
  bool nonnegative = true;
  bool submodular = true;
  bool monotone = false;
  EllSign ell_sign = EllSign::kMixed;
};

// A pair (g, l) over a common ground set.
class RusmInstance {
 public:
  RusmInstance(GroundSet ground, std::shared_ptr<const SetFunction> g,
               LinearWeights ell, DeclaredProperties flags);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  // A fresh oracle over g with a zeroed query counter.
  SetFunctionOracle NewOracle() const { return SetFunctionOracle(g_); }
  const std::shared_ptr<const SetFunction>& g() const { return g_; }
  const LinearWeights& ell() const { return ell_; }
  const DeclaredProperties& flags() const { return flags_; }

  // g(S) + l(S) without going through an oracle.
  double Objective(SubsetMask s) const { return g_->Evaluate(s) + ell_(s); }

 private:
  GroundSet ground_;
  std::shared_ptr<const SetFunction> g_;
  LinearWeights ell_;
  DeclaredProperties flags_;
};

}  // namespace rusm

#endif  // RUSM_SET_FUNCTION_H_
