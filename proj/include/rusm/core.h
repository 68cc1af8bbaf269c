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
#ifndef RUSM_CORE_H_
#define RUSM_CORE_H_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rusm/permutation_group.h"
#include "rusm/random.h"
#include "rusm/set_function.h"
#include "rusm/subset.h"

namespace rusm {

// Exact expectations enumerate 2^n subsets; beyond this they are refused.
inline constexpr int kDefaultExactLimit = 20;

// Absolute slack used by every floating-point comparison in validators and
// guarantee checks.
inline constexpr double kTolerance = 1e-9;

// A point of [0,1]^n.
class DistributionVector {
 public:
  explicit DistributionVector(std::vector<double> x);
  static DistributionVector Indicator(int n, SubsetMask s);
  static DistributionVector Constant(int n, double value);

  int size() const { return static_cast<int>(x_.size()); }
  double operator[](int u) const { return x_[u]; }
  const std::vector<double>& values() const { return x_; }
  double L1Norm() const;

 private:
  std::vector<double> x_;
};

// f(u | S) = f(S + u) - f(S). Always two oracle queries.
double Marginal(const SetFunctionOracle& f, int u, SubsetMask s);

// Keeps each element of s independently with probability p.
SubsetMask Subsample(SubsetMask s, double p, Rng& rng);

// Sum over R subset of s of P[s(p) = R] * fn(R), where s(p) keeps each element
// independently with probability p.
template <typename Fn>
double ExpectOverSubsamples(SubsetMask s, double p, Fn&& fn) {
  const int m = s.Size();
  std::vector<double> keep(m + 1, 1.0), drop(m + 1, 1.0);
  for (int k = 1; k <= m; ++k) {
    keep[k] = keep[k - 1] * p;
    drop[k] = drop[k - 1] * (1.0 - p);
  }
  double total = 0.0;
  ForEachSubset(s, [&](SubsetMask r) {
    const int k = r.Size();
    const double weight = keep[k] * drop[m - k];
    const double value = fn(r);
    if (weight != 0.0) total += weight * value;
  });
  return total;
}

// Multilinear extension by full enumeration: exactly 2^n queries.
double MultilinearExact(const SetFunctionOracle& f,
                        const DistributionVector& x,
                        int exact_limit = kDefaultExactLimit);

struct MonteCarloEstimate {
  double estimate = 0.0;
  // Sample standard deviation over sqrt(num_samples); 0 for one sample.
  double stderr_value = 0.0;
};

// Sample mean of f(RSet(x)) over num_samples independent draws.
MonteCarloEstimate MultilinearMonteCarlo(const SetFunctionOracle& f,
                                         const DistributionVector& x,
                                         int64_t num_samples, Rng& rng);

// Replaces each coordinate by the mean of x over its orbit.
DistributionVector Symmetrize(const DistributionVector& x,
                              const PermutationGroup& group);

struct SamplingLemmaResult {
  double mean = 0.0;          // E[f(A_p)], exact or estimated
  double stderr_value = 0.0;  // 0 for the exact variant
  double rhs = 0.0;           // (1 - p) f(empty) + p f(A)
  bool passed = false;
};

// Monte-Carlo check of E[f(A_p)] >= (1-p) f(empty) + p f(A): passes iff the
// empirical mean is at least rhs - 4 stderr.
SamplingLemmaResult SamplingLemmaMonteCarlo(const SetFunctionOracle& f,
                                            SubsetMask a, double p,
                                            int64_t trials, Rng& rng);
bool SamplingLemmaCheck(const SetFunctionOracle& f, SubsetMask a, double p,
                        int64_t trials, Rng& rng);

// Same inequality with E[f(A_p)] computed by enumerating subsets of A.
SamplingLemmaResult SamplingLemmaExact(const SetFunctionOracle& f,
                                       SubsetMask a, double p,
                                       int exact_limit = kDefaultExactLimit);

inline void CheckProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

}  // namespace rusm

#endif  // RUSM_CORE_H_
