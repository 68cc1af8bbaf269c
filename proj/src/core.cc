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
#include "rusm/core.h"

#include <cmath>
#include <numeric>

namespace rusm {
namespace {

// Running mean and variance.
class Welford {
 public:
  void Add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  double mean() const { return mean_; }
  double StandardError() const {
    if (count_ < 2) return 0.0;
    const double variance = m2_ / static_cast<double>(count_ - 1);
    return std::sqrt(variance / static_cast<double>(count_));
  }

 private:
  int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

void CheckSameSize(const SetFunctionOracle& f, const DistributionVector& x) {
  if (f.ground_size() != x.size()) {
    throw std::invalid_argument("vector has " + std::to_string(x.size()) +
                                " coordinates but f has ground size " +
                                std::to_string(f.ground_size()));
  }
}

SubsetMask SampleRandomSet(const DistributionVector& x, Rng& rng) {
  SubsetMask s;
  for (int u = 0; u < x.size(); ++u) {
    if (rng.Bernoulli(x[u])) s = s.With(u);
  }
  return s;
}

}  // namespace

DistributionVector::DistributionVector(std::vector<double> x)
    : x_(std::move(x)) {
  if (x_.empty() || static_cast<int>(x_.size()) > kMaxElements) {
    throw std::invalid_argument("distribution vector size out of range");
  }
  for (size_t u = 0; u < x_.size(); ++u) {
    if (!(x_[u] >= 0.0 && x_[u] <= 1.0)) {
      throw std::invalid_argument("coordinate " + std::to_string(u) +
                                  " = " + std::to_string(x_[u]) +
                                  " outside [0, 1]");
    }
  }
}

DistributionVector DistributionVector::Indicator(int n, SubsetMask s) {
  std::vector<double> x(n, 0.0);
  for (int u : s.Elements()) x.at(u) = 1.0;
  return DistributionVector(std::move(x));
}

DistributionVector DistributionVector::Constant(int n, double value) {
  return DistributionVector(std::vector<double>(n, value));
}

double DistributionVector::L1Norm() const {
  return std::accumulate(x_.begin(), x_.end(), 0.0);
}

double Marginal(const SetFunctionOracle& f, int u, SubsetMask s) {
  if (u < 0 || u >= f.ground_size()) {
    throw std::out_of_range("element " + std::to_string(u) +
                            " outside ground set of size " +
                            std::to_string(f.ground_size()));
  }
  return f(s.With(u)) - f(s);
}

SubsetMask Subsample(SubsetMask s, double p, Rng& rng) {
  CheckProbability(p, "subsample probability");
  SubsetMask out;
  for (int u : s.Elements()) {
    if (rng.Bernoulli(p)) out = out.With(u);
  }
  return out;
}

double MultilinearExact(const SetFunctionOracle& f,
                        const DistributionVector& x, int exact_limit) {
  CheckSameSize(f, x);
  const int n = x.size();
  if (n > exact_limit) {
    throw std::invalid_argument("exact multilinear extension needs n <= " +
                                std::to_string(exact_limit) + ", got " +
                                std::to_string(n));
  }
  double total = 0.0;
  ForEachSubset(SubsetMask::Full(n), [&](SubsetMask s) {
    double weight = 1.0;
    for (int u = 0; u < n; ++u) weight *= s.Contains(u) ? x[u] : 1.0 - x[u];
    const double value = f(s);
    if (weight != 0.0) total += weight * value;
  });
  return total;
}

MonteCarloEstimate MultilinearMonteCarlo(const SetFunctionOracle& f,
                                         const DistributionVector& x,
                                         int64_t num_samples, Rng& rng) {
  CheckSameSize(f, x);
  if (num_samples < 1) {
    throw std::invalid_argument("num_samples must be >= 1");
  }
  Welford stats;
  for (int64_t i = 0; i < num_samples; ++i) {
    stats.Add(f(SampleRandomSet(x, rng)));
  }
  return {stats.mean(), stats.StandardError()};
}

DistributionVector Symmetrize(const DistributionVector& x,
                              const PermutationGroup& group) {
  if (group.size() != x.size()) {
    throw std::invalid_argument("group acts on " +
                                std::to_string(group.size()) +
                                " elements but the vector has " +
                                std::to_string(x.size()));
  }
  std::vector<double> out(x.size());
  for (const std::vector<int>& orbit : group.orbits()) {
    double sum = 0.0;
    for (int u : orbit) sum += x[u];
    const double mean = sum / static_cast<double>(orbit.size());
    for (int u : orbit) out[u] = mean;
  }
  return DistributionVector(std::move(out));
}

SamplingLemmaResult SamplingLemmaMonteCarlo(const SetFunctionOracle& f,
                                            SubsetMask a, double p,
                                            int64_t trials, Rng& rng) {
  CheckProbability(p, "p");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SamplingLemmaResult result;
  result.rhs = (1.0 - p) * f(SubsetMask()) + p * f(a);
  Welford stats;
  for (int64_t i = 0; i < trials; ++i) stats.Add(f(Subsample(a, p, rng)));
  result.mean = stats.mean();
  result.stderr_value = stats.StandardError();
  result.passed = result.mean >= result.rhs - 4.0 * result.stderr_value -
                                     kTolerance;
  return result;
}

bool SamplingLemmaCheck(const SetFunctionOracle& f, SubsetMask a, double p,
                        int64_t trials, Rng& rng) {
  return SamplingLemmaMonteCarlo(f, a, p, trials, rng).passed;
}

SamplingLemmaResult SamplingLemmaExact(const SetFunctionOracle& f,
                                       SubsetMask a, double p,
                                       int exact_limit) {
  CheckProbability(p, "p");
  if (a.Size() > exact_limit) {
    throw std::invalid_argument("exact sampling expectation needs |A| <= " +
                                std::to_string(exact_limit));
  }
  SamplingLemmaResult result;
  result.rhs = (1.0 - p) * f(SubsetMask()) + p * f(a);
  result.mean = ExpectOverSubsamples(a, p, [&](SubsetMask r) { return f(r); });
  result.passed = result.mean >= result.rhs - kTolerance;
  return result;
}

}  // namespace rusm
