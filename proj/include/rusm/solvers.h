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

#ifndef RUSM_SOLVERS_H_
#define RUSM_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rusm/core.h"
#include "rusm/random.h"
#include "rusm/set_function.h"

namespace rusm {

enum class MarginalMode { kExact, kSampled };

std::string ToString(MarginalMode mode);
MarginalMode ParseMarginalMode(const std::string& name);

struct LsConfig {
  double beta = 0.5;
  double epsilon = 0.05;
  MarginalMode marginal_mode = MarginalMode::kExact;
  // Samples per marginal estimate in sampled mode; the default is the
  // worst-case bound ceil(128 n^4 eps^-2 beta^2 ln(10 n^4 / eps)).
  std::optional<int64_t> sample_count_override;
  std::optional<int64_t> iteration_cap_override;
  uint64_t seed = 0;
  // Requires epsilon in (0, alpha(beta)), the range the guarantee covers.
  bool guarantee_mode = true;
  int exact_limit = kDefaultExactLimit;

  void Validate() const;
};

// Sampled mode refuses sample counts above this unless overridden.
inline constexpr int64_t kMaxSamplesPerEstimate = 100'000'000;

enum class MoveKind { kAdd, kRemove };

struct Move {
  int64_t iteration = 0;
  MoveKind kind = MoveKind::kAdd;
  int element = 0;
  // omega_u + beta(1+beta) l(u) for adds, its negation for removes.
  double estimated_gain = 0.0;
};

struct LocalSearchDetails {
  SubsetMask filtered_ground;  // {u : alpha(beta) g(u) + beta l(u) >= 0}
  SubsetMask initial_set;
  SubsetMask final_set;        // T when the loop exits
  SubsetMask subsample;        // the sample of T(beta)
  double delta = 0.0;
  int64_t iterations = 0;
  int64_t iteration_cap = 0;
  int64_t samples_per_estimate = 0;  // 0 in exact mode
  // "local_optimum", "iteration_cap", "zero_function" or "empty_ground".
  std::string exit_reason;
  // Which candidate won the final comparison: "local_search", "empty" or
  // "singleton".
  std::string selected;
  // Exact-mode diagnostics, computed outside the query budget:
  // E[f(T(beta))] and the expected value of the whole pipeline's output.
  std::optional<double> expected_subsample_value;
  std::optional<double> expected_output_value;
};

struct DgStep {
  int element = 0;
  double a = 0.0;  // f(u | X_{i-1})
  double b = 0.0;  // -f(u | Y_{i-1} - u)
  bool added = false;
  SubsetMask x_set;  // X_i
  SubsetMask y_set;  // Y_i
};

struct SolverReport {
  std::string algorithm;
  SubsetMask output_set;
  double g_value = 0.0;
  double ell_value = 0.0;
  int64_t oracle_queries = 0;
  uint64_t seed = 0;
  std::vector<Move> move_trace;
  std::optional<LocalSearchDetails> local_search;
  std::vector<DgStep> dg_trace;

  double total() const { return g_value + ell_value; }
};

// h(S) = E[g(S(beta))] + beta (1 + beta) l(S). Exact mode enumerates the
// 2^|S| subsets of S; sampled mode averages `samples` draws from rng.
double AuxValueH(const SetFunctionOracle& g, const LinearWeights& ell,
                 SubsetMask s, double beta, MarginalMode mode,
                 Rng* rng = nullptr, int64_t samples = 0,
                 int exact_limit = kDefaultExactLimit);
double AuxValueH(const RusmInstance& instance, SubsetMask s, double beta,
                 MarginalMode mode, Rng* rng = nullptr, int64_t samples = 0,
                 int exact_limit = kDefaultExactLimit);

// ceil(128 n^4 eps^-2 beta^2 ln(10 n^4 / eps)), as a double since it
// overflows integers quickly.
double WorstCaseSampleCount(int n, double epsilon, double beta);
// ceil(4 n^2 / eps) + 1.
int64_t LocalSearchIterationCap(int n, double epsilon);

// Non-oblivious local search for general (g, l), wrapped with the element
// filter and the best-of-{empty, singletons} comparison.
SolverReport LocalSearch(const RusmInstance& instance, const LsConfig& config);

// Deterministic double greedy over `order` (identity when empty).
SolverReport DoubleGreedyDeterministic(const RusmInstance& instance,
                                       std::vector<int> order = {});
// Randomized double greedy; seed recorded from rng.
SolverReport DoubleGreedyRandomized(const RusmInstance& instance,
                                    std::vector<int> order, Rng& rng);

struct BruteForceResult {
  SubsetMask set;
  double value = 0.0;
};

inline constexpr int kMaxBruteForceElements = 24;

// argmax over all S of alpha g(S) + beta l(S); ties go to the smallest mask.
BruteForceResult BruteForceOpt(const RusmInstance& instance, double alpha,
                               double beta);
// Brute-force maximizer of g + l, packaged as a report.
SolverReport BruteForceSolve(const RusmInstance& instance);

}  // namespace rusm

#endif  // RUSM_SOLVERS_H_
