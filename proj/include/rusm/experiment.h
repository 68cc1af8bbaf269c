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

#ifndef RUSM_EXPERIMENT_H_
#define RUSM_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rusm/solvers.h"

namespace rusm {

enum class Algorithm { kLocalSearch, kDgDet, kDgRand, kBrute };

std::string ToString(Algorithm algorithm);
Algorithm ParseAlgorithm(const std::string& name);
bool IsRandomized(Algorithm algorithm);

// Runs one algorithm once; `seed` feeds the randomized ones.
SolverReport RunSolver(const RusmInstance& instance, Algorithm algorithm,
                       const LsConfig& ls_config, uint64_t seed);

struct GuaranteeCheck {
  double alpha = 0.0;
  double beta = 0.0;
};

struct ExperimentSpec {
  // Instance document in the instance JSON schema; loaded from
  // instance_path when that is set.
  std::string instance_path;
  nlohmann::json instance_doc;
  Algorithm algorithm = Algorithm::kDgDet;
  LsConfig ls_config;
  int64_t trials = 1;
  uint64_t master_seed = 0;
  std::vector<GuaranteeCheck> checks;
  std::string json_out;
  std::string csv_out;
  // 0 means RUSM_THREADS, or the hardware concurrency when that is unset.
  int threads = 0;
};

struct TrialResult {
  int64_t trial = 0;
  uint64_t seed = 0;
  double g_value = 0.0;
  double ell_value = 0.0;
  double total = 0.0;
  int64_t queries = 0;
  std::vector<int> output_set;
  // Local search in exact mode only.
  std::optional<double> expected_output_value;
};

struct CheckResult {
  GuaranteeCheck check;
  std::string label;  // "guaranteed" or "exploratory"
  double rhs = 0.0;
  std::vector<int> rhs_witness;
  double slack = 0.0;
  bool passed = false;
  // Same comparison against the mean exact expectation, zero slack.
  std::optional<bool> exact_passed;
};

struct ExperimentResult {
  std::string algorithm;
  uint64_t master_seed = 0;
  int64_t trials = 0;
  std::vector<TrialResult> per_trial;  // sorted by trial index
  double mean = 0.0;
  double stderr_value = 0.0;
  std::optional<double> exact_expectation_mean;
  std::vector<CheckResult> checks;
  int64_t total_queries = 0;
  double wall_time_seconds = 0.0;
  nlohmann::json instance;
  nlohmann::json config;

  // True unless a "guaranteed" check failed.
  bool GuaranteesHold() const;
};

// "guaranteed" when (alpha, beta) lies in the algorithm's proven region for
// this instance, else "exploratory".
std::string GuaranteeLabel(Algorithm algorithm, const LsConfig& ls_config,
                           const RusmInstance& instance,
                           const GuaranteeCheck& check);

// Worker count from RUSM_THREADS, falling back to the hardware concurrency.
int DefaultThreadCount();

ExperimentResult RunExperiment(const ExperimentSpec& spec);

nlohmann::json ToJson(const ExperimentResult& result);
// trial,seed,g_value,ell_value,total,queries
std::string TrialsToCsv(const ExperimentResult& result);

}  // namespace rusm

#endif  // RUSM_EXPERIMENT_H_
