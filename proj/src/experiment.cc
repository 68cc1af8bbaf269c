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

#include "rusm/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "rusm/hardness.h"
#include "rusm/instance_io.h"
#include "rusm/serialize.h"

namespace rusm {
namespace {

using nlohmann::json;

bool AtMost(double a, double b) { return a <= b + kTolerance; }

// beta compared against the proven coefficient given the sign of l: a
// smaller coefficient is weaker when l >= 0 and stronger when l <= 0.
bool BetaCovered(const RusmInstance& instance, double beta, double proven) {
  if (instance.ell().IsNonNegative() && AtMost(beta, proven)) return true;
  if (instance.ell().IsNonPositive() && AtMost(proven, beta)) return true;
  return std::abs(beta - proven) <= kTolerance;
}

}  // namespace

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLocalSearch:
      return "ls";
    case Algorithm::kDgDet:
      return "dg-det";
    case Algorithm::kDgRand:
      return "dg-rand";
    case Algorithm::kBrute:
      return "brute";
  }
  return "";
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "ls") return Algorithm::kLocalSearch;
  if (name == "dg-det") return Algorithm::kDgDet;
  if (name == "dg-rand") return Algorithm::kDgRand;
  if (name == "brute") return Algorithm::kBrute;
  throw std::invalid_argument("unknown algorithm: " + name);
}

bool IsRandomized(Algorithm algorithm) {
  return algorithm == Algorithm::kLocalSearch ||
         algorithm == Algorithm::kDgRand;
}

SolverReport RunSolver(const RusmInstance& instance, Algorithm algorithm,
                       const LsConfig& ls_config, uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kLocalSearch: {
      LsConfig config = ls_config;
      config.seed = seed;
      return LocalSearch(instance, config);
    }
    case Algorithm::kDgDet:
      return DoubleGreedyDeterministic(instance);
    case Algorithm::kDgRand: {
      Rng rng(seed);
      return DoubleGreedyRandomized(instance, {}, rng);
    }
    case Algorithm::kBrute:
      return BruteForceSolve(instance);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::string GuaranteeLabel(Algorithm algorithm, const LsConfig& ls_config,
                           const RusmInstance& instance,
                           const GuaranteeCheck& check) {
  const double alpha = check.alpha;
  const double beta = check.beta;
  const DeclaredProperties& flags = instance.flags();
  bool ok = alpha >= 0.0 && flags.nonnegative && flags.submodular;
  switch (algorithm) {
    case Algorithm::kDgDet:
      ok = ok && instance.ell().IsNonNegative() && AtMost(alpha, 1.0 / 3.0) &&
           AtMost(beta, 1.0 - alpha);
      break;
    case Algorithm::kDgRand:
      ok = ok && instance.ell().IsNonNegative() && AtMost(alpha, 0.5) &&
           AtMost(beta, 1.0 - alpha / 2.0);
      break;
    case Algorithm::kLocalSearch: {
      const double b = ls_config.beta;
      const double eps = ls_config.epsilon;
      const bool faithful =
          ls_config.guarantee_mode && !ls_config.iteration_cap_override &&
          (ls_config.marginal_mode == MarginalMode::kExact ||
           !ls_config.sample_count_override);
      ok = ok && faithful && b > 0.0 && b <= 1.0 &&
           AtMost(alpha, AlphaGeneral(b) - eps) &&
           BetaCovered(instance, beta, b - eps);
      break;
    }
    case Algorithm::kBrute:
      ok = ok && AtMost(alpha, 1.0) && BetaCovered(instance, beta, 1.0);
      break;
  }
  return ok ? "guaranteed" : "exploratory";
}

int DefaultThreadCount() {
  if (const char* env = std::getenv("RUSM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

bool ExperimentResult::GuaranteesHold() const {
  for (const CheckResult& c : checks) {
    if (c.label != "guaranteed") continue;
    if (!c.passed) return false;
    if (c.exact_passed && !*c.exact_passed) return false;
  }
  return true;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const LoadedInstance loaded = spec.instance_path.empty()
                                    ? InstanceFromJson(spec.instance_doc)
                                    : LoadInstance(spec.instance_path);
  const RusmInstance& instance = loaded.instance;
  if (!spec.checks.empty() && instance.size() > kMaxBruteForceElements) {
    throw std::invalid_argument(
        "guarantee checks need brute force, which supports at most " +
        std::to_string(kMaxBruteForceElements) + " elements");
  }
  if (spec.algorithm == Algorithm::kLocalSearch) spec.ls_config.Validate();

  ExperimentResult result;
  result.algorithm = ToString(spec.algorithm);
  result.master_seed = spec.master_seed;
  result.trials = spec.trials;
  result.per_trial.resize(spec.trials);

  const int threads = static_cast<int>(std::min<int64_t>(
      spec.threads > 0 ? spec.threads : DefaultThreadCount(), spec.trials));
  std::atomic<int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto worker = [&] {
    for (;;) {
      const int64_t i = next.fetch_add(1);
      if (i >= spec.trials) return;
      try {
        const uint64_t seed =
            Rng::DeriveSeed(spec.master_seed, static_cast<uint64_t>(i));
        const SolverReport r =
            RunSolver(instance, spec.algorithm, spec.ls_config, seed);
        TrialResult& t = result.per_trial[i];
        t.trial = i;
        t.seed = seed;
        t.g_value = r.g_value;
        t.ell_value = r.ell_value;
        t.total = r.total();
        t.queries = r.oracle_queries;
        t.output_set = r.output_set.Elements();
        if (r.local_search) {
          t.expected_output_value = r.local_search->expected_output_value;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(spec.trials);
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  double mean = 0.0, m2 = 0.0;
  bool all_exact = true;
  double exact_sum = 0.0;
  for (int64_t i = 0; i < spec.trials; ++i) {
    const TrialResult& t = result.per_trial[i];
    const double delta = t.total - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (t.total - mean);
    result.total_queries += t.queries;
    if (t.expected_output_value) {
      exact_sum += *t.expected_output_value;
    } else {
      all_exact = false;
    }
  }
  result.mean = mean;
  result.stderr_value =
      spec.trials > 1
          ? std::sqrt(m2 / static_cast<double>(spec.trials - 1) /
                      static_cast<double>(spec.trials))
          : 0.0;
  if (all_exact) {
    result.exact_expectation_mean = exact_sum / static_cast<double>(spec.trials);
  }

  for (const GuaranteeCheck& check : spec.checks) {
    if (!std::isfinite(check.alpha) || !std::isfinite(check.beta)) {
      throw std::invalid_argument("check coefficients must be finite");
    }
    const BruteForceResult best = BruteForceOpt(instance, check.alpha, check.beta);
    CheckResult c;
    c.check = check;
    c.label = GuaranteeLabel(spec.algorithm, spec.ls_config, instance, check);
    c.rhs = best.value;
    c.rhs_witness = best.set.Elements();
    c.slack = IsRandomized(spec.algorithm) ? 4.0 * result.stderr_value : 0.0;
    c.passed = result.mean >= c.rhs - c.slack - kTolerance;
    if (result.exact_expectation_mean) {
      c.exact_passed = *result.exact_expectation_mean >= c.rhs - kTolerance;
    }
    result.checks.push_back(c);
  }

  result.instance = InstanceToJson(instance);
  result.config = {{"algorithm", result.algorithm},
                   {"trials", spec.trials},
                   {"master_seed", spec.master_seed}};
  if (spec.algorithm == Algorithm::kLocalSearch) {
    result.config["ls"] = ToJson(spec.ls_config);
  }
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!spec.json_out.empty()) {
    WriteTextFile(spec.json_out, ToJson(result).dump(2) + "\n");
  }
  if (!spec.csv_out.empty()) WriteTextFile(spec.csv_out, TrialsToCsv(result));
  return result;
}

json ToJson(const ExperimentResult& r) {
  json trials = json::array();
  for (const TrialResult& t : r.per_trial) {
    json row = {{"trial", t.trial},
                {"seed", t.seed},
                {"g_value", t.g_value},
                {"ell_value", t.ell_value},
                {"total", t.total},
                {"queries", t.queries},
                {"output_set", t.output_set}};
    if (t.expected_output_value) {
      row["expected_output_value"] = *t.expected_output_value;
    }
    trials.push_back(row);
  }
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json row = {{"alpha", c.check.alpha},
                {"beta", c.check.beta},
                {"label", c.label},
                {"rhs", c.rhs},
                {"rhs_witness", c.rhs_witness},
                {"slack", c.slack},
                {"passed", c.passed}};
    row["exact_passed"] = c.exact_passed ? json(*c.exact_passed) : json();
    checks.push_back(row);
  }
  return {{"algorithm", r.algorithm},
          {"master_seed", r.master_seed},
          {"trials", r.trials},
          {"mean", r.mean},
          {"stderr", r.stderr_value},
          {"exact_expectation_mean",
           r.exact_expectation_mean ? json(*r.exact_expectation_mean) : json()},
          {"checks", checks},
          {"total_queries", r.total_queries},
          {"wall_time_seconds", r.wall_time_seconds},
          {"instance", r.instance},
          {"config", r.config},
          {"per_trial", trials}};
}

std::string TrialsToCsv(const ExperimentResult& r) {
  std::string out = "trial,seed,g_value,ell_value,total,queries\n";
  char buf[256];
  for (const TrialResult& t : r.per_trial) {
    std::snprintf(buf, sizeof(buf), "%lld,%llu,%.17g,%.17g,%.17g,%lld\n",
                  static_cast<long long>(t.trial),
                  static_cast<unsigned long long>(t.seed), t.g_value,
                  t.ell_value, t.total, static_cast<long long>(t.queries));
    out += buf;
  }
  return out;
}

}  // namespace rusm
