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

#include "rusm/solvers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rusm/hardness.h"

namespace rusm {
namespace {

void CheckFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

std::vector<int> ResolveOrder(int n, std::vector<int> order) {
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order must list every element exactly once");
  }
  std::vector<bool> seen(n, false);
  for (int u : order) {
    if (u < 0 || u >= n || seen[u]) {
      throw std::invalid_argument("order is not a permutation of the ground set");
    }
    seen[u] = true;
  }
  return order;
}

SolverReport Finish(std::string algorithm, const RusmInstance& instance,
                    const SetFunctionOracle& oracle, SubsetMask out,
                    double g_value, uint64_t seed) {
  SolverReport report;
  report.algorithm = std::move(algorithm);
  report.output_set = out;
  report.g_value = g_value;
  report.ell_value = instance.ell()(out);
  report.oracle_queries = oracle.query_count();
  report.seed = seed;
  return report;
}

// omega_u = beta E[g(u | (T - u)(beta))] for every u in `candidates`.
std::vector<double> ExactOmegas(const SetFunctionOracle& g, SubsetMask t,
                                SubsetMask candidates, double beta,
                                int exact_limit) {
  if (t.Size() > exact_limit) {
    throw std::invalid_argument(
        "exact marginals need |T| <= " + std::to_string(exact_limit) +
        "; use sampled mode");
  }
  const int m = t.Size();
  const std::vector<int> members = t.Elements();
  // Tabulate g on subsets of T by compressed index.
  std::vector<double> table(size_t{1} << m);
  std::vector<uint64_t> expand(size_t{1} << m);
  for (uint64_t c = 0; c < table.size(); ++c) {
    uint64_t bits = 0;
    for (int j = 0; j < m; ++j) {
      if ((c >> j) & 1) bits |= uint64_t{1} << members[j];
    }
    expand[c] = bits;
    table[c] = g(SubsetMask(bits));
  }
  std::vector<double> keep(m + 1, 1.0), drop(m + 1, 1.0);
  for (int k = 1; k <= m; ++k) {
    keep[k] = keep[k - 1] * beta;
    drop[k] = drop[k - 1] * (1.0 - beta);
  }
  std::vector<double> omega(g.ground_size(), 0.0);
  for (int u : candidates.Elements()) {
    double total = 0.0;
    if (t.Contains(u)) {
      const int j = static_cast<int>(
          std::find(members.begin(), members.end(), u) - members.begin());
      const uint64_t bit = uint64_t{1} << j;
      for (uint64_t c = 0; c < table.size(); ++c) {
        if (c & bit) continue;
        const int k = std::popcount(c);
        const double w = keep[k] * drop[m - 1 - k];
        if (w != 0.0) total += w * (table[c | bit] - table[c]);
      }
    } else {
      for (uint64_t c = 0; c < table.size(); ++c) {
        const int k = std::popcount(c);
        const double w = keep[k] * drop[m - k];
        const double with_u = g(SubsetMask(expand[c]).With(u));
        if (w != 0.0) total += w * (with_u - table[c]);
      }
    }
    omega[u] = beta * total;
  }
  return omega;
}

std::vector<double> SampledOmegas(const SetFunctionOracle& g, SubsetMask t,
                                  SubsetMask candidates, double beta,
                                  int64_t samples, Rng& rng) {
  std::vector<double> omega(g.ground_size(), 0.0);
  for (int u : candidates.Elements()) {
    const SubsetMask rest = t.Without(u);
    double total = 0.0;
    for (int64_t i = 0; i < samples; ++i) {
      const SubsetMask r = Subsample(rest, beta, rng);
      total += g(r.With(u)) - g(r);
    }
    omega[u] = beta * total / static_cast<double>(samples);
  }
  return omega;
}

}  // namespace

std::string ToString(MarginalMode mode) {
  return mode == MarginalMode::kExact ? "exact" : "sampled";
}

MarginalMode ParseMarginalMode(const std::string& name) {
  if (name == "exact") return MarginalMode::kExact;
  if (name == "sampled") return MarginalMode::kSampled;
  throw std::invalid_argument("unknown marginal mode: " + name);
}

void LsConfig::Validate() const {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta must lie in (0, 1]");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (guarantee_mode && !(epsilon < AlphaGeneral(beta))) {
    throw std::invalid_argument(
        "epsilon must lie in (0, alpha(beta)) = (0, " +
        std::to_string(AlphaGeneral(beta)) + ")");
  }
  if (sample_count_override && *sample_count_override < 1) {
    throw std::invalid_argument("sample count must be at least 1");
  }
  if (iteration_cap_override && *iteration_cap_override < 1) {
    throw std::invalid_argument("iteration cap must be at least 1");
  }
}

double AuxValueH(const SetFunctionOracle& g, const LinearWeights& ell,
                 SubsetMask s, double beta, MarginalMode mode, Rng* rng,
                 int64_t samples, int exact_limit) {
  CheckProbability(beta, "beta");
  const double linear = beta * (1.0 + beta) * ell(s);
  if (mode == MarginalMode::kExact) {
    if (s.Size() > exact_limit) {
      throw std::invalid_argument("exact h needs |S| <= " +
                                  std::to_string(exact_limit));
    }
    return ExpectOverSubsamples(s, beta, [&](SubsetMask r) { return g(r); }) +
           linear;
  }
  if (rng == nullptr || samples < 1) {
    throw std::invalid_argument("sampled h needs an rng and samples >= 1");
  }
  double total = 0.0;
  for (int64_t i = 0; i < samples; ++i) total += g(Subsample(s, beta, *rng));
  return total / static_cast<double>(samples) + linear;
}

double AuxValueH(const RusmInstance& instance, SubsetMask s, double beta,
                 MarginalMode mode, Rng* rng, int64_t samples,
                 int exact_limit) {
  const SetFunctionOracle g = instance.NewOracle();
  return AuxValueH(g, instance.ell(), s, beta, mode, rng, samples,
                   exact_limit);
}

double WorstCaseSampleCount(int n, double epsilon, double beta) {
  const double n4 = std::pow(static_cast<double>(n), 4);
  return std::ceil(128.0 * n4 * beta * beta / (epsilon * epsilon) *
                   std::log(10.0 * n4 / epsilon));
}

int64_t LocalSearchIterationCap(int n, double epsilon) {
  const double cap = std::ceil(4.0 * n * n / epsilon) + 1.0;
  if (cap > 9.0e18) throw std::invalid_argument("iteration cap overflows");
  return static_cast<int64_t>(cap);
}

SolverReport LocalSearch(const RusmInstance& instance, const LsConfig& config) {
  config.Validate();
  if (config.guarantee_mode &&
      !(instance.flags().nonnegative && instance.flags().submodular)) {
    throw std::invalid_argument(
        "local search needs g declared non-negative and submodular");
  }
  const int n = instance.size();
  const double beta = config.beta;
  const double alpha = AlphaGeneral(beta);
  const double lin = beta * (1.0 + beta);
  const LinearWeights& ell = instance.ell();
  const SetFunctionOracle g = instance.NewOracle();
  Rng rng(config.seed);

  LocalSearchDetails d;
  const double g_empty = g(SubsetMask::Empty());
  std::vector<double> g_single(n);
  for (int u = 0; u < n; ++u) g_single[u] = g(SubsetMask::Singleton(u));

  // Best of the empty set and all singletons of the full ground set.
  SubsetMask best_small = SubsetMask::Empty();
  double best_small_value = g_empty;
  for (int u = 0; u < n; ++u) {
    const double v = g_single[u] + ell.Weight(u);
    if (v > best_small_value) {
      best_small_value = v;
      best_small = SubsetMask::Singleton(u);
    }
  }

  SubsetMask filtered;
  for (int u = 0; u < n; ++u) {
    if (alpha * g_single[u] + beta * ell.Weight(u) >= 0.0) {
      filtered = filtered.With(u);
    }
  }
  d.filtered_ground = filtered;
  const int m = filtered.Size();
  SubsetMask positive;
  for (int u : filtered.Elements()) {
    if (ell.Weight(u) > 0.0) positive = positive.With(u);
  }
  d.initial_set = positive;

  double gmax = g_empty;
  for (int u : filtered.Elements()) gmax = std::max(gmax, g_single[u]);

  SubsetMask candidate;
  bool deterministic = true;
  std::vector<Move> trace;
  if (m == 0) {
    d.exit_reason = "empty_ground";
    candidate = SubsetMask::Empty();
  } else if (gmax <= 0.0) {
    d.exit_reason = "zero_function";
    d.final_set = positive;
    candidate = positive;
  } else {
    deterministic = false;
    d.delta = config.epsilon / (2.0 * m) * gmax;
    if (!(d.delta > 0.0)) throw std::logic_error("threshold must be positive");
    d.iteration_cap = config.iteration_cap_override.value_or(
        LocalSearchIterationCap(m, config.epsilon));
    if (config.marginal_mode == MarginalMode::kSampled) {
      if (config.sample_count_override) {
        d.samples_per_estimate = *config.sample_count_override;
      } else {
        const double k = WorstCaseSampleCount(m, config.epsilon, beta);
        if (k > static_cast<double>(kMaxSamplesPerEstimate)) {
          throw std::invalid_argument(
              "default sample count " + std::to_string(k) +
              " is too large; pass an explicit sample count");
        }
        d.samples_per_estimate = static_cast<int64_t>(k);
      }
    }
    SubsetMask t = positive;
    d.exit_reason = "iteration_cap";
    for (int64_t it = 1; it <= d.iteration_cap; ++it) {
      d.iterations = it;
      const std::vector<double> omega =
          config.marginal_mode == MarginalMode::kExact
              ? ExactOmegas(g, t, filtered, beta, config.exact_limit)
              : SampledOmegas(g, t, filtered, beta, d.samples_per_estimate,
                              rng);
      int chosen = -1;
      MoveKind kind = MoveKind::kAdd;
      double gain = 0.0;
      for (int u : filtered.Minus(t).Elements()) {
        const double v = omega[u] + lin * ell.Weight(u);
        if (v >= d.delta) {
          chosen = u;
          gain = v;
          break;
        }
      }
      if (chosen < 0) {
        for (int u : t.Elements()) {
          const double v = omega[u] + lin * ell.Weight(u);
          if (v <= -d.delta) {
            chosen = u;
            kind = MoveKind::kRemove;
            gain = -v;
            break;
          }
        }
      }
      if (chosen < 0) {
        d.exit_reason = "local_optimum";
        break;
      }
      t = kind == MoveKind::kAdd ? t.With(chosen) : t.Without(chosen);
      trace.push_back({it, kind, chosen, gain});
    }
    d.final_set = t;
    d.subsample = Subsample(t, beta, rng);
    const double v = g(d.subsample) + ell(d.subsample);
    candidate = v >= 0.0 ? d.subsample : SubsetMask::Empty();
  }

  double candidate_g = g(candidate);
  SubsetMask out = candidate;
  d.selected = "local_search";
  if (best_small_value > candidate_g + ell(candidate)) {
    out = best_small;
    candidate_g = best_small.IsEmpty()
                      ? g_empty
                      : g_single[best_small.Elements().front()];
    d.selected = best_small.IsEmpty() ? "empty" : "singleton";
  }

  SolverReport report = Finish("ls", instance, g, out, candidate_g,
                               config.seed);
  if (config.marginal_mode == MarginalMode::kExact) {
    const SetFunctionOracle side = instance.NewOracle();
    if (deterministic) {
      const double v = side(out) + ell(out);
      d.expected_subsample_value = side(d.final_set) + ell(d.final_set);
      d.expected_output_value = v;
    } else if (d.final_set.Size() <= config.exact_limit) {
      double sub = 0.0;
      const double total =
          ExpectOverSubsamples(d.final_set, beta, [&](SubsetMask r) {
            return std::max(side(r) + ell(r), best_small_value);
          });
      sub = ExpectOverSubsamples(d.final_set, beta, [&](SubsetMask r) {
        return side(r) + ell(r);
      });
      d.expected_subsample_value = sub;
      d.expected_output_value = total;
    }
  }
  report.move_trace = std::move(trace);
  report.local_search = std::move(d);
  return report;
}

SolverReport DoubleGreedyDeterministic(const RusmInstance& instance,
                                       std::vector<int> order) {
  const int n = instance.size();
  order = ResolveOrder(n, std::move(order));
  const SetFunctionOracle g = instance.NewOracle();
  const LinearWeights& ell = instance.ell();
  SubsetMask x, y = SubsetMask::Full(n);
  std::vector<DgStep> steps;
  steps.reserve(n);
  for (int u : order) {
    const double w = ell.Weight(u);
    const double a = g(x.With(u)) - g(x) + w;
    const double b = g(y.Without(u)) - g(y) - w;
    const bool add = a >= b;
    if (add) {
      x = x.With(u);
    } else {
      y = y.Without(u);
    }
    steps.push_back({u, a, b, add, x, y});
  }
  SolverReport report = Finish("dg-det", instance, g, x, g(x), 0);
  report.dg_trace = std::move(steps);
  return report;
}

SolverReport DoubleGreedyRandomized(const RusmInstance& instance,
                                    std::vector<int> order, Rng& rng) {
  const int n = instance.size();
  order = ResolveOrder(n, std::move(order));
  const SetFunctionOracle g = instance.NewOracle();
  const LinearWeights& ell = instance.ell();
  const uint64_t seed = rng.seed();
  SubsetMask x, y = SubsetMask::Full(n);
  std::vector<DgStep> steps;
  steps.reserve(n);
  for (int u : order) {
    const double w = ell.Weight(u);
    const double a = g(x.With(u)) - g(x) + w;
    const double b = g(y.Without(u)) - g(y) - w;
    bool add;
    if (b <= 0.0) {
      add = true;
    } else if (a <= 0.0) {
      add = false;
    } else {
      add = rng.Bernoulli(a / (a + b));
    }
    if (add) {
      x = x.With(u);
    } else {
      y = y.Without(u);
    }
    steps.push_back({u, a, b, add, x, y});
  }
  SolverReport report = Finish("dg-rand", instance, g, x, g(x), seed);
  report.dg_trace = std::move(steps);
  return report;
}

BruteForceResult BruteForceOpt(const RusmInstance& instance, double alpha,
                               double beta) {
  CheckFinite(alpha, "alpha");
  CheckFinite(beta, "beta");
  const int n = instance.size();
  if (n > kMaxBruteForceElements) {
    throw std::invalid_argument("brute force supports at most " +
                                std::to_string(kMaxBruteForceElements) +
                                " elements");
  }
  const SetFunction& g = *instance.g();
  const LinearWeights& ell = instance.ell();
  BruteForceResult best{SubsetMask::Empty(),
                        alpha * g.Evaluate(SubsetMask::Empty())};
  const uint64_t limit = uint64_t{1} << n;
  for (uint64_t bits = 1; bits < limit; ++bits) {
    const SubsetMask s(bits);
    const double v = alpha * g.Evaluate(s) + beta * ell(s);
    if (v > best.value) best = {s, v};
  }
  return best;
}

SolverReport BruteForceSolve(const RusmInstance& instance) {
  const int n = instance.size();
  if (n > kMaxBruteForceElements) {
    throw std::invalid_argument("brute force supports at most " +
                                std::to_string(kMaxBruteForceElements) +
                                " elements");
  }
  const SetFunctionOracle g = instance.NewOracle();
  const LinearWeights& ell = instance.ell();
  SubsetMask best;
  double best_g = g(best);
  double best_value = best_g;
  const uint64_t limit = uint64_t{1} << n;
  for (uint64_t bits = 1; bits < limit; ++bits) {
    const SubsetMask s(bits);
    const double gv = g(s);
    if (gv + ell(s) > best_value) {
      best = s;
      best_g = gv;
      best_value = gv + ell(s);
    }
  }
  return Finish("brute", instance, g, best, best_g, 0);
}

}  // namespace rusm
