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

#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "rusm/families.h"
#include "rusm/hardness.h"
#include "rusm/instances.h"
#include "rusm/solvers.h"

namespace rusm {
namespace {

using ::rusm::testing::BitsOf;
using ::rusm::testing::LinearSum;
using ::rusm::testing::OracleDoubleGreedy;
using ::rusm::testing::OracleH;
using ::rusm::testing::OracleMaxWeighted;
using ::rusm::testing::RawOf;
using ::rusm::testing::WeightsOf;

RusmInstance UnitEdgeInstance() {
  return MakeCutInstance(2, {{0, 1, 1.0}}, LinearWeights::Zero(2));
}

RusmInstance ZeroG(std::vector<double> w) {
  const int n = static_cast<int>(w.size());
  auto g = std::make_shared<LambdaSetFunction>(
      n, [](SubsetMask) { return 0.0; }, "zero");
  return RusmInstance(GroundSet(n), g, LinearWeights(std::move(w)),
                      DeclaredProperties{});
}

RusmInstance RandomInstance(int n, EllSign sign, Rng& rng, int rep) {
  RandomFamilyParams params;
  params.kind = rep % 2 == 0 ? RandomKind::kCut : RandomKind::kCoverage;
  params.ell_sign = sign;
  return MakeRandomInstance(n, params, rng);
}

LsConfig ExactConfig(double beta, double eps_fraction = 0.05) {
  LsConfig c;
  c.beta = beta;
  c.epsilon = eps_fraction * AlphaGeneral(beta);
  return c;
}

TEST(AuxValueHTest, Examples) {
  const RusmInstance cut = UnitEdgeInstance();
  EXPECT_EQ(AuxValueH(cut, SubsetMask(), 0.4, MarginalMode::kExact), 0.0);
  const InstanceBundle mono = MakeMonotoneHard(2, 0.5);
  const SubsetMask all = SubsetMask::Full(2);
  EXPECT_NEAR(AuxValueH(mono.instance, all, 1.0, MarginalMode::kExact),
              1.0 + 2.0 * -1.0, 1e-15);
  EXPECT_NEAR(AuxValueH(mono.instance, all, 0.5, MarginalMode::kExact), 0.0,
              1e-15);
  EXPECT_THROW(AuxValueH(mono.instance, all, 0.5, MarginalMode::kExact, nullptr,
                         0, 1),
               std::invalid_argument);
  EXPECT_THROW(AuxValueH(mono.instance, all, 0.5, MarginalMode::kSampled),
               std::invalid_argument);
}

TEST(AuxValueHTest, MatchesOracleAndSampledConverges) {
  Rng rng(6);
  for (int rep = 0; rep < 6; ++rep) {
    const RusmInstance inst = RandomInstance(8, EllSign::kMixed, rng, rep);
    const SubsetMask s(rng.NextU64() & 0xFF);
    const double beta = 0.2 + 0.1 * rep;
    const double exact = AuxValueH(inst, s, beta, MarginalMode::kExact);
    EXPECT_NEAR(exact, OracleH(RawOf(*inst.g()), WeightsOf(inst), s.bits(), beta),
                1e-12);
    Rng draw(rep);
    const double sampled =
        AuxValueH(inst, s, beta, MarginalMode::kSampled, &draw, 40000);
    EXPECT_NEAR(sampled, exact, 0.1);
  }
}

TEST(LsConfigTest, Validation) {
  LsConfig c = ExactConfig(0.5);
  EXPECT_NO_THROW(c.Validate());
  c.beta = 0.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.beta = 1.2;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = ExactConfig(0.5);
  c.epsilon = AlphaGeneral(0.5);
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.guarantee_mode = false;
  EXPECT_NO_THROW(c.Validate());
  c.epsilon = -1.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = ExactConfig(0.5);
  c.sample_count_override = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  EXPECT_EQ(ParseMarginalMode("sampled"), MarginalMode::kSampled);
  EXPECT_THROW(ParseMarginalMode("mixed"), std::invalid_argument);
}

TEST(LsConfigTest, ConstantsFromTheAnalysis) {
  EXPECT_EQ(LocalSearchIterationCap(10, 0.05), 8001);
  EXPECT_EQ(LocalSearchIterationCap(3, 0.5), 73);
  const double k = WorstCaseSampleCount(2, 0.1, 0.5);
  EXPECT_EQ(k, std::ceil(128.0 * 16 * 0.25 / 0.01 * std::log(1600.0)));
}

TEST(LocalSearchTest, UnitEdgeReachesTheGuarantee) {
  const RusmInstance inst = UnitEdgeInstance();
  const LsConfig config = ExactConfig(0.5, 0.3);
  const SolverReport r = LocalSearch(inst, config);
  ASSERT_TRUE(r.local_search.has_value());
  EXPECT_EQ(r.local_search->exit_reason, "local_optimum");
  ASSERT_TRUE(r.local_search->expected_output_value.has_value());
  const double bound = AlphaGeneral(0.5) - config.epsilon;
  EXPECT_GE(*r.local_search->expected_output_value, bound * 1.0);
  EXPECT_GE(r.total(), bound);
}

TEST(LocalSearchTest, ZeroFunctionBranches) {
  const SolverReport neg = LocalSearch(ZeroG({-1.0, -0.5, -2.0}), ExactConfig(0.5));
  EXPECT_EQ(neg.output_set, SubsetMask());
  EXPECT_EQ(neg.total(), 0.0);
  const SolverReport mixed = LocalSearch(ZeroG({1.0, -0.5, 0.25}), ExactConfig(0.5));
  EXPECT_EQ(mixed.output_set, SubsetMask::FromElements({0, 2}));
  EXPECT_EQ(mixed.local_search->exit_reason, "zero_function");
  EXPECT_EQ(mixed.total(), 1.25);
}

TEST(LocalSearchTest, RejectsUndeclaredG) {
  auto g = std::make_shared<LambdaSetFunction>(
      2, [](SubsetMask s) { return 1.0 * s.Size(); }, "card");
  DeclaredProperties flags;
  flags.submodular = false;
  const RusmInstance inst(GroundSet(2), g, LinearWeights::Zero(2), flags);
  EXPECT_THROW(LocalSearch(inst, ExactConfig(0.5)), std::invalid_argument);
}

TEST(LocalSearchTest, SampledModeNeedsFeasibleSampleCount) {
  Rng rng(3);
  const RusmInstance inst = RandomInstance(6, EllSign::kMixed, rng, 0);
  LsConfig c = ExactConfig(0.5);
  c.marginal_mode = MarginalMode::kSampled;
  EXPECT_THROW(LocalSearch(inst, c), std::invalid_argument);
  c.sample_count_override = 200;
  const SolverReport r = LocalSearch(inst, c);
  EXPECT_EQ(r.local_search->samples_per_estimate, 200);
  EXPECT_FALSE(r.local_search->expected_output_value.has_value());
  EXPECT_GE(r.total(), 0.0);
}

// Replays the move trace with exact h from the oracle.
void CheckLocalSearchInvariants(const RusmInstance& inst, const LsConfig& config,
                                const SolverReport& r) {
  const auto g = RawOf(*inst.g());
  const std::vector<double> w = WeightsOf(inst);
  const LocalSearchDetails& d = *r.local_search;
  const int n = d.filtered_ground.Size();
  if (d.exit_reason == "zero_function" || d.exit_reason == "empty_ground") return;
  EXPECT_EQ(d.exit_reason, "local_optimum");
  EXPECT_LE(d.iterations, LocalSearchIterationCap(n, config.epsilon));
  EXPECT_EQ(d.iteration_cap, LocalSearchIterationCap(n, config.epsilon));
  double gmax = g(0);
  for (int u : d.filtered_ground.Elements()) gmax = std::max(gmax, g(uint64_t{1} << u));
  EXPECT_NEAR(d.delta, config.epsilon / (2.0 * n) * gmax, 1e-15);
  uint64_t t = d.initial_set.bits();
  for (const Move& m : r.move_trace) {
    const uint64_t next = m.kind == MoveKind::kAdd ? t | (uint64_t{1} << m.element)
                                                   : t & ~(uint64_t{1} << m.element);
    EXPECT_NE(next, t);
    const double gain = OracleH(g, w, next, config.beta) - OracleH(g, w, t, config.beta);
    EXPECT_GE(gain, d.delta - 1e-9);
    EXPECT_NEAR(gain, m.estimated_gain, 1e-9);
    t = next;
  }
  EXPECT_EQ(t, d.final_set.bits());
  const double h_final = OracleH(g, w, t, config.beta);
  for (int u : d.filtered_ground.Elements()) {
    const uint64_t moved = t ^ (uint64_t{1} << u);
    EXPECT_LT(OracleH(g, w, moved, config.beta) - h_final, d.delta);
  }
  EXPECT_NEAR(r.g_value, g(r.output_set.bits()), 0.0);
  EXPECT_NEAR(r.ell_value, LinearSum(w, r.output_set.bits()), 1e-12);
  EXPECT_GE(r.total(), 0.0);
}

TEST(LocalSearchTest, ExactModeInvariantsOnRandomInstances) {
  Rng rng(41);
  for (int rep = 0; rep < 12; ++rep) {
    const RusmInstance inst = RandomInstance(7, EllSign::kMixed, rng, rep);
    for (double beta : {0.3, 0.5, 0.7}) {
      const LsConfig config = ExactConfig(beta, 0.1);
      const SolverReport r = LocalSearch(inst, config);
      CheckLocalSearchInvariants(inst, config, r);
      const double alpha = AlphaGeneral(beta) - config.epsilon;
      const auto [bits, best] = OracleMaxWeighted(inst, alpha, beta - config.epsilon);
      ASSERT_TRUE(r.local_search->expected_output_value.has_value());
      EXPECT_GE(*r.local_search->expected_output_value, best - 1e-9);
    }
  }
}

TEST(LocalSearchTest, HardFamilies) {
  const std::vector<InstanceBundle> bundles = {
      MakeMonotoneHard(6, 0.1), MakeNegativeHard(2, 2.0, 0.3), MakePositiveHard(5)};
  for (const InstanceBundle& b : bundles) {
    const LsConfig config = ExactConfig(0.5);
    const SolverReport r = LocalSearch(b.instance, config);
    CheckLocalSearchInvariants(b.instance, config, r);
  }
}

TEST(LocalSearchTest, ExpectedValuesMatchEnumeration) {
  Rng rng(77);
  const RusmInstance inst = RandomInstance(6, EllSign::kMixed, rng, 1);
  const LsConfig config = ExactConfig(0.5);
  const SolverReport r = LocalSearch(inst, config);
  const LocalSearchDetails& d = *r.local_search;
  if (d.exit_reason != "local_optimum") GTEST_SKIP();
  const auto f = [&](uint64_t bits) { return inst.Objective(SubsetMask(bits)); };
  double best_small = f(0);
  for (int u = 0; u < 6; ++u) best_small = std::max(best_small, f(uint64_t{1} << u));
  const double sub = ::rusm::testing::OracleExpectSubsample(
      f, 6, d.final_set.bits(), config.beta);
  const double out = ::rusm::testing::OracleExpectSubsample(
      [&](uint64_t b) { return std::max(f(b), best_small); }, 6,
      d.final_set.bits(), config.beta);
  EXPECT_NEAR(*d.expected_subsample_value, sub, 1e-12);
  EXPECT_NEAR(*d.expected_output_value, out, 1e-12);
}

TEST(LocalSearchTest, FixedSeedIsReproducible) {
  Rng rng(5);
  const RusmInstance inst = RandomInstance(8, EllSign::kMixed, rng, 0);
  LsConfig config = ExactConfig(0.4);
  config.seed = 1234;
  const SolverReport a = LocalSearch(inst, config);
  const SolverReport b = LocalSearch(inst, config);
  EXPECT_EQ(a.output_set, b.output_set);
  EXPECT_EQ(a.oracle_queries, b.oracle_queries);
  EXPECT_EQ(a.local_search->subsample, b.local_search->subsample);
  ASSERT_EQ(a.move_trace.size(), b.move_trace.size());
  for (size_t i = 0; i < a.move_trace.size(); ++i) {
    EXPECT_EQ(a.move_trace[i].element, b.move_trace[i].element);
    EXPECT_EQ(a.move_trace[i].estimated_gain, b.move_trace[i].estimated_gain);
  }
}

TEST(LocalSearchTest, IterationCapStopsTheLoop) {
  Rng rng(8);
  const RusmInstance inst = RandomInstance(8, EllSign::kNonNegative, rng, 1);
  LsConfig config = ExactConfig(0.5);
  config.iteration_cap_override = 1;
  const SolverReport r = LocalSearch(inst, config);
  EXPECT_LE(r.local_search->iterations, 1);
  EXPECT_LE(r.move_trace.size(), 1u);
}

void CheckDgTrace(const RusmInstance& inst, const SolverReport& r,
                  bool ell_nonnegative) {
  const int n = inst.size();
  ASSERT_EQ(static_cast<int>(r.dg_trace.size()), n);
  SubsetMask x, y = SubsetMask::Full(n);
  for (const DgStep& s : r.dg_trace) {
    EXPECT_GE(s.a + s.b, -1e-9);
    EXPECT_TRUE(x.IsSubsetOf(s.x_set));
    EXPECT_TRUE(s.x_set.IsSubsetOf(s.y_set));
    EXPECT_TRUE(s.y_set.IsSubsetOf(y));
    if (ell_nonnegative) {
      EXPECT_GE(inst.Objective(s.y_set), inst.Objective(y) - 1e-9);
    }
    x = s.x_set;
    y = s.y_set;
  }
  EXPECT_EQ(x, y);
  EXPECT_EQ(r.output_set, x);
  EXPECT_EQ(r.oracle_queries, 4 * n + 1);
}

TEST(DoubleGreedyTest, MonotoneTakesEverything) {
  const RusmInstance cov = MakeCoverageInstance(
      {{0, 1}, {1, 2}, {3}}, {1.0, 2.0, 0.5, 1.0}, LinearWeights({0.0, 0.5, 0.25}));
  EXPECT_EQ(DoubleGreedyDeterministic(cov).output_set, SubsetMask::Full(3));
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(DoubleGreedyRandomized(cov, {}, rng).output_set, SubsetMask::Full(3));
  }
}

TEST(DoubleGreedyTest, SingleElement) {
  const RusmInstance one = MakeCoverageInstance({{0}}, {2.0}, LinearWeights::Zero(1));
  const SolverReport r = DoubleGreedyDeterministic(one);
  EXPECT_EQ(r.output_set, SubsetMask::FromElements({0}));
  EXPECT_EQ(r.dg_trace[0].a, 2.0);
  EXPECT_EQ(r.dg_trace[0].b, -2.0);
}

TEST(DoubleGreedyTest, RejectsBadOrders) {
  const RusmInstance inst = UnitEdgeInstance();
  EXPECT_THROW(DoubleGreedyDeterministic(inst, {0}), std::invalid_argument);
  EXPECT_THROW(DoubleGreedyDeterministic(inst, {0, 0}), std::invalid_argument);
  EXPECT_THROW(DoubleGreedyDeterministic(inst, {0, 2}), std::invalid_argument);
  Rng rng(0);
  EXPECT_THROW(DoubleGreedyRandomized(inst, {1, 1}, rng), std::invalid_argument);
  EXPECT_NO_THROW(DoubleGreedyDeterministic(inst, {1, 0}));
}

TEST(DoubleGreedyTest, MatchesOracleAndTraceInvariants) {
  Rng rng(19);
  for (int rep = 0; rep < 20; ++rep) {
    const EllSign sign = rep % 3 == 0 ? EllSign::kMixed : EllSign::kNonNegative;
    const RusmInstance inst = RandomInstance(9, sign, rng, rep);
    std::vector<int> order(9);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 8; i > 0; --i) {
      std::swap(order[i], order[rng.UniformInt(static_cast<uint64_t>(i) + 1)]);
    }
    const SolverReport det = DoubleGreedyDeterministic(inst, order);
    const auto [ox, osteps] =
        OracleDoubleGreedy(RawOf(*inst.g()), WeightsOf(inst), order, nullptr);
    EXPECT_EQ(det.output_set.bits(), BitsOf(ox));
    for (size_t i = 0; i < osteps.size(); ++i) {
      EXPECT_NEAR(det.dg_trace[i].a, osteps[i].a, 1e-12);
      EXPECT_NEAR(det.dg_trace[i].b, osteps[i].b, 1e-12);
    }
    CheckDgTrace(inst, det, sign == EllSign::kNonNegative);

    Rng r1(rep), r2(rep);
    const SolverReport rnd = DoubleGreedyRandomized(inst, order, r1);
    const auto [rx, rsteps] = OracleDoubleGreedy(
        RawOf(*inst.g()), WeightsOf(inst), order,
        [&](double p) { return r2.Bernoulli(p); });
    EXPECT_EQ(rnd.output_set.bits(), BitsOf(rx));
    CheckDgTrace(inst, rnd, sign == EllSign::kNonNegative);
  }
}

TEST(DoubleGreedyTest, DeterministicGuaranteeOnRandomInstances) {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const RusmInstance inst = RandomInstance(10, EllSign::kNonNegative, rng, rep);
    const double value = DoubleGreedyDeterministic(inst).total();
    for (double alpha : {0.0, 0.1, 0.2, 1.0 / 3.0}) {
      EXPECT_GE(value, OracleMaxWeighted(inst, alpha, 1.0 - alpha).second - 1e-9);
    }
  }
}

TEST(DoubleGreedyTest, RandomizedHalfOnSymmetricCut) {
  const RusmInstance inst = UnitEdgeInstance();
  Rng rng(2024);
  const int kTrials = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    const double v = DoubleGreedyRandomized(inst, {}, rng).total();
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / kTrials;
  const double var = (sum_sq - kTrials * mean * mean) / (kTrials - 1);
  EXPECT_GE(mean, 0.5 * 1.0 - 4.0 * std::sqrt(var / kTrials));
}

TEST(DoubleGreedyTest, TieGoesToAddInRandomized) {
  // g = 0 and l = 0: a = b = 0 at every step, so every element is added.
  Rng rng(0);
  const SolverReport r = DoubleGreedyRandomized(ZeroG({0.0, 0.0, 0.0}), {}, rng);
  EXPECT_EQ(r.output_set, SubsetMask::Full(3));
}

TEST(BruteForceTest, Examples) {
  const InstanceBundle mono = MakeMonotoneHard(4, 0.25);
  const BruteForceResult zero = BruteForceOpt(mono.instance, 0.0, 0.0);
  EXPECT_EQ(zero.set, SubsetMask());
  EXPECT_EQ(zero.value, 0.0);
  const BruteForceResult one = BruteForceOpt(mono.instance, 1.0, 1.0);
  EXPECT_EQ(one.value, 0.75);
  EXPECT_EQ(one.set, SubsetMask::FromElements({0}));
  const InstanceBundle neg = MakeNegativeHard(1, 2.0, 0.5);
  const BruteForceResult best = BruteForceOpt(neg.instance, 1.0, 1.0);
  EXPECT_GE(best.value, 2.5);
  EXPECT_EQ(neg.instance.Objective(SubsetMask::FromElements({0, 3})), 2.5);
  EXPECT_THROW(BruteForceOpt(MakeMonotoneHard(25, 0.5).instance, 1, 1),
               std::invalid_argument);
}

TEST(BruteForceTest, MatchesOracleOnRandomInstances) {
  Rng rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const RusmInstance inst = RandomInstance(9, EllSign::kMixed, rng, rep);
    for (double alpha : {0.3, 1.0}) {
      const auto [bits, value] = OracleMaxWeighted(inst, alpha, 0.8);
      const BruteForceResult r = BruteForceOpt(inst, alpha, 0.8);
      EXPECT_EQ(r.set.bits(), bits);
      EXPECT_EQ(r.value, value);
    }
    const SolverReport s = BruteForceSolve(inst);
    EXPECT_EQ(s.total(), OracleMaxWeighted(inst, 1.0, 1.0).second);
    EXPECT_EQ(s.oracle_queries, 512);
  }
}

}  // namespace
}  // namespace rusm
