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
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "rusm/families.h"
#include "rusm/instances.h"
#include "rusm/validate.h"

namespace rusm {
namespace {

using ::rusm::testing::OracleCoverage;
using ::rusm::testing::OracleCut;
using ::rusm::testing::OracleEdge;
using ::rusm::testing::OracleMaxWeighted;
using ::rusm::testing::OracleMonotone;
using ::rusm::testing::OracleNegativeHard;
using ::rusm::testing::OraclePositiveHard;
using ::rusm::testing::OracleSubmodular;
using ::rusm::testing::RawOf;

SubsetMask Named(const GroundSet& g, std::vector<std::string> names) {
  SubsetMask s;
  for (const std::string& name : names) {
    bool found = false;
    for (int u = 0; u < g.size(); ++u) {
      if (g.Label(u) == name) {
        s = s.With(u);
        found = true;
      }
    }
    EXPECT_TRUE(found) << name;
  }
  return s;
}

TEST(DescriptorTest, DomainChecks) {
  EXPECT_THROW(MakeMonotoneHard(1, 0.5), std::invalid_argument);
  EXPECT_THROW(MakeMonotoneHard(3, 0.0), std::invalid_argument);
  EXPECT_THROW(MakeMonotoneHard(3, 1.5), std::invalid_argument);
  EXPECT_NO_THROW(MakeMonotoneHard(3, 1.0));
  EXPECT_THROW(MakeNegativeHard(0, 1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(MakeNegativeHard(1, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(MakeNegativeHard(1, 1.0, 0.6), std::invalid_argument);
  EXPECT_THROW(MakePositiveHard(1), std::invalid_argument);
  EXPECT_THROW(MakeHardInstance({HardFamily::kPositiveSec61, 62, 0, 1}),
               std::invalid_argument);
  EXPECT_EQ(ParseHardFamily("negative_sec5"), HardFamily::kNegativeSec5);
  EXPECT_EQ(ToString(HardFamily::kPositiveSec61), "positive_sec61");
  EXPECT_THROW(ParseHardFamily("nope"), std::invalid_argument);
}

TEST(MonotoneHardTest, Examples) {
  const InstanceBundle b = MakeMonotoneHard(3, 0.25);
  const SubsetMask s = SubsetMask::FromElements({0, 1});
  EXPECT_EQ(b.instance.g()->Evaluate(s), 1.0);
  EXPECT_EQ(b.instance.ell()(s), -0.5);
  EXPECT_EQ(b.instance.g()->Evaluate(SubsetMask()), 0.0);
  EXPECT_EQ(b.instance.ell()(SubsetMask()), 0.0);
  EXPECT_EQ(b.group.orbits().size(), 1u);
}

TEST(NegativeHardTest, Examples) {
  const double t = 2.5, r = 0.3;
  const InstanceBundle b = MakeNegativeHard(3, t, r);
  const GroundSet& gs = b.instance.ground();
  EXPECT_EQ(gs.size(), 8);
  const SubsetMask ab1 = Named(gs, {"a", "b1"});
  EXPECT_EQ(b.instance.g()->Evaluate(ab1), t + 1);
  EXPECT_EQ(b.instance.ell()(ab1), -r);
  EXPECT_EQ(b.instance.g()->Evaluate(Named(gs, {"a", "b"})), 0.0);
}

TEST(NegativeHardTest, MatchesDefinitionOnAllSubsets) {
  for (int n : {1, 2, 3}) {
    const InstanceBundle b = MakeNegativeHard(n, 1.75, 0.5);
    for (uint64_t bits = 0; bits < (uint64_t{1} << (2 * n + 2)); ++bits) {
      EXPECT_EQ(b.instance.g()->Evaluate(SubsetMask(bits)),
                OracleNegativeHard(n, 1.75, bits));
    }
  }
}

TEST(PositiveHardTest, Examples) {
  const int n = 5;
  const InstanceBundle b = MakePositiveHard(n);
  const GroundSet& gs = b.instance.ground();
  const SubsetMask s = Named(gs, {"a", "c1", "c2", "c3", "c4"});
  EXPECT_EQ(b.instance.g()->Evaluate(s), 3.0);
  EXPECT_NEAR(b.instance.ell()(s), (n - 1) / 3.0, 1e-15);
  EXPECT_EQ(b.instance.g()->Evaluate(SubsetMask()), 0.0);
  EXPECT_EQ(b.instance.ell()(SubsetMask()), 0.0);
  EXPECT_EQ(b.instance.g()->Evaluate(Named(gs, {"a", "b", "c1"})), 1.0);
}

TEST(PositiveHardTest, ValuesAndTheValueThreeCharacterization) {
  const int n = 4;
  const InstanceBundle b = MakePositiveHard(n);
  for (uint64_t bits = 0; bits < (uint64_t{1} << (n + 2)); ++bits) {
    const double v = b.instance.g()->Evaluate(SubsetMask(bits));
    EXPECT_EQ(v, OraclePositiveHard(n, bits));
    EXPECT_TRUE(v == 0 || v == 1 || v == 2 || v == 3);
    const bool parity = ((bits & 1) != 0) != ((bits & 2) != 0);
    const bool c_missing = ((bits >> 2) & 0xF) != 0xF;
    const bool meets = (bits & 3) != 0;
    EXPECT_EQ(v == 3.0, parity && c_missing && meets);
  }
}

TEST(CutTest, Examples) {
  const RusmInstance single =
      MakeCutInstance(2, {{0, 1, 1.0}}, LinearWeights::Zero(2));
  EXPECT_EQ(single.g()->Evaluate(SubsetMask::FromElements({0})), 1.0);
  EXPECT_EQ(single.g()->Evaluate(SubsetMask()), 0.0);
  EXPECT_EQ(single.g()->Evaluate(SubsetMask::Full(2)), 0.0);
  const RusmInstance tri = MakeCutInstance(
      3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, LinearWeights::Zero(3));
  EXPECT_EQ(tri.g()->Evaluate(SubsetMask::FromElements({0})), 2.0);
  EXPECT_EQ(tri.g()->Evaluate(SubsetMask::FromElements({0, 1})), 2.0);
  EXPECT_THROW(MakeCutInstance(2, {{0, 1, -1.0}}, LinearWeights::Zero(2)),
               std::invalid_argument);
  EXPECT_FALSE(tri.flags().monotone);
}

TEST(CutTest, SymmetricAndMatchesEdgeScan) {
  const std::vector<WeightedEdge> edges = {
      {0, 1, 0.5}, {1, 2, 1.25}, {2, 3, 2.0}, {0, 3, 0.75}, {1, 3, 1.0}, {0, 1, 0.5}};
  std::vector<OracleEdge> oracle;
  for (const WeightedEdge& e : edges) oracle.push_back({e.u, e.v, e.weight});
  const RusmInstance inst = MakeCutInstance(5, edges, LinearWeights::Zero(5));
  for (uint64_t bits = 0; bits < 32; ++bits) {
    EXPECT_DOUBLE_EQ(inst.g()->Evaluate(SubsetMask(bits)), OracleCut(oracle, bits));
    EXPECT_DOUBLE_EQ(inst.g()->Evaluate(SubsetMask(bits)),
                     inst.g()->Evaluate(SubsetMask(31 & ~bits)));
  }
}

TEST(CoverageTest, Examples) {
  const RusmInstance disjoint = MakeCoverageInstance(
      {{0}, {1}, {2}}, {1.0, 1.0, 1.0}, LinearWeights::Zero(3));
  for (uint64_t bits = 0; bits < 8; ++bits) {
    EXPECT_EQ(disjoint.g()->Evaluate(SubsetMask(bits)), std::popcount(bits));
  }
  const RusmInstance same = MakeCoverageInstance(
      {{0, 1}, {0, 1}, {0, 1}}, {1.5, 0.5}, LinearWeights::Zero(3));
  EXPECT_EQ(same.g()->Evaluate(SubsetMask()), 0.0);
  EXPECT_EQ(same.g()->Evaluate(SubsetMask::FromElements({1, 2})), 2.0);
  const RusmInstance overlap = MakeCoverageInstance(
      {{0, 1}, {1, 2}}, {1.0, 1.0, 1.0}, LinearWeights::Zero(2));
  EXPECT_EQ(overlap.g()->Evaluate(SubsetMask::Full(2)), 3.0);
  EXPECT_TRUE(overlap.flags().monotone);
}

TEST(RandomInstanceTest, SeedReproducibleAndSignHonored) {
  RandomFamilyParams params;
  for (RandomKind kind : {RandomKind::kCut, RandomKind::kCoverage}) {
    params.kind = kind;
    Rng r1(99), r2(99);
    const RusmInstance a = MakeRandomInstance(9, params, r1);
    const RusmInstance b = MakeRandomInstance(9, params, r2);
    for (uint64_t bits = 0; bits < 512; ++bits) {
      EXPECT_EQ(a.Objective(SubsetMask(bits)), b.Objective(SubsetMask(bits)));
    }
  }
  Rng rng(1);
  params.ell_sign = EllSign::kNonNegative;
  EXPECT_TRUE(MakeRandomInstance(10, params, rng).ell().IsNonNegative());
  params.ell_sign = EllSign::kNonPositive;
  EXPECT_TRUE(MakeRandomInstance(10, params, rng).ell().IsNonPositive());
  EXPECT_THROW(MakeRandomInstance(15, params, rng), std::invalid_argument);
}

TEST(RandomInstanceTest, CoverageMatchesSetUnionOracle) {
  Rng rng(12);
  RandomFamilyParams params;
  params.kind = RandomKind::kCoverage;
  const RusmInstance inst = MakeRandomInstance(8, params, rng);
  const auto* cov = dynamic_cast<const CoverageFunction*>(inst.g().get());
  ASSERT_NE(cov, nullptr);
  for (uint64_t bits = 0; bits < 256; ++bits) {
    EXPECT_DOUBLE_EQ(inst.g()->Evaluate(SubsetMask(bits)),
                     OracleCoverage(cov->sets(), cov->item_values(), bits));
  }
}

TEST(RandomInstanceTest, GeneratedInstancesValidate) {
  Rng rng(33);
  for (int rep = 0; rep < 10; ++rep) {
    RandomFamilyParams params;
    params.kind = rep % 2 == 0 ? RandomKind::kCut : RandomKind::kCoverage;
    const RusmInstance inst = MakeRandomInstance(8, params, rng);
    for (const ValidationReport& r : ValidateDeclared(inst)) {
      EXPECT_TRUE(r.passed) << ToString(r.property) << " " << r.detail;
    }
    EXPECT_TRUE(OracleSubmodular(RawOf(*inst.g()), 8));
  }
}

TEST(ValidateTest, HardFamiliesAtLargestBruteForceSizes) {
  const std::vector<InstanceBundle> bundles = {
      MakeMonotoneHard(14, 0.3), MakeNegativeHard(6, 2.0, 0.4),
      MakePositiveHard(12)};
  for (const InstanceBundle& b : bundles) {
    EXPECT_EQ(b.instance.size(), 14);
    EXPECT_TRUE(Validate(b.instance, Property::kNonNegative).passed);
    EXPECT_TRUE(Validate(b.instance, Property::kSubmodular).passed);
    EXPECT_TRUE(ValidateGroupInvariance(b.instance, b.group).passed);
  }
}

TEST(ValidateTest, AgreesWithLatticeOracleOnSmallHardInstances) {
  const std::vector<InstanceBundle> bundles = {
      MakeMonotoneHard(6, 0.1), MakeNegativeHard(2, 1.0, 0.5), MakePositiveHard(4)};
  for (const InstanceBundle& b : bundles) {
    const int n = b.instance.size();
    EXPECT_TRUE(OracleSubmodular(RawOf(*b.instance.g()), n));
    EXPECT_TRUE(Validate(b.instance, Property::kSubmodularLattice).passed);
    EXPECT_EQ(Validate(b.instance, Property::kMonotone).passed,
              OracleMonotone(RawOf(*b.instance.g()), n));
    for (const ValidationReport& r : ValidateDeclared(b.instance)) {
      EXPECT_TRUE(r.passed) << ToString(r.property);
    }
  }
}

TEST(ValidateTest, SupermodularFailsWithWitness) {
  const LambdaSetFunction square(
      3, [](SubsetMask s) { return static_cast<double>(s.Size() * s.Size()); },
      "square");
  for (Property p : {Property::kSubmodular, Property::kSubmodularLattice}) {
    const ValidationReport r = Validate(square, p);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.witness_s.has_value());
    EXPECT_FALSE(r.detail.empty());
  }
  EXPECT_TRUE(Validate(square, Property::kMonotone).passed);
}

TEST(ValidateTest, NegativeFamilyIsNotMonotone) {
  const InstanceBundle b = MakeNegativeHard(2, 2.0, 0.5);
  const ValidationReport r = Validate(b.instance, Property::kMonotone);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness_s.has_value());
  ASSERT_TRUE(r.witness_u.has_value());
  const SubsetMask s = *r.witness_s;
  EXPECT_LT(b.instance.g()->Evaluate(s.With(*r.witness_u)),
            b.instance.g()->Evaluate(s));
  const SubsetMask ab = SubsetMask::FromElements({0, 1});
  EXPECT_GT(b.instance.g()->Evaluate(ab.Without(1)), b.instance.g()->Evaluate(ab));
}

TEST(ValidateTest, EllSignAndSizeLimits) {
  const InstanceBundle mono = MakeMonotoneHard(4, 0.5);
  EXPECT_TRUE(Validate(mono.instance, Property::kEllNonPositive).passed);
  const ValidationReport r = Validate(mono.instance, Property::kEllNonNegative);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witness_u, 0);
  EXPECT_THROW(Validate(MakeMonotoneHard(15, 0.5).instance, Property::kSubmodular),
               std::invalid_argument);
  EXPECT_EQ(ParseProperty("submodular"), Property::kSubmodular);
  EXPECT_THROW(ParseProperty("convex"), std::invalid_argument);
}

TEST(ValidateTest, GroupInvarianceDetectsBrokenSymmetry) {
  const InstanceBundle b = MakeMonotoneHard(4, 0.5);
  const RusmInstance skewed(b.instance.ground(), b.instance.g(),
                            LinearWeights({-0.5, -0.5, -0.5, -0.25}),
                            b.instance.flags());
  EXPECT_FALSE(ValidateGroupInvariance(skewed, b.group).passed);
}

TEST(HardRhsTest, NegativeFamilyBestIsAtLeastTheNamedCandidate) {
  for (int n = 1; n <= 3; ++n) {
    for (double alpha : {0.2, 0.45, 0.7}) {
      for (double beta : {0.5, 1.0}) {
        const double t = 2.0, r = 0.35;
        const InstanceBundle b = MakeNegativeHard(n, t, r);
        const auto [bits, best] = OracleMaxWeighted(b.instance, alpha, beta);
        EXPECT_GE(best, alpha * (t + 1) - beta * r - 1e-12);
        const SubsetMask ab1 = SubsetMask::FromElements({0, 1 + n + 1});
        EXPECT_NEAR(alpha * b.instance.g()->Evaluate(ab1) +
                        beta * b.instance.ell()(ab1),
                    alpha * (t + 1) - beta * r, 1e-12);
      }
    }
  }
}

TEST(TableSetFunctionTest, SizeChecked) {
  EXPECT_THROW(TableSetFunction(2, {0.0, 1.0}), std::invalid_argument);
  const TableSetFunction f(1, {0.0, 2.0});
  EXPECT_EQ(f.Evaluate(SubsetMask::FromElements({0})), 2.0);
}

}  // namespace
}  // namespace rusm
