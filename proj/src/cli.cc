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

#include "rusm/cli.h"

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rusm/experiment.h"
#include "rusm/hardness.h"
#include "rusm/instance_io.h"
#include "rusm/serialize.h"
#include "rusm/validate.h"

namespace rusm {
namespace {

using nlohmann::json;

struct InstanceFlags {
  std::string file;
  std::string family;
  std::string random;
  int64_t n = 0;
  double r = 0.0;
  double t = 1.0;
  uint64_t instance_seed = 0;
  std::string ell_sign = "mixed";

  void Add(CLI::App* app) {
    app->add_option("--file", file, "instance JSON file");
    app->add_option("--family", family,
                    "hard family: monotone_sec3, negative_sec5, positive_sec61");
    app->add_option("--random", random, "random generator: cut or coverage");
    app->add_option("--n", n, "block size (hard) or element count (random)");
    app->add_option("--r", r, "hard-family r");
    app->add_option("--t", t, "hard-family t");
    app->add_option("--instance-seed", instance_seed, "random generator seed");
    app->add_option("--ell-sign", ell_sign, "mixed, nonneg or nonpos");
  }

  LoadedInstance Load() const {
    const int sources = !file.empty() + !family.empty() + !random.empty();
    if (sources != 1) {
      throw std::invalid_argument(
          "give exactly one of --file, --family or --random");
    }
    if (!file.empty()) return LoadInstance(file);
    if (!family.empty()) {
      const HardInstanceDescriptor d{ParseHardFamily(family), n, r, t};
      d.Validate();
      InstanceBundle b = MakeHardInstance(d);
      return {b.instance, b.group, d};
    }
    RandomFamilyParams params;
    params.kind = ParseRandomKind(random);
    params.ell_sign = ParseEllSign(ell_sign);
    Rng rng(instance_seed);
    return {MakeRandomInstance(static_cast<int>(n), params, rng), std::nullopt,
            std::nullopt};
  }
};

struct LsFlags {
  double beta = 0.5;
  double epsilon = 0.05;
  std::string marginal_mode = "exact";
  int64_t samples = 0;
  int64_t iteration_cap = 0;
  bool exploratory = false;

  void Add(CLI::App* app) {
    app->add_option("--beta", beta, "local-search beta");
    app->add_option("--epsilon", epsilon, "local-search epsilon");
    app->add_option("--marginal-mode", marginal_mode, "exact or sampled");
    app->add_option("--samples", samples, "samples per marginal estimate");
    app->add_option("--iteration-cap", iteration_cap, "override iteration cap");
    app->add_flag("--exploratory", exploratory,
                  "allow epsilon outside the guaranteed range");
  }

  LsConfig Config() const {
    LsConfig c;
    c.beta = beta;
    c.epsilon = epsilon;
    c.marginal_mode = ParseMarginalMode(marginal_mode);
    if (samples > 0) c.sample_count_override = samples;
    if (iteration_cap > 0) c.iteration_cap_override = iteration_cap;
    c.guarantee_mode = !exploratory;
    return c;
  }
};

GuaranteeCheck ParseCheck(const std::string& text) {
  GuaranteeCheck c;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> c.alpha >> comma >> c.beta) || comma != ',' ||
      !(in >> std::ws).eof()) {
    throw std::invalid_argument("check must look like alpha,beta, got " + text);
  }
  return c;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Regularized unconstrained submodular maximization toolkit",
               "rusm"};
  app.require_subcommand(1);

  InstanceFlags solve_inst;
  LsFlags solve_ls;
  std::string solve_algorithm = "dg-det";
  uint64_t solve_seed = 0;
  std::string solve_out;
  CLI::App* solve = app.add_subcommand("solve", "run one algorithm once");
  solve_inst.Add(solve);
  solve_ls.Add(solve);
  solve->add_option("--algorithm", solve_algorithm, "ls, dg-det, dg-rand, brute");
  solve->add_option("--seed", solve_seed, "random seed");
  solve->add_option("--out", solve_out, "report JSON path");

  InstanceFlags verify_inst;
  LsFlags verify_ls;
  std::string verify_algorithm = "dg-det";
  uint64_t verify_seed = 0;
  int64_t verify_trials = 1;
  std::vector<std::string> verify_checks;
  std::string verify_out, verify_csv;
  CLI::App* verify =
      app.add_subcommand("verify", "run seeded trials and guarantee checks");
  verify_inst.Add(verify);
  verify_ls.Add(verify);
  verify->add_option("--algorithm", verify_algorithm, "ls, dg-det, dg-rand, brute");
  verify->add_option("--seed", verify_seed, "master seed");
  verify->add_option("--trials", verify_trials, "number of trials");
  verify->add_option("--check", verify_checks, "alpha,beta (repeatable)");
  verify->add_option("--out", verify_out, "result JSON path");
  verify->add_option("--csv", verify_csv, "per-trial CSV path");

  std::string curve_grid = "0:1:0.01";
  std::string curve_out;
  std::string curve_method = "golden";
  CLI::App* curve = app.add_subcommand("curve", "evaluate the frontier curves");
  curve->add_option("--grid", curve_grid, "lo:hi:step within [0, 2]");
  curve->add_option("--out", curve_out, "CSV path");
  curve->add_option("--method", curve_method, "golden or grid");

  std::string gap_family;
  int64_t gap_n = 0;
  double gap_r = 0.0, gap_t = 1.0, gap_alpha = 0.0, gap_beta = 1.0;
  std::optional<double> gap_slack;
  std::string gap_out;
  CLI::App* gap = app.add_subcommand("gap", "check a symmetry-gap inequality");
  gap->add_option("--family", gap_family, "hard family")->required();
  gap->add_option("--n", gap_n, "block size")->required();
  gap->add_option("--r", gap_r, "r");
  gap->add_option("--t", gap_t, "t");
  gap->add_option("--alpha", gap_alpha, "alpha")->required();
  gap->add_option("--beta", gap_beta, "beta")->required();
  gap->add_option("--slack", gap_slack, "allowed excess, default 10/n");
  gap->add_option("--out", gap_out, "report JSON path");

  InstanceFlags validate_inst;
  std::vector<std::string> validate_properties;
  CLI::App* validate =
      app.add_subcommand("validate", "brute-force property checks");
  validate_inst.Add(validate);
  validate->add_option("--property", validate_properties,
                       "property to check (repeatable); default: declared");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const LoadedInstance loaded = solve_inst.Load();
      const SolverReport report =
          RunSolver(loaded.instance, ParseAlgorithm(solve_algorithm),
                    solve_ls.Config(), solve_seed);
      Emit(solve_out, ToJson(report).dump(2) + "\n", out);
      return kExitOk;
    }
    if (verify->parsed()) {
      ExperimentSpec spec;
      if (!verify_inst.file.empty() && verify_inst.family.empty() &&
          verify_inst.random.empty()) {
        spec.instance_path = verify_inst.file;
      } else {
        spec.instance_doc = InstanceToJson(verify_inst.Load().instance);
      }
      spec.algorithm = ParseAlgorithm(verify_algorithm);
      spec.ls_config = verify_ls.Config();
      spec.trials = verify_trials;
      spec.master_seed = verify_seed;
      for (const std::string& c : verify_checks) spec.checks.push_back(ParseCheck(c));
      spec.json_out = verify_out;
      spec.csv_out = verify_csv;
      const ExperimentResult result = RunExperiment(spec);
      out << "mean " << Fixed(result.mean) << " stderr "
          << Fixed(result.stderr_value) << " trials " << result.trials << "\n";
      for (const CheckResult& c : result.checks) {
        out << (c.passed ? "PASS" : "FAIL") << " " << c.label << " alpha="
            << Fixed(c.check.alpha) << " beta=" << Fixed(c.check.beta)
            << " rhs=" << Fixed(c.rhs) << " slack=" << Fixed(c.slack) << "\n";
      }
      if (verify_out.empty()) out << ToJson(result).dump(2) << "\n";
      return result.GuaranteesHold() ? kExitOk : kExitCheckFailed;
    }
    if (curve->parsed()) {
      NegativeAlphaConfig config;
      if (curve_method == "grid") {
        config.method = MinimizerMethod::kGridRefine;
      } else if (curve_method != "golden") {
        throw std::invalid_argument("method must be golden or grid");
      }
      Emit(curve_out, CurvesToCsv(EmitCurves(ParseGrid(curve_grid), config)),
           out);
      return kExitOk;
    }
    if (gap->parsed()) {
      const HardInstanceDescriptor d{ParseHardFamily(gap_family), gap_n, gap_r,
                                     gap_t};
      const GapEvaluation g = VerifyGap(d, gap_alpha, gap_beta, gap_slack);
      const std::string text = ToJson(g).dump(2) + "\n";
      Emit(gap_out, text, out);
      if (!gap_out.empty()) out << (g.passed ? "PASS" : "FAIL") << "\n";
      return g.passed ? kExitOk : kExitCheckFailed;
    }
    if (validate->parsed()) {
      const LoadedInstance loaded = validate_inst.Load();
      std::vector<ValidationReport> reports;
      if (validate_properties.empty()) {
        reports = ValidateDeclared(loaded.instance);
        if (loaded.group) {
          reports.push_back(
              ValidateGroupInvariance(loaded.instance, *loaded.group));
        }
      }
      for (const std::string& name : validate_properties) {
        const Property p = ParseProperty(name);
        if (p == Property::kGroupInvariant) {
          if (!loaded.group) {
            throw std::invalid_argument("group_invariant needs a hard family");
          }
          reports.push_back(ValidateGroupInvariance(loaded.instance, *loaded.group));
        } else {
          reports.push_back(Validate(loaded.instance, p));
        }
      }
      bool all = true;
      for (const ValidationReport& r : reports) {
        all = all && r.passed;
        out << ToJson(r).dump() << "\n";
      }
      return all ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rusm
