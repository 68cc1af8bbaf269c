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

#ifndef RUSM_HARDNESS_H_
#define RUSM_HARDNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rusm/instances.h"

namespace rusm {

// 1 - e^{-beta}, beta >= 0.
double AlphaMonotone(double beta);
// beta (1 - beta) / (1 + beta) on [0, 1].
double AlphaGeneral(double beta);
// beta e^{-beta} on [0, 1].
double AlphaAlgoNegative(double beta);

// (t + 1 + sqrt(D)) / (4t) - r / (t + 1) * [1 - beta - 2 ln((t+1-sqrt(D))/2)]
// with D = (t + 1)^2 - 8 t r.
double NegativeMinimand(double beta, double t, double r);

enum class MinimizerMethod { kGridRefine, kGoldenAlternating };

std::string ToString(MinimizerMethod method);

struct NegativeAlphaConfig {
  MinimizerMethod method = MinimizerMethod::kGoldenAlternating;
  double t_min = 1.0;
  double t_max = 1e4;
  double r_min = 1e-6;
  double r_max = 0.5;
  double arg_tol = 1e-7;
};

struct NegativeAlpha {
  double alpha = 0.0;
  double t = 0.0;
  double r = 0.0;
  // min_r of the minimand at t = 1e3 and at t_max.
  double tail_at_1e3 = 0.0;
  double tail_at_t_max = 0.0;
};

// Numerical minimum of NegativeMinimand over [t_min, t_max] x [r_min, r_max].
// Throws std::runtime_error when the truncation checks fail: the tail in t
// must be flat past 1e3 and the argmin must stay off the r_min edge.
NegativeAlpha AlphaNegative(double beta, const NegativeAlphaConfig& config = {});

struct MonotoneGap {
  double value = 0.0;
  double x = 0.0;
};

// max_x [1 - (1-x)^n - x r n] in closed form, with its maximizer.
MonotoneGap GapLhsMonotone(int64_t n, double r);
// The same maximum by grid plus golden-section search.
MonotoneGap GapLhsMonotoneNumeric(int64_t n, double r);
// 1 - (1-x)^n - x r n.
double MonotoneGapObjective(int64_t n, double r, double x);

struct NegativeGap {
  double value = 0.0;
  double z = 0.0;
  double w = 0.0;
  // (t+1+sqrt(D))^2 / (8t) + 2 r ln((t+1-sqrt(D))/2).
  double asymptotic = 0.0;
};

// 2 (1-z) [t z + 1 - (1-w)^n] - 2 r w n.
double NegativeGapObjective(int64_t n, double t, double r, double z, double w);
// Maximizes the objective above over [0,1]^2, eliminating z analytically.
NegativeGap GapLhsNegative(int64_t n, double t, double r);

struct PositiveGap {
  double value = 0.0;
  double z = 0.0;
  double w = 0.0;
  double x = 0.0;  // w^n
  bool in_bracket = false;  // x in [0.411, 0.412]
};

// 4z(1-z) + (2z - z^2)(1 - w^n) + n w / 3.
double PositiveGapObjective(int64_t n, double z, double w);
// Maximizes the objective above, reduced to one variable x = w^n.
PositiveGap GapLhsPositive(int64_t n);

struct GapEvaluation {
  HardInstanceDescriptor descriptor;
  double alpha = 0.0;
  double beta = 0.0;
  double slack = 0.0;
  double lhs = 0.0;
  // max_S [alpha g(S) + beta l(S)], over all orbit patterns.
  double rhs = 0.0;
  // alpha g + beta l on the family's named candidate set.
  double rhs_candidate = 0.0;
  std::string rhs_witness;
  std::optional<double> z;
  std::optional<double> w;
  std::optional<double> x;
  bool passed = false;        // lhs <= rhs + slack
  bool rhs_positive = false;  // rhs > 0
};

// max_S [alpha g(S) + beta l(S)] for a hard family, via its orbit structure.
// Writes a description of a maximizing pattern to witness when non-null.
double StructuredRhs(const HardInstanceDescriptor& d, double alpha,
                     double beta, std::string* witness = nullptr);

// Compares the symmetrized optimum with max_S [alpha g + beta l]. The slack
// defaults to 10 / n.
GapEvaluation VerifyGap(const HardInstanceDescriptor& d, double alpha,
                        double beta, std::optional<double> slack = {});

struct CurvePoint {
  double beta = 0.0;
  std::string curve_id;
  double alpha = 0.0;
};

inline constexpr const char* kCurveMonotone = "monotone_thm1";
inline constexpr const char* kCurveGeneral = "general_thm2";
inline constexpr const char* kCurveNegative = "negative_thm3";
inline constexpr const char* kCurveAlgoNegative = "algo_negative_beta_e";

// All curves defined at each grid point, grid in [0, 2]. general_thm2 and
// algo_negative_beta_e exist only for beta <= 1.
std::vector<CurvePoint> EmitCurves(const std::vector<double>& beta_grid,
                                   const NegativeAlphaConfig& config = {});
// "lo:hi:step" to the inclusive grid.
std::vector<double> ParseGrid(const std::string& spec);
std::string CurvesToCsv(const std::vector<CurvePoint>& points);

}  // namespace rusm

#endif  // RUSM_HARDNESS_H_
