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

#include "rusm/hardness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rusm/families.h"
#include "rusm/optimize.h"

namespace rusm {
namespace {

void CheckBetaRange(double beta, double hi, const char* what) {
  if (!(beta >= 0.0 && beta <= hi)) {
    std::ostringstream msg;
    msg << what << " needs beta in [0, " << hi << "], got " << beta;
    throw std::invalid_argument(msg.str());
  }
}

// (1 - x)^n without cancellation for tiny x.
double PowOneMinus(double x, int64_t n) {
  if (x >= 1.0) return 0.0;
  return std::exp(static_cast<double>(n) * std::log1p(-x));
}

// Points (k/K)^3 on [0, 1], dense near 0 where the optimizers sit.
std::vector<double> CubicGrid(int count) {
  std::vector<double> out(count + 1);
  for (int k = 0; k <= count; ++k) {
    const double s = static_cast<double>(k) / count;
    out[k] = s * s * s;
  }
  return out;
}

double SqrtDiscriminant(double t, double r) {
  return std::sqrt(std::max(0.0, (t + 1.0) * (t + 1.0) - 8.0 * t * r));
}

struct Point2 {
  double s;  // ln t
  double r;
  double value;
};

Point2 CoarseGrid(double beta, const NegativeAlphaConfig& c, int nt, int nr) {
  const std::vector<double> ss =
      LinearGrid(std::log(c.t_min), std::log(c.t_max), nt);
  const std::vector<double> rs = LinearGrid(c.r_min, c.r_max, nr);
  Point2 best{ss[0], rs[0], std::numeric_limits<double>::infinity()};
  for (double s : ss) {
    for (double r : rs) {
      const double v = NegativeMinimand(beta, std::exp(s), r);
      if (v < best.value) best = {s, r, v};
    }
  }
  return best;
}

Point2 GridRefine(double beta, const NegativeAlphaConfig& c) {
  const int kCoarse = 200;
  const int kFine = 11;
  const double s_lo = std::log(c.t_min), s_hi = std::log(c.t_max);
  Point2 best = CoarseGrid(beta, c, kCoarse, kCoarse);
  double ds = (s_hi - s_lo) / (kCoarse - 1);
  double dr = (c.r_max - c.r_min) / (kCoarse - 1);
  while (ds > c.arg_tol * 1e-2 || dr > c.arg_tol * 1e-2) {
    const double a0 = std::max(s_lo, best.s - ds), a1 = std::min(s_hi, best.s + ds);
    const double b0 = std::max(c.r_min, best.r - dr);
    const double b1 = std::min(c.r_max, best.r + dr);
    for (int i = 0; i < kFine; ++i) {
      const double s = a0 + (a1 - a0) * i / (kFine - 1);
      for (int j = 0; j < kFine; ++j) {
        const double r = b0 + (b1 - b0) * j / (kFine - 1);
        const double v = NegativeMinimand(beta, std::exp(s), r);
        if (v < best.value) best = {s, r, v};
      }
    }
    ds = (a1 - a0) / (kFine - 1);
    dr = (b1 - b0) / (kFine - 1);
  }
  return best;
}

Point2 GoldenAlternating(double beta, const NegativeAlphaConfig& c) {
  const int kCoarse = 48;
  const double s_lo = std::log(c.t_min), s_hi = std::log(c.t_max);
  Point2 best = CoarseGrid(beta, c, kCoarse, kCoarse);
  const double ds = 2.0 * (s_hi - s_lo) / (kCoarse - 1);
  const double dr = 2.0 * (c.r_max - c.r_min) / (kCoarse - 1);
  const double a0 = std::max(s_lo, best.s - ds), a1 = std::min(s_hi, best.s + ds);
  const double b0 = std::max(c.r_min, best.r - dr);
  const double b1 = std::min(c.r_max, best.r + dr);
  const double inner_tol = c.arg_tol * 1e-3;
  for (int round = 0; round < 200; ++round) {
    const Point2 prev = best;
    const Optimum1D in_r = GoldenSectionMinimize(
        [&](double r) { return NegativeMinimand(beta, std::exp(best.s), r); },
        b0, b1, inner_tol);
    if (in_r.value <= best.value) best = {best.s, in_r.x, in_r.value};
    const Optimum1D in_s = GoldenSectionMinimize(
        [&](double s) { return NegativeMinimand(beta, std::exp(s), best.r); },
        a0, a1, inner_tol);
    if (in_s.value <= best.value) best = {in_s.x, best.r, in_s.value};
    if (std::abs(best.s - prev.s) < c.arg_tol * 1e-2 &&
        std::abs(best.r - prev.r) < c.arg_tol * 1e-2) {
      break;
    }
  }
  return best;
}

double MinOverR(double beta, double t, const NegativeAlphaConfig& c) {
  const Optimum1D best = GridGoldenMaximize(
      [&](double r) { return -NegativeMinimand(beta, t, r); },
      LinearGrid(c.r_min, c.r_max, 401));
  return -best.value;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string out = "{";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += parts[i];
  }
  return out + "}";
}

}  // namespace

double AlphaMonotone(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be >= 0");
  return -std::expm1(-beta);
}

double AlphaGeneral(double beta) {
  CheckBetaRange(beta, 1.0, "alpha_general");
  return beta * (1.0 - beta) / (1.0 + beta);
}

double AlphaAlgoNegative(double beta) {
  CheckBetaRange(beta, 1.0, "alpha_algo_negative");
  return beta * std::exp(-beta);
}

double NegativeMinimand(double beta, double t, double r) {
  const double root = SqrtDiscriminant(t, r);
  return (t + 1.0 + root) / (4.0 * t) -
         r / (t + 1.0) *
             (1.0 - beta - 2.0 * std::log((t + 1.0 - root) / 2.0));
}

std::string ToString(MinimizerMethod method) {
  return method == MinimizerMethod::kGridRefine ? "grid_refine"
                                                : "golden_alternating";
}

NegativeAlpha AlphaNegative(double beta, const NegativeAlphaConfig& config) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be >= 0");
  }
  if (!(config.t_min >= 1.0 && config.t_max > config.t_min &&
        config.r_min > 0.0 && config.r_max <= 0.5 &&
        config.r_max > config.r_min)) {
    throw std::invalid_argument("bad (t, r) box");
  }
  const Point2 best = config.method == MinimizerMethod::kGridRefine
                          ? GridRefine(beta, config)
                          : GoldenAlternating(beta, config);
  NegativeAlpha out;
  out.alpha = best.value;
  out.t = std::clamp(std::exp(best.s), config.t_min, config.t_max);
  out.r = best.r;
  out.tail_at_t_max = MinOverR(beta, config.t_max, config);
  out.tail_at_1e3 = config.t_max > 1e3 ? MinOverR(beta, 1e3, config)
                                       : out.tail_at_t_max;
  if (std::abs(out.tail_at_1e3 - out.tail_at_t_max) >= 1e-3) {
    throw std::runtime_error("minimand is not flat in t past 1e3");
  }
  if (out.r <= 10.0 * config.r_min) {
    throw std::runtime_error("minimum sits on the r -> 0 edge");
  }
  return out;
}

double MonotoneGapObjective(int64_t n, double r, double x) {
  return 1.0 - PowOneMinus(x, n) - x * r * static_cast<double>(n);
}

MonotoneGap GapLhsMonotone(int64_t n, double r) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("r must be in (0, 1]");
  const double m = static_cast<double>(n - 1);
  const double x = -std::expm1(std::log(r) / m);
  return {1.0 - r - r * m * x, x};
}

MonotoneGap GapLhsMonotoneNumeric(int64_t n, double r) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("r must be in (0, 1]");
  const Optimum1D best = GridGoldenMaximize(
      [&](double x) { return MonotoneGapObjective(n, r, x); }, CubicGrid(4000));
  return {best.value, best.x};
}

double NegativeGapObjective(int64_t n, double t, double r, double z,
                            double w) {
  return 2.0 * (1.0 - z) * (t * z + 1.0 - PowOneMinus(w, n)) -
         2.0 * r * w * static_cast<double>(n);
}

NegativeGap GapLhsNegative(int64_t n, double t, double r) {
  HardInstanceDescriptor{HardFamily::kNegativeSec5, n, r, t}.Validate();
  const auto reduced = [&](double w) {
    const double q = PowOneMinus(w, n);
    return (t + 1.0 - q) * (t + 1.0 - q) / (2.0 * t) -
           2.0 * r * w * static_cast<double>(n);
  };
  const Optimum1D best = GridGoldenMaximize(reduced, CubicGrid(4000));
  NegativeGap out;
  out.value = best.value;
  out.w = best.x;
  out.z = (t - 1.0 + PowOneMinus(best.x, n)) / (2.0 * t);
  const double root = SqrtDiscriminant(t, r);
  out.asymptotic = (t + 1.0 + root) * (t + 1.0 + root) / (8.0 * t) +
                   2.0 * r * std::log((t + 1.0 - root) / 2.0);
  return out;
}

double PositiveGapObjective(int64_t n, double z, double w) {
  const double x = std::pow(w, static_cast<double>(n));
  return 4.0 * z * (1.0 - z) + (2.0 * z - z * z) * (1.0 - x) +
         static_cast<double>(n) * w / 3.0;
}

PositiveGap GapLhsPositive(int64_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const double nd = static_cast<double>(n);
  // Objective minus n/3, as a function of x = w^n.
  const auto reduced = [&](double x) {
    const double shifted =
        x > 0.0 ? nd * std::expm1(std::log(x) / nd) / 3.0 : -nd / 3.0;
    return 1.0 - x + 4.0 / (5.0 - x) + shifted;
  };
  const Optimum1D best = GridGoldenMaximize(reduced, LinearGrid(0.0, 1.0, 20001));
  PositiveGap out;
  out.x = best.x;
  out.value = best.value + nd / 3.0;
  out.w = std::pow(best.x, 1.0 / nd);
  out.z = 1.0 - 2.0 / (5.0 - best.x);
  out.in_bracket = out.x >= 0.411 && out.x <= 0.412;
  return out;
}

double StructuredRhs(const HardInstanceDescriptor& d, double alpha,
                     double beta, std::string* witness) {
  d.Validate();
  double best = -std::numeric_limits<double>::infinity();
  std::string best_witness;
  const auto consider = [&](double v, const std::vector<std::string>& parts) {
    if (v > best) {
      best = v;
      best_witness = Join(parts);
    }
  };
  switch (d.family) {
    case HardFamily::kMonotoneSec3:
      consider(0.0, {});
      consider(alpha * MonotoneHardFunction::ValueFromCount(1) - beta * d.r,
               {"u1"});
      break;
    case HardFamily::kNegativeSec5:
      for (int mask = 0; mask < 16; ++mask) {
        const bool a = mask & 1, b = mask & 2, ai = mask & 4, bi = mask & 8;
        std::vector<std::string> parts;
        if (a) parts.push_back("a");
        if (b) parts.push_back("b");
        if (ai) parts.push_back("a1");
        if (bi) parts.push_back("b1");
        const double g = NegativeHardFunction::Value(d.t, a, b, ai, bi);
        consider(alpha * g - beta * d.r * (int{ai} + int{bi}), parts);
      }
      break;
    case HardFamily::kPositiveSec61:
      for (int mask = 0; mask < 4; ++mask) {
        const bool a = mask & 1, b = mask & 2;
        for (int64_t k : {int64_t{0}, d.n - 1, d.n}) {
          std::vector<std::string> parts;
          if (a) parts.push_back("a");
          if (b) parts.push_back("b");
          if (k > 0) parts.push_back("c1..c" + std::to_string(k));
          const double g = PositiveHardFunction::Value(d.n, a, b, k);
          consider(alpha * g + beta * static_cast<double>(k) / 3.0, parts);
        }
      }
      break;
  }
  if (witness != nullptr) *witness = best_witness;
  return best;
}

GapEvaluation VerifyGap(const HardInstanceDescriptor& d, double alpha,
                        double beta, std::optional<double> slack) {
  d.Validate();
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("alpha and beta must be finite");
  }
  GapEvaluation out;
  out.descriptor = d;
  out.alpha = alpha;
  out.beta = beta;
  out.slack = slack.value_or(10.0 / static_cast<double>(d.n));
  if (!(out.slack >= 0.0)) throw std::invalid_argument("slack must be >= 0");
  switch (d.family) {
    case HardFamily::kMonotoneSec3: {
      const MonotoneGap gap = GapLhsMonotone(d.n, d.r);
      out.lhs = gap.value;
      out.x = gap.x;
      out.rhs_candidate = alpha - beta * d.r;
      break;
    }
    case HardFamily::kNegativeSec5: {
      const NegativeGap gap = GapLhsNegative(d.n, d.t, d.r);
      out.lhs = gap.value;
      out.z = gap.z;
      out.w = gap.w;
      out.rhs_candidate = alpha * (d.t + 1.0) - beta * d.r;
      break;
    }
    case HardFamily::kPositiveSec61: {
      const PositiveGap gap = GapLhsPositive(d.n);
      out.lhs = gap.value;
      out.z = gap.z;
      out.w = gap.w;
      out.x = gap.x;
      out.rhs_candidate =
          3.0 * alpha + beta * static_cast<double>(d.n - 1) / 3.0;
      break;
    }
  }
  out.rhs = StructuredRhs(d, alpha, beta, &out.rhs_witness);
  out.passed = out.lhs <= out.rhs + out.slack;
  out.rhs_positive = out.rhs > 0.0;
  return out;
}

std::vector<CurvePoint> EmitCurves(const std::vector<double>& beta_grid,
                                   const NegativeAlphaConfig& config) {
  std::vector<CurvePoint> out;
  for (double beta : beta_grid) {
    CheckBetaRange(beta, 2.0, "emit_curves");
    out.push_back({beta, kCurveMonotone, AlphaMonotone(beta)});
    if (beta <= 1.0) out.push_back({beta, kCurveGeneral, AlphaGeneral(beta)});
    out.push_back({beta, kCurveNegative, AlphaNegative(beta, config).alpha});
    if (beta <= 1.0) {
      out.push_back({beta, kCurveAlgoNegative, AlphaAlgoNegative(beta)});
    }
  }
  return out;
}

std::vector<double> ParseGrid(const std::string& spec) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw std::invalid_argument("grid must look like lo:hi:step, got " + spec);
  }
  if (!(step > 0.0) || !(hi >= lo)) {
    throw std::invalid_argument("grid needs step > 0 and hi >= lo");
  }
  const int64_t count =
      static_cast<int64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 1'000'000) throw std::invalid_argument("grid too large");
  std::vector<double> out(count);
  for (int64_t i = 0; i < count; ++i) {
    out[i] = std::min(hi, lo + static_cast<double>(i) * step);
  }
  return out;
}

std::string CurvesToCsv(const std::vector<CurvePoint>& points) {
  std::string out = "beta,curve_id,alpha\n";
  char buf[64];
  for (const CurvePoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%.10g", p.beta);
    out += buf;
    out += ",";
    out += p.curve_id;
    std::snprintf(buf, sizeof(buf), ",%.12g\n", p.alpha);
    out += buf;
  }
  return out;
}

}  // namespace rusm
