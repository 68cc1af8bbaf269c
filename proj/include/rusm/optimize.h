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

#ifndef RUSM_OPTIMIZE_H_
#define RUSM_OPTIMIZE_H_

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rusm {

struct Optimum1D {
  double x = 0.0;
  double value = 0.0;
};

using Objective1D = std::function<double(double)>;

// Golden-section search for a maximum of a unimodal fn on [lo, hi], stopping
// once the bracket is narrower than x_tol. The endpoints are also compared.
Optimum1D GoldenSectionMaximize(const Objective1D& fn, double lo, double hi,
                                double x_tol = 1e-12, int max_iter = 500);

// Evaluates fn on the sorted points, then golden-section refines between
// the neighbours of the best one.
Optimum1D GridGoldenMaximize(const Objective1D& fn,
                             const std::vector<double>& grid,
                             double x_tol = 1e-12);

// `count` evenly spaced points covering [lo, hi].
std::vector<double> LinearGrid(double lo, double hi, int count);
// `count` points with logarithmic spacing on [lo, hi], lo > 0.
std::vector<double> LogGrid(double lo, double hi, int count);

inline Optimum1D GoldenSectionMinimize(const Objective1D& fn, double lo,
                                       double hi, double x_tol = 1e-12,
                                       int max_iter = 500) {
  Optimum1D best = GoldenSectionMaximize(
      [&](double x) { return -fn(x); }, lo, hi, x_tol, max_iter);
  best.value = -best.value;
  return best;
}

}  // namespace rusm

#endif  // RUSM_OPTIMIZE_H_
