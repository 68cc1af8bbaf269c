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

#include "rusm/optimize.h"

#include <algorithm>

namespace rusm {

Optimum1D GoldenSectionMaximize(const Objective1D& fn, double lo, double hi,
                                double x_tol, int max_iter) {
  if (!(lo <= hi)) throw std::invalid_argument("empty search interval");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  Optimum1D best = fc >= fd ? Optimum1D{c, fc} : Optimum1D{d, fd};
  for (double x : {lo, hi}) {
    const double v = fn(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

Optimum1D GridGoldenMaximize(const Objective1D& fn,
                             const std::vector<double>& grid, double x_tol) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  size_t best_index = 0;
  double best_value = fn(grid[0]);
  for (size_t i = 1; i < grid.size(); ++i) {
    const double v = fn(grid[i]);
    if (v > best_value) {
      best_value = v;
      best_index = i;
    }
  }
  const double lo = grid[best_index == 0 ? 0 : best_index - 1];
  const double hi = grid[std::min(best_index + 1, grid.size() - 1)];
  Optimum1D refined = GoldenSectionMaximize(fn, lo, hi, x_tol);
  if (refined.value >= best_value) return refined;
  return {grid[best_index], best_value};
}

std::vector<double> LinearGrid(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("grid needs two points");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> LogGrid(double lo, double hi, int count) {
  if (!(lo > 0.0)) throw std::invalid_argument("log grid needs lo > 0");
  std::vector<double> out = LinearGrid(std::log(lo), std::log(hi), count);
  for (double& x : out) x = std::exp(x);
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace rusm
