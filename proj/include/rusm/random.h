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

#ifndef RUSM_RANDOM_H_
#define RUSM_RANDOM_H_

#include <cstdint>
#include <random>

namespace rusm {

// Seedable generator whose streams are derived from (master_seed, index), so
// trial i sees the same randomness whether trials run serially or not.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(Mix(seed)) {}

  static Rng ForStream(uint64_t master_seed, uint64_t stream) {
    return Rng(DeriveSeed(master_seed, stream));
  }
  static uint64_t DeriveSeed(uint64_t master_seed, uint64_t stream) {
    return Mix(master_seed ^ Mix(stream + 0x632be59bd9b4e019ULL));
  }

  uint64_t seed() const { return seed_; }
  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  // True with probability p; p = 0 never fires and p = 1 always does.
  bool Bernoulli(double p) { return Uniform01() < p; }
  // Uniform on {0, ..., bound - 1}.
  uint64_t UniformInt(uint64_t bound) {
    return std::uniform_int_distribution<uint64_t>(0, bound - 1)(engine_);
  }

  // Child stream keyed by index, independent of this generator's position.
  Rng Split(uint64_t index) const { return ForStream(seed_, index); }

 private:
  // splitmix64 finalizer.
  static uint64_t Mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rusm

#endif  // RUSM_RANDOM_H_
