// phonotact/rng.h

// Copyright 2026  The phonotact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Random draws built directly on std::mt19937_64 bits. The <random>
// distributions are implementation-defined, which would make experiment
// outputs differ between standard libraries.

#ifndef PHONOTACT_RNG_H_
#define PHONOTACT_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace phonotact {

// FNV-1a; stable across platforms, unlike std::hash.
uint64_t StableHash(std::string_view s);
// splitmix64 finalizer over the pair.
uint64_t MixSeed(uint64_t a, uint64_t b);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  // Independent stream for (seed, key), e.g. one per utterance id.
  static Rng ForStream(uint64_t seed, std::string_view key) {
    return Rng(MixSeed(seed, StableHash(key)));
  }

  uint64_t NextU64() { return engine_(); }
  // [0, 1) with 53 random bits.
  double Uniform() { return (engine_() >> 11) * 0x1.0p-53; }
  // [0, n)
  size_t Index(size_t n);
  double Normal();
  double Gamma(double shape);
  // Number of trials up to and including the first success; mean `mean`,
  // minimum 1.
  int Geometric(double mean);
  // Draws an index from unnormalized nonnegative weights.
  size_t Categorical(const std::vector<double> &weights);

 private:
  std::mt19937_64 engine_;
};

// Symmetric Dirichlet(alpha) draw of dimension k.
std::vector<double> SampleDirichlet(Rng &rng, size_t k, double alpha);

}  // namespace phonotact

#endif  // PHONOTACT_RNG_H_
