// Copyright 2026 The bundleopt Authors
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
#ifndef BUNDLEOPT_COMMON_RANDOM_H_
#define BUNDLEOPT_COMMON_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace bundleopt {

// Engine used for every sampled quantity in the library.
using RandomEngine = std::mt19937_64;

// SplitMix64 finalizer; a bijective mixer on 64-bit words.
constexpr std::uint64_t MixBits(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives a child seed from a parent seed and a sequence of indices, e.g.
// DeriveSeed(run_seed, {iteration, knot}). The result depends only on the
// arguments, so work can be scheduled on any thread without changing the
// samples it draws.
inline std::uint64_t DeriveSeed(std::uint64_t parent,
                                std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = MixBits(parent);
  for (std::uint64_t index : path) {
    h = MixBits(h ^ MixBits(index + 0x632be59bd9b4e019ULL));
  }
  return h;
}

}  // namespace bundleopt

#endif  // BUNDLEOPT_COMMON_RANDOM_H_
