// Copyright 2026 The labelqa Authors.
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

#ifndef LABELQA_RANDOM_H_
#define LABELQA_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace labelqa {

// std::mt19937_64 is bit-exact across standard libraries, but the standard
// distributions and std::shuffle are not. Everything that must reproduce
// byte-for-byte draws through these helpers.
using Engine = std::mt19937_64;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by rejection; bound must be > 0.
inline std::uint64_t UniformBelow(Engine &engine, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

// Fisher-Yates.
template <typename T>
void SeededShuffle(std::span<T> items, Engine &engine) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(UniformBelow(engine, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace labelqa

#endif  // LABELQA_RANDOM_H_
