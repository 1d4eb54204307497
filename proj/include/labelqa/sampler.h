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

#ifndef LABELQA_SAMPLER_H_
#define LABELQA_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "labelqa/corpus.h"
#include "labelqa/io.h"

namespace labelqa {

struct SamplePlan {
  std::int64_t population = 0;
  double confidence = 0.95;
  double margin = 0.05;
  double proportion = 0.5;
  double z = 1.96;
  std::int64_t size = 0;

  Json ToJson() const;
};

// z-score for the supported confidence levels 0.90, 0.95 and 0.99.
// Throws kInvalidConfidence otherwise.
double ZScore(double confidence);

// Cochran's sample size with finite-population correction, p = 0.5:
//   n0 = z^2 p (1-p) / e^2,  n = min(N, ceil(n0 / (1 + n0 / N))).
// Throws kInvalidPopulation, kInvalidConfidence, kInvalidMargin.
SamplePlan PlanSample(std::int64_t population, double confidence = 0.95,
                      double margin = 0.05);
inline std::int64_t SampleSize(std::int64_t population,
                               double confidence = 0.95,
                               double margin = 0.05) {
  return PlanSample(population, confidence, margin).size;
}

// Indices of a seeded uniform draw of n out of `population` without
// replacement, ascending.
std::vector<std::size_t> DrawIndices(std::size_t population, std::size_t n,
                                     std::uint64_t seed);

// The drawn records in their original relative order. Throws
// kSampleTooLarge when n > records.size().
std::vector<DocumentRecord> DrawSample(const std::vector<DocumentRecord> &records,
                                       std::size_t n, std::uint64_t seed);

}  // namespace labelqa

#endif  // LABELQA_SAMPLER_H_
