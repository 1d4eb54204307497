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

#include "labelqa/sampler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "labelqa/error.h"
#include "labelqa/random.h"

namespace labelqa {

Json SamplePlan::ToJson() const {
  Json j;
  j["population"] = population;
  j["confidence"] = confidence;
  j["margin"] = margin;
  j["proportion"] = proportion;
  j["z"] = z;
  j["size"] = size;
  return j;
}

double ZScore(double confidence) {
  struct Level {
    double confidence;
    double z;
  };
  static constexpr Level kLevels[] = {{0.90, 1.645}, {0.95, 1.96},
                                      {0.99, 2.576}};
  for (const Level &l : kLevels) {
    if (std::abs(confidence - l.confidence) < 1e-9) return l.z;
  }
  throw Error(ErrorCode::kInvalidConfidence,
              std::to_string(confidence) + " (expected 0.90, 0.95 or 0.99)");
}

SamplePlan PlanSample(std::int64_t population, double confidence,
                      double margin) {
  if (population < 1) {
    throw Error(ErrorCode::kInvalidPopulation, std::to_string(population));
  }
  if (!(margin > 0.0 && margin < 1.0)) {
    throw Error(ErrorCode::kInvalidMargin, std::to_string(margin));
  }
  SamplePlan plan;
  plan.population = population;
  plan.confidence = confidence;
  plan.margin = margin;
  plan.z = ZScore(confidence);

  const double pq = plan.proportion * (1.0 - plan.proportion);
  const double n0 = plan.z * plan.z * pq / (margin * margin);
  const double n = n0 / (1.0 + n0 / static_cast<double>(population));
  // Absorb representation error so an exact integer does not round up.
  const auto rounded = static_cast<std::int64_t>(std::ceil(n - 1e-9));
  plan.size = std::clamp<std::int64_t>(rounded, 1, population);
  return plan;
}

std::vector<std::size_t> DrawIndices(std::size_t population, std::size_t n,
                                     std::uint64_t seed) {
  if (n > population) {
    throw Error(ErrorCode::kSampleTooLarge,
                std::to_string(n) + " > " + std::to_string(population));
  }
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Engine engine(seed);
  // Partial Fisher-Yates: the first n slots become a uniform n-subset.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(UniformBelow(engine, population - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<DocumentRecord> DrawSample(const std::vector<DocumentRecord> &records,
                                       std::size_t n, std::uint64_t seed) {
  std::vector<DocumentRecord> out;
  out.reserve(n);
  for (std::size_t i : DrawIndices(records.size(), n, seed)) {
    out.push_back(records[i]);
  }
  return out;
}

}  // namespace labelqa
