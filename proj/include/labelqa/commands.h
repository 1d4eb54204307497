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

#ifndef LABELQA_COMMANDS_H_
#define LABELQA_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "labelqa/io.h"
#include "labelqa/metrics.h"
#include "labelqa/tagging.h"
#include "labelqa/taxonomy.h"

namespace labelqa {

// Output files written under RunConfig::output_dir.
inline constexpr const char *kTaggedSamplesFile = "tagged_samples.jsonl";
inline constexpr const char *kBuildReportFile = "build_report.json";
inline constexpr const char *kSampledCorpusFile = "sampled_corpus.jsonl";
inline constexpr const char *kSamplePlanFile = "sample_plan.json";
inline constexpr const char *kReorderedSamplesFile = "reordered_samples.jsonl";
inline constexpr const char *kEvalReportFile = "eval_report.json";

// Environment variable consulted for the default output directory.
inline constexpr const char *kOutputDirEnv = "LABELQA_OUTPUT_DIR";

struct RunConfig {
  std::filesystem::path taxonomy_path;
  std::filesystem::path catalog_path;
  std::filesystem::path corpus_path;
  std::filesystem::path samples_path;  // tagged samples for reorder / eval
  std::vector<std::filesystem::path> predictions_paths;
  std::filesystem::path output_dir;

  std::string root_name = std::string(kDefaultRootName);
  int partition_level = 3;
  bool allow_level_one = false;
  std::string delimiter = ", ";
  bool sanitize = false;
  std::size_t max_len = 512;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  double margin = 0.05;
  std::optional<std::int64_t> sample_size;  // overrides the computed plan
};

// output_dir from the environment, else "labelqa_out".
std::filesystem::path DefaultOutputDir();

struct TreeStatsResult {
  int height = 0;
  std::size_t node_count = 0;
  std::vector<PartitionStats> rows;  // levels 1 .. height-1

  std::string ToText() const;
  Json ToJson() const;
};
TreeStatsResult CmdTreeStats(const RunConfig &config);

// Writes tagged_samples.jsonl and build_report.json; returns the report.
Json CmdBuild(const RunConfig &config);

// Writes sampled_corpus.jsonl and sample_plan.json; returns the plan.
Json CmdSample(const RunConfig &config);

// Writes reordered_samples.jsonl; returns a small summary.
Json CmdReorder(const RunConfig &config);

enum class EvalSelection { kStrict, kClassification, kBoth };

struct SampleScore {
  EvalCounts strict;
  EvalCounts classification;
};

// Scores one tagged sample against word-level predicted tags.
SampleScore ScoreSample(const TaggedSample &tagged,
                        const std::vector<int> &pred_tags,
                        std::string_view delimiter);

struct CorpusScore {
  EvalCounts strict;
  EvalCounts classification;
  std::size_t scored_samples = 0;
  std::size_t missing_predictions = 0;
};

// Micro-averaged over samples. Unknown sample ids and length mismatches
// throw; samples without a prediction are skipped and counted.
CorpusScore ScoreCorpus(const std::vector<TaggedSample> &samples,
                        const std::map<std::string, std::vector<int>> &preds,
                        std::string_view delimiter);

std::vector<TaggedSample> LoadTaggedSamples(const std::filesystem::path &path);
std::map<std::string, std::vector<int>> LoadPredictions(
    const std::filesystem::path &path);

// Writes eval_report.json; returns the report.
Json CmdEval(const RunConfig &config, EvalSelection selection);

}  // namespace labelqa

#endif  // LABELQA_COMMANDS_H_
