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

#include "labelqa/commands.h"

#include <cstdlib>
#include <sstream>

#include "labelqa/corpus.h"
#include "labelqa/dataset_builder.h"
#include "labelqa/error.h"
#include "labelqa/random.h"
#include "labelqa/sampler.h"

namespace labelqa {
namespace {

// Tokens added around a sentence pair by BERT-style encoders.
constexpr std::size_t kSpecialTokensPerPair = 3;

void RequirePath(const std::filesystem::path &path, const char *flag) {
  if (path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(flag) + " is required");
  }
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kIo, "no such file: " + path.string());
  }
}

std::filesystem::path OutputDir(const RunConfig &config) {
  return config.output_dir.empty() ? DefaultOutputDir() : config.output_dir;
}

void CheckPartitionLevel(const RunConfig &config, const TaxonomyTree &tree) {
  if (config.partition_level < 1 ||
      (config.partition_level == 1 && !config.allow_level_one)) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "partition level must be >= 2 (level 1 puts every node in "
                "one list; pass --allow-level-one to force it)");
  }
  if (config.partition_level > tree.height()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "partition level " + std::to_string(config.partition_level) +
                    " exceeds tree height " + std::to_string(tree.height()));
  }
}

std::string JsonLines(const std::vector<Json> &rows) {
  std::string out;
  for (const Json &row : rows) {
    out += row.dump();
    out += '\n';
  }
  return out;
}

Json ScoreJson(const CorpusScore &score, EvalSelection selection) {
  Json j;
  j["scored_samples"] = score.scored_samples;
  j["missing_predictions"] = score.missing_predictions;
  if (selection != EvalSelection::kClassification) {
    j["strict"] = EvalReport{EvalMode::kStrict, score.strict}.ToJson();
  }
  if (selection != EvalSelection::kStrict) {
    j["classification"] =
        EvalReport{EvalMode::kClassification, score.classification}.ToJson();
  }
  return j;
}

}  // namespace

std::filesystem::path DefaultOutputDir() {
  const char *env = std::getenv(kOutputDirEnv);
  return (env != nullptr && *env != '\0') ? std::filesystem::path(env)
                                          : std::filesystem::path("labelqa_out");
}

std::string TreeStatsResult::ToText() const {
  std::ostringstream out;
  out << "level, subtrees, mean_nodes, max_nodes, min_nodes\n";
  for (const PartitionStats &s : rows) {
    out << s.parent_level << ", " << s.subtree_count << ", "
        << s.mean_nodes_rounded() << ", " << s.max_nodes << ", "
        << s.min_nodes << "\n";
  }
  return out.str();
}

Json TreeStatsResult::ToJson() const {
  Json j;
  j["height"] = height;
  j["nodes"] = node_count;
  Json levels = Json::array();
  for (const PartitionStats &s : rows) {
    Json row;
    row["parent_level"] = s.parent_level;
    row["subtree_count"] = s.subtree_count;
    row["mean_nodes"] = s.mean_nodes();
    row["mean_nodes_rounded"] = s.mean_nodes_rounded();
    row["max_nodes"] = s.max_nodes;
    row["min_nodes"] = s.min_nodes;
    levels.push_back(std::move(row));
  }
  j["levels"] = std::move(levels);
  return j;
}

TreeStatsResult CmdTreeStats(const RunConfig &config) {
  RequirePath(config.taxonomy_path, "--taxonomy");
  const TaxonomyTree tree =
      LoadTaxonomy(config.taxonomy_path, {config.root_name});
  TreeStatsResult result;
  result.height = tree.height();
  result.node_count = tree.size();
  for (int level = 1; level < tree.height(); ++level) {
    result.rows.push_back(ComputePartitionStats(tree, level));
  }
  return result;
}

Json CmdBuild(const RunConfig &config) {
  RequirePath(config.taxonomy_path, "--taxonomy");
  RequirePath(config.catalog_path, "--catalog");
  RequirePath(config.corpus_path, "--corpus");
  const TaxonomyTree tree =
      LoadTaxonomy(config.taxonomy_path, {config.root_name});
  CheckPartitionLevel(config, tree);
  const ConceptCatalog catalog = LoadCatalog(config.catalog_path);
  const std::vector<DocumentRecord> records = LoadCorpus(config.corpus_path);

  const RenderOptions render{config.delimiter, config.sanitize};
  std::vector<BuiltSample> samples =
      BuildSamples(records, catalog, tree, config.partition_level, render);
  const std::size_t subtree_count =
      ComputePartitionStats(tree, config.partition_level).subtree_count;

  std::vector<Json> rows;
  rows.reserve(samples.size());
  std::size_t overflow = 0;
  for (BuiltSample &s : samples) {
    TaggedSample tagged = MakeTaggedSample(std::move(s));
    if (tagged.sequence.size() + kSpecialTokensPerPair > config.max_len) {
      ++overflow;
    }
    rows.push_back(TaggedSampleToJson(tagged));
  }

  const std::size_t considered = records.size() * subtree_count;
  Json report;
  report["records"] = records.size();
  report["partition_level"] = config.partition_level;
  report["subtrees"] = subtree_count;
  report["pairs_considered"] = considered;
  report["pairs_emitted"] = rows.size();
  report["pairs_filtered"] = considered - rows.size();
  report["filtered_fraction"] =
      static_cast<double>(considered - rows.size()) /
      static_cast<double>(considered);
  report["max_len"] = config.max_len;
  report["overflow_count"] = overflow;

  const auto out = OutputDir(config);
  WriteFileAtomic(out / kTaggedSamplesFile, JsonLines(rows));
  WriteFileAtomic(out / kBuildReportFile, report.dump(2) + "\n");
  return report;
}

Json CmdSample(const RunConfig &config) {
  RequirePath(config.corpus_path, "--corpus");
  const std::vector<DocumentRecord> records = LoadCorpus(config.corpus_path);
  if (records.empty()) throw Error(ErrorCode::kEmptyCorpus, "no records");

  SamplePlan plan = PlanSample(static_cast<std::int64_t>(records.size()),
                               config.confidence, config.margin);
  if (config.sample_size) {
    if (*config.sample_size < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative sample size");
    }
    plan.size = *config.sample_size;
  }
  const auto drawn = DrawSample(records, static_cast<std::size_t>(plan.size),
                                config.seed);

  Json j = plan.ToJson();
  j["seed"] = config.seed;
  const auto out = OutputDir(config);
  WriteFileAtomic(out / kSampledCorpusFile, SerializeCorpus(drawn));
  WriteFileAtomic(out / kSamplePlanFile, j.dump(2) + "\n");
  return j;
}

std::vector<TaggedSample> LoadTaggedSamples(const std::filesystem::path &path) {
  std::vector<TaggedSample> samples;
  const std::string source = path.string();
  for (const JsonLine &line : ReadJsonLines(path)) {
    samples.push_back(TaggedSampleFromJson(
        line.value, source + ":" + std::to_string(line.line_number)));
  }
  return samples;
}

Json CmdReorder(const RunConfig &config) {
  RequirePath(config.samples_path, "--samples");
  ValidateDelimiter(config.delimiter);
  const std::vector<TaggedSample> samples =
      LoadTaggedSamples(config.samples_path);
  std::vector<Json> rows;
  rows.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const BuiltSample &s = samples[i].sample;
    const CategoriesList list =
        SplitCategories(s.subtree_id, s.sentence2, config.delimiter);
    auto [reordered, unused] =
        ReorderCategories(s, list, SplitMix64(config.seed ^ i),
                          config.delimiter);
    rows.push_back(TaggedSampleToJson(MakeTaggedSample(std::move(reordered))));
  }
  WriteFileAtomic(OutputDir(config) / kReorderedSamplesFile, JsonLines(rows));
  Json j;
  j["samples"] = rows.size();
  j["seed"] = config.seed;
  return j;
}

std::map<std::string, std::vector<int>> LoadPredictions(
    const std::filesystem::path &path) {
  std::map<std::string, std::vector<int>> preds;
  const std::string source = path.string();
  for (const JsonLine &line : ReadJsonLines(path)) {
    std::string id = RequireString(line, source, "sample_id");
    const Json &tags = RequireField(line, source, "pred_tags");
    std::vector<int> values;
    if (!tags.is_array()) {
      throw Error(ErrorCode::kParse, source + ":" +
                                         std::to_string(line.line_number) +
                                         ": pred_tags must be a list");
    }
    for (const Json &t : tags) {
      if (!t.is_number_integer()) {
        throw Error(ErrorCode::kParse,
                    source + ":" + std::to_string(line.line_number) +
                        ": pred_tags must hold integers");
      }
      values.push_back(t.get<int>());
    }
    if (!preds.emplace(id, std::move(values)).second) {
      throw Error(ErrorCode::kDuplicateId,
                  source + ":" + std::to_string(line.line_number) +
                      ": repeated prediction for " + id);
    }
  }
  return preds;
}

SampleScore ScoreSample(const TaggedSample &tagged,
                        const std::vector<int> &pred_tags,
                        std::string_view delimiter) {
  const std::vector<int> &gold = tagged.sequence.tags;
  if (pred_tags.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                tagged.sample.sample_id + ": " +
                    std::to_string(pred_tags.size()) + " predicted vs " +
                    std::to_string(gold.size()) + " gold tags");
  }
  const CategoriesList list = SplitCategories(
      tagged.sample.subtree_id, tagged.sample.sentence2, delimiter);
  const auto segments = SegmentTokenRanges(tagged.sequence, list);
  return {CountStrict(pred_tags, gold),
          CountClassification(pred_tags, gold, segments)};
}

CorpusScore ScoreCorpus(const std::vector<TaggedSample> &samples,
                        const std::map<std::string, std::vector<int>> &preds,
                        std::string_view delimiter) {
  std::map<std::string_view, const TaggedSample *> by_id;
  for (const TaggedSample &t : samples) by_id[t.sample.sample_id] = &t;
  for (const auto &[id, unused] : preds) {
    if (!by_id.count(id)) throw Error(ErrorCode::kUnknownSampleId, id);
  }

  CorpusScore score;
  for (const TaggedSample &t : samples) {
    auto it = preds.find(t.sample.sample_id);
    if (it == preds.end()) {
      ++score.missing_predictions;
      continue;
    }
    const SampleScore s = ScoreSample(t, it->second, delimiter);
    score.strict += s.strict;
    score.classification += s.classification;
    ++score.scored_samples;
  }
  return score;
}

Json CmdEval(const RunConfig &config, EvalSelection selection) {
  RequirePath(config.samples_path, "--samples");
  if (config.predictions_paths.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--predictions is required");
  }
  for (const auto &p : config.predictions_paths) {
    RequirePath(p, "--predictions");
  }
  const std::vector<TaggedSample> samples =
      LoadTaggedSamples(config.samples_path);

  Json report;
  report["samples"] = samples.size();
  Json epochs = Json::array();
  Json last;
  for (std::size_t e = 0; e < config.predictions_paths.size(); ++e) {
    const auto preds = LoadPredictions(config.predictions_paths[e]);
    last = ScoreJson(ScoreCorpus(samples, preds, config.delimiter), selection);
    Json epoch;
    epoch["epoch"] = e + 1;
    epoch["predictions"] = config.predictions_paths[e].string();
    epoch.update(last);
    epochs.push_back(std::move(epoch));
  }
  report.update(last);
  if (config.predictions_paths.size() > 1) report["epochs"] = std::move(epochs);

  WriteFileAtomic(OutputDir(config) / kEvalReportFile, report.dump(2) + "\n");
  return report;
}

}  // namespace labelqa
