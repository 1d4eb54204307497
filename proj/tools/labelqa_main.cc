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

// Command-line front end: tree-stats, sample, build, reorder, eval.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "labelqa/commands.h"
#include "labelqa/error.h"

namespace {

using labelqa::Json;

void Print(const Json &j, const std::string &format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto &[key, value] : j.items()) {
    std::cout << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Turn multi-label classification data into multi-answer QA "
               "tagging samples and score predicted tags."};
  app.require_subcommand(1);

  labelqa::RunConfig config;
  std::string format = "json";
  std::string mode = "both";
  std::int64_t sample_size = -1;

  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_out = [&](CLI::App *cmd) {
    cmd->add_option("--out", config.output_dir,
                    std::string("Output directory (default $") +
                        labelqa::kOutputDirEnv + " or ./labelqa_out)");
  };

  auto *tree_stats = app.add_subcommand(
      "tree-stats", "Subtree partition statistics for every parent level");
  tree_stats->add_option("--taxonomy", config.taxonomy_path,
                         "Taxonomy node list (JSONL)")->required();
  tree_stats->add_option("--root-name", config.root_name);
  add_format(tree_stats);

  auto *sample = app.add_subcommand(
      "sample", "Z-score sample size and seeded uniform record sample");
  sample->add_option("--corpus", config.corpus_path, "Corpus (JSONL)")
      ->required();
  sample->add_option("--confidence", config.confidence)
      ->check(CLI::IsMember({0.90, 0.95, 0.99}));
  sample->add_option("--margin", config.margin);
  sample->add_option("--size", sample_size, "Override the computed size");
  sample->add_option("--seed", config.seed)->required();
  add_out(sample);
  add_format(sample);

  auto *build = app.add_subcommand(
      "build", "Build tagged (title, categories list) samples");
  build->add_option("--taxonomy", config.taxonomy_path)->required();
  build->add_option("--catalog", config.catalog_path)->required();
  build->add_option("--corpus", config.corpus_path)->required();
  build->add_option("--level", config.partition_level,
                    "Parent level of the subtrees");
  build->add_flag("--allow-level-one", config.allow_level_one);
  build->add_option("--delimiter", config.delimiter);
  build->add_flag("--sanitize", config.sanitize,
                  "Replace delimiter punctuation inside names");
  build->add_option("--max-len", config.max_len)
      ->check(CLI::PositiveNumber);
  build->add_option("--root-name", config.root_name);
  add_out(build);
  add_format(build);

  auto *reorder = app.add_subcommand(
      "reorder", "Shuffle categories inside every tagged sample");
  reorder->add_option("--samples", config.samples_path)->required();
  reorder->add_option("--seed", config.seed)->required();
  reorder->add_option("--delimiter", config.delimiter);
  add_out(reorder);
  add_format(reorder);

  auto *eval = app.add_subcommand(
      "eval", "Score predictions with strict and classification metrics");
  eval->add_option("--samples", config.samples_path)->required();
  eval->add_option("--predictions", config.predictions_paths,
                   "One file per checkpoint, in epoch order")
      ->required();
  eval->add_option("--mode", mode)
      ->check(CLI::IsMember({"strict", "classification", "both"}));
  eval->add_option("--delimiter", config.delimiter);
  add_out(eval);
  add_format(eval);

  CLI11_PARSE(app, argc, argv);
  if (sample_size >= 0) config.sample_size = sample_size;

  try {
    if (*tree_stats) {
      const auto result = labelqa::CmdTreeStats(config);
      if (format == "text") {
        std::cout << result.ToText();
      } else {
        std::cout << result.ToJson().dump(2) << "\n";
      }
    } else if (*sample) {
      Print(labelqa::CmdSample(config), format);
    } else if (*build) {
      Print(labelqa::CmdBuild(config), format);
    } else if (*reorder) {
      Print(labelqa::CmdReorder(config), format);
    } else if (*eval) {
      const auto selection =
          mode == "strict" ? labelqa::EvalSelection::kStrict
          : mode == "classification" ? labelqa::EvalSelection::kClassification
                                     : labelqa::EvalSelection::kBoth;
      Print(labelqa::CmdEval(config, selection), format);
    }
  } catch (const labelqa::Error &e) {
    std::cerr << "labelqa: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "labelqa: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
