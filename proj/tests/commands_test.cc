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

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "labelqa/commands.h"
#include "labelqa/error.h"
#include "labelqa/io.h"
#include "support/metric_oracle.h"
#include "support/tree_oracle.h"

namespace labelqa {
namespace {

namespace fs = std::filesystem;

const fs::path kData = LABELQA_TEST_DATA;

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("labelqa_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

RunConfig MiniConfig(const fs::path &out) {
  RunConfig c;
  c.taxonomy_path = kData / "mini_taxonomy.jsonl";
  c.catalog_path = kData / "mini_catalog.jsonl";
  c.corpus_path = kData / "mini_corpus.jsonl";
  c.output_dir = out;
  return c;
}

TEST_CASE("tree-stats on the mini taxonomy") {
  RunConfig c;
  c.taxonomy_path = kData / "mini_taxonomy.jsonl";
  const auto result = CmdTreeStats(c);
  CHECK(result.height == 5);
  CHECK(result.node_count == 27);
  REQUIRE(result.rows.size() == 4);
  const std::string text = result.ToText();
  CHECK(text.find("\n3, 5, 5, 13, 1\n") != std::string::npos);
  CHECK(text.find("\n1, 1, 27, 27, 27\n") != std::string::npos);

  const Json j = result.ToJson();
  CHECK(j["levels"][2]["subtree_count"] == 5);
  CHECK(j["levels"][2]["mean_nodes"].get<double>() == doctest::Approx(4.6));
}

TEST_CASE("tree-stats on the two-node taxonomy") {
  RunConfig c;
  c.taxonomy_path = kData / "two_node_taxonomy.jsonl";
  const auto result = CmdTreeStats(c);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].subtree_count == 1);
  CHECK(result.ToText() ==
        "level, subtrees, mean_nodes, max_nodes, min_nodes\n1, 1, 2, 2, 2\n");
}

TEST_CASE("tree-stats on a synthetic 7-node taxonomy matches brute force") {
  TempDir dir;
  const std::vector<TaxonomyEntry> entries{
      {"A", "a", std::nullopt}, {"a1", "a1", "A"}, {"a2", "a2", "A"},
      {"x", "x", "a1"},         {"B", "b", std::nullopt},
      {"b1", "b1", "B"}};
  std::string text;
  for (const auto &e : entries) {
    Json j;
    j["id"] = e.id;
    j["name"] = e.name;
    j["parent_id"] = e.parent_id ? Json(*e.parent_id) : Json(nullptr);
    text += j.dump() + "\n";
  }
  WriteFileAtomic(dir.path / "t.jsonl", text);
  RunConfig c;
  c.taxonomy_path = dir.path / "t.jsonl";
  const auto result = CmdTreeStats(c);
  CHECK(result.node_count == 7);
  const auto brute = oracle::MakeBruteTree(entries);
  REQUIRE(static_cast<int>(result.rows.size()) == brute.height - 1);
  for (const auto &row : result.rows) {
    const auto want = oracle::BruteStatsAt(brute, row.parent_level);
    CHECK(row.subtree_count == want.count);
    CHECK(row.total_nodes == want.total);
    CHECK(row.max_nodes == want.max);
    CHECK(row.min_nodes == want.min);
  }
}

TEST_CASE("build on the worked example") {
  TempDir dir;
  const Json report = CmdBuild(MiniConfig(dir.path));
  CHECK(report["records"] == 1);
  CHECK(report["subtrees"] == 5);
  CHECK(report["pairs_considered"] == 5);
  CHECK(report["pairs_emitted"] == 2);
  CHECK(report["pairs_filtered"] == 3);
  CHECK(report["overflow_count"] == 0);

  const auto samples = LoadTaggedSamples(dir.path / kTaggedSamplesFile);
  REQUIRE(samples.size() == 2);
  const auto &seq = samples[0].sequence;
  CHECK(samples[0].sample.sample_id == "32007R0464:6021");
  CHECK(seq.sentence1_len == 41);
  REQUIRE(seq.size() == 41 + 38);
  std::vector<int> want(41, kIgnore);
  want.resize(41 + 38, kOutside);
  for (std::size_t k : {31u, 32u, 34u, 35u}) want[41 + k] = kConcept;
  CHECK(seq.tags == want);
  CHECK(fs::exists(dir.path / kBuildReportFile));
}

TEST_CASE("build with no matching concepts writes an empty file") {
  TempDir dir;
  RunConfig c = MiniConfig(dir.path);
  c.corpus_path = kData / "nomatch_corpus.jsonl";
  const Json report = CmdBuild(c);
  CHECK(report["pairs_emitted"] == 0);
  CHECK(report["filtered_fraction"].get<double>() == 1.0);
  CHECK(ReadFile(dir.path / kTaggedSamplesFile).empty());
}

TEST_CASE("build level checks and failure leaves no output") {
  TempDir dir;
  RunConfig c = MiniConfig(dir.path);
  c.partition_level = 1;
  CHECK_THROWS_AS(CmdBuild(c), Error);
  c.allow_level_one = true;
  CHECK_NOTHROW(CmdBuild(c));
  fs::remove_all(dir.path);

  c.allow_level_one = false;
  c.partition_level = 9;
  CHECK_THROWS_AS(CmdBuild(c), Error);
  c.partition_level = 3;
  c.catalog_path = kData / "missing.jsonl";
  CHECK_THROWS_AS(CmdBuild(c), Error);
  CHECK_FALSE(fs::exists(dir.path / kTaggedSamplesFile));
}

TEST_CASE("build on a 20-record synthetic corpus matches brute pairing") {
  TempDir dir;
  std::mt19937_64 rng(17);
  const std::vector<std::string> catalog_ids{"4620", "4621", "2635", "1235",
                                             "1236", "5001", "5002"};
  std::string corpus;
  for (int r = 0; r < 20; ++r) {
    Json j;
    j["celex_id"] = "R" + std::to_string(r);
    j["title"] = "Title number " + std::to_string(r);
    j["text"] = "";
    Json ids = Json::array();
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < k; ++i) {
      ids.push_back(catalog_ids[std::uniform_int_distribution<std::size_t>(
          0, catalog_ids.size() - 1)(rng)]);
    }
    j["eurovoc_concepts"] = ids;
    corpus += j.dump() + "\n";
  }
  WriteFileAtomic(dir.path / "corpus.jsonl", corpus);
  RunConfig c = MiniConfig(dir.path / "out");
  c.corpus_path = dir.path / "corpus.jsonl";
  const Json report = CmdBuild(c);

  // Brute force: concept id -> set of level-3 subtree ids containing it.
  const std::map<std::string, std::set<std::string>> hits{
      {"4620", {"6021"}}, {"4621", {"6021"}}, {"2635", {"2006"}},
      {"1235", {"6026"}}, {"1236", {"6026"}}, {"5001", {"2011"}},
      {"5002", {}}};
  std::size_t expected = 0;
  for (const auto &line : ParseJsonLines(corpus, "c")) {
    std::set<std::string> subtrees;
    for (const auto &id : line.value["eurovoc_concepts"]) {
      const auto &h = hits.at(id.get<std::string>());
      subtrees.insert(h.begin(), h.end());
    }
    expected += subtrees.size();
  }
  CHECK(report["pairs_emitted"].get<std::size_t>() == expected);
}

TEST_CASE("sample writes plan and corpus") {
  TempDir dir;
  std::string corpus;
  for (int r = 0; r < 1000; ++r) {
    corpus += "{\"celex_id\":\"R" + std::to_string(r) +
              "\",\"title\":\"t\",\"text\":\"x\",\"eurovoc_concepts\":[\"1\"]}\n";
  }
  WriteFileAtomic(dir.path / "corpus.jsonl", corpus);
  RunConfig c;
  c.corpus_path = dir.path / "corpus.jsonl";
  c.output_dir = dir.path / "out";
  c.seed = 3;
  const Json plan = CmdSample(c);
  CHECK(plan["population"] == 1000);
  CHECK(plan["size"] == 278);
  const auto drawn = LoadCorpus(dir.path / "out" / kSampledCorpusFile);
  CHECK(drawn.size() == 278);

  c.sample_size = 5;
  CHECK(CmdSample(c)["size"] == 5);
  c.sample_size = 5000;
  CHECK_THROWS_AS(CmdSample(c), Error);
}

std::string WritePredictions(const fs::path &path,
                             const std::vector<TaggedSample> &samples,
                             const std::function<std::vector<int>(
                                 const TaggedSample &)> &make) {
  std::string text;
  for (const auto &s : samples) {
    Json j;
    j["sample_id"] = s.sample.sample_id;
    j["pred_tags"] = make(s);
    text += j.dump() + "\n";
  }
  WriteFileAtomic(path, text);
  return text;
}

TEST_CASE("eval: gold predictions score one, all-O scores zero") {
  TempDir dir;
  CmdBuild(MiniConfig(dir.path));
  const auto samples = LoadTaggedSamples(dir.path / kTaggedSamplesFile);
  WritePredictions(dir.path / "gold.jsonl", samples,
                   [](const TaggedSample &s) { return s.sequence.tags; });
  WritePredictions(dir.path / "zero.jsonl", samples, [](const TaggedSample &s) {
    std::vector<int> t = s.sequence.tags;
    for (int &v : t) v = v == kIgnore ? kIgnore : kOutside;
    return t;
  });

  RunConfig c;
  c.samples_path = dir.path / kTaggedSamplesFile;
  c.output_dir = dir.path / "eval";
  c.predictions_paths = {dir.path / "gold.jsonl"};
  Json r = CmdEval(c, EvalSelection::kBoth);
  for (const char *mode : {"strict", "classification"}) {
    CHECK(r[mode]["precision"].get<double>() == 1.0);
    CHECK(r[mode]["recall"].get<double>() == 1.0);
    CHECK(r[mode]["f1"].get<double>() == 1.0);
  }

  c.predictions_paths = {dir.path / "zero.jsonl"};
  r = CmdEval(c, EvalSelection::kStrict);
  CHECK(r["strict"]["f1"].get<double>() == 0.0);
  std::int64_t ones = 0, scored = 0;
  for (const auto &s : samples) {
    for (int t : s.sequence.tags) {
      ones += t == kConcept;
      scored += t != kIgnore;
    }
  }
  CHECK(r["strict"]["correct"].get<std::int64_t>() == scored - ones);
  CHECK(r["strict"]["scored"].get<std::int64_t>() == scored);
  CHECK_FALSE(r.contains("classification"));

  c.predictions_paths = {dir.path / "zero.jsonl", dir.path / "gold.jsonl"};
  r = CmdEval(c, EvalSelection::kBoth);
  REQUIRE(r["epochs"].size() == 2);
  CHECK(r["epochs"][0]["strict"]["f1"].get<double>() == 0.0);
  CHECK(r["epochs"][1]["strict"]["f1"].get<double>() == 1.0);
  CHECK(r["strict"]["f1"].get<double>() == 1.0);
  CHECK(fs::exists(dir.path / "eval" / kEvalReportFile));
}

TEST_CASE("eval: hand-built samples agree with the oracle") {
  // Three samples over the same list with gold {b}, {a, c}, {c}.
  std::vector<TaggedSample> samples;
  const auto list = RenderNames("s", {"a", "b b", "c"}, ", ");
  const std::vector<std::vector<std::size_t>> golds{{1}, {0, 2}, {2}};
  for (std::size_t i = 0; i < golds.size(); ++i) {
    BuiltSample b{"r" + std::to_string(i) + ":s", "r" + std::to_string(i), "s",
                  "title", list.rendered, {}};
    for (std::size_t g : golds[i]) b.gold.push_back(list.segments[g]);
    samples.push_back(MakeTaggedSample(b));
  }
  // tokens: title | a , b b , c
  const std::map<std::string, std::vector<int>> preds{
      {"r0:s", {-100, 0, 0, 1, 0, 0, 0}},   // half of b
      {"r1:s", {-100, 1, 1, 0, 0, 0, 1}},   // a plus comma, c
      {"r2:s", {-100, 0, 0, 1, 1, 0, 0}}};  // b instead of c
  const CorpusScore score = ScoreCorpus(samples, preds, ", ");
  CHECK(score.scored_samples == 3);

  EvalCounts strict, cls;
  for (const auto &t : samples) {
    const auto &pred = preds.at(t.sample.sample_id);
    const auto s = oracle::Strict(pred, t.sequence.tags);
    const auto k = oracle::Classification(pred, t.sequence.tags,
                                          {{1, 2}, {3, 5}, {6, 7}});
    strict += {s.tp, s.pred_count, s.gold_count, 0, 0};
    cls += {k.tp, k.pred_count, k.gold_count, 0, 0};
  }
  CHECK(score.strict.tp == strict.tp);
  CHECK(score.strict.pred_count == strict.pred_count);
  CHECK(score.strict.gold_count == strict.gold_count);
  CHECK(score.classification.tp == cls.tp);
  CHECK(score.classification.pred_count == cls.pred_count);
  CHECK(score.classification.gold_count == cls.gold_count);
  // Frozen: strict 1 tp (c in r1) of 4 predicted chunks; classification
  // picks b, a, c, b -> 3 hits.
  CHECK(score.strict.tp == 1);
  CHECK(score.strict.pred_count == 4);
  CHECK(score.classification.tp == 3);
  CHECK(score.classification.pred_count == 4);
  CHECK(score.classification.gold_count == 4);
}

TEST_CASE("eval: unknown ids, length mismatches and missing predictions") {
  TempDir dir;
  CmdBuild(MiniConfig(dir.path));
  const auto samples = LoadTaggedSamples(dir.path / kTaggedSamplesFile);

  std::map<std::string, std::vector<int>> preds;
  preds["32007R0464:6021"] = samples[0].sequence.tags;
  const auto partial = ScoreCorpus(samples, preds, ", ");
  CHECK(partial.scored_samples == 1);
  CHECK(partial.missing_predictions == 1);

  preds["nope"] = {};
  try {
    ScoreCorpus(samples, preds, ", ");
    FAIL("no throw");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnknownSampleId);
  }
  preds.erase("nope");
  preds["32007R0464:6021"].pop_back();
  try {
    ScoreCorpus(samples, preds, ", ");
    FAIL("no throw");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kLengthMismatch);
  }
}

TEST_CASE("reorder keeps gold names and is deterministic") {
  TempDir dir;
  CmdBuild(MiniConfig(dir.path));
  RunConfig c;
  c.samples_path = dir.path / kTaggedSamplesFile;
  c.output_dir = dir.path / "r1";
  c.seed = 5;
  CmdReorder(c);
  c.output_dir = dir.path / "r2";
  CmdReorder(c);
  const std::string a = ReadFile(dir.path / "r1" / kReorderedSamplesFile);
  CHECK(a == ReadFile(dir.path / "r2" / kReorderedSamplesFile));

  const auto before = LoadTaggedSamples(dir.path / kTaggedSamplesFile);
  const auto after = LoadTaggedSamples(dir.path / "r1" / kReorderedSamplesFile);
  REQUIRE(before.size() == after.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    std::multiset<std::string> g1, g2;
    for (const auto &g : before[i].sample.gold) g1.insert(g.name);
    for (const auto &g : after[i].sample.gold) g2.insert(g.name);
    CHECK(g1 == g2);
  }
}

TEST_CASE("outputs are byte-identical across runs") {
  TempDir dir;
  CmdBuild(MiniConfig(dir.path / "a"));
  CmdBuild(MiniConfig(dir.path / "b"));
  CHECK(ReadFile(dir.path / "a" / kTaggedSamplesFile) ==
        ReadFile(dir.path / "b" / kTaggedSamplesFile));
  CHECK(ReadFile(dir.path / "a" / kBuildReportFile) ==
        ReadFile(dir.path / "b" / kBuildReportFile));
}

}  // namespace
}  // namespace labelqa
