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

#include "labelqa/dataset_builder.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "labelqa/error.h"
#include "labelqa/random.h"
#include "labelqa/text.h"

namespace labelqa {
namespace {

std::string DelimiterPunct(std::string_view delimiter) {
  std::string punct;
  for (char c : delimiter) {
    if (IsAsciiPunct(c) && punct.find(c) == std::string::npos) punct += c;
  }
  return punct;
}

bool Collides(std::string_view name, std::string_view punct) {
  return name.find_first_of(punct) != std::string_view::npos;
}

const std::string &Expect(const Json &json, const char *key,
                          std::string_view where) {
  auto it = json.find(key);
  if (it == json.end() || !it->is_string()) {
    throw Error(ErrorCode::kParse, std::string(where) + ": missing string key '" +
                                       key + "'");
  }
  return it->get_ref<const std::string &>();
}

}  // namespace

std::vector<std::string> ResolveConcepts(const DocumentRecord &record,
                                         const ConceptCatalog &catalog) {
  std::vector<std::string> names;
  names.reserve(record.concept_ids.size());
  for (const std::string &id : record.concept_ids) {
    if (!catalog.contains(id)) {
      throw Error(ErrorCode::kUnknownConceptId,
                  id + " (record " + record.record_id + ")");
    }
    names.push_back(AsciiLower(catalog.name(id)));
  }
  return names;
}

void ValidateDelimiter(std::string_view delimiter) {
  const bool only_space_or_punct =
      std::all_of(delimiter.begin(), delimiter.end(),
                  [](char c) { return IsAsciiSpace(c) || IsAsciiPunct(c); });
  if (!only_space_or_punct || DelimiterPunct(delimiter).empty()) {
    throw Error(ErrorCode::kInvalidDelimiter,
                "delimiter '" + std::string(delimiter) +
                    "' must be punctuation and whitespace with at least one "
                    "punctuation character");
  }
}

std::string SanitizeName(std::string_view name, std::string_view delimiter) {
  const std::string punct = DelimiterPunct(delimiter);
  const char replacement = punct.find(';') == std::string::npos ? ';' : '/';
  std::string out(name);
  for (char &c : out) {
    if (punct.find(c) != std::string::npos) c = replacement;
  }
  return out;
}

CategoriesList RenderNames(std::string subtree_id,
                           const std::vector<std::string> &names,
                           std::string_view delimiter) {
  CategoriesList list;
  list.subtree_id = std::move(subtree_id);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) list.rendered += delimiter;
    const std::size_t start = list.rendered.size();
    list.rendered += names[i];
    list.segments.push_back({names[i], start, list.rendered.size()});
  }
  return list;
}

CategoriesList RenderCategories(const Subtree &subtree,
                                const TaxonomyTree &tree,
                                const RenderOptions &options) {
  ValidateDelimiter(options.delimiter);
  const std::string punct = DelimiterPunct(options.delimiter);
  std::vector<std::string> names;
  names.reserve(subtree.member_ids.size());
  for (const std::string &id : subtree.member_ids) {
    const std::string &name = tree.node(id).name;
    if (!Collides(name, punct)) {
      names.push_back(name);
    } else if (options.sanitize) {
      names.push_back(SanitizeName(name, options.delimiter));
    } else {
      throw Error(ErrorCode::kDelimiterCollision, name);
    }
  }
  return RenderNames(subtree.parent_id, names, options.delimiter);
}

CategoriesList SplitCategories(std::string subtree_id,
                               std::string_view rendered,
                               std::string_view delimiter) {
  ValidateDelimiter(delimiter);
  CategoriesList list;
  list.subtree_id = std::move(subtree_id);
  list.rendered = std::string(rendered);
  std::size_t start = 0;
  while (true) {
    std::size_t end = rendered.find(delimiter, start);
    if (end == std::string_view::npos) end = rendered.size();
    list.segments.push_back(
        {std::string(rendered.substr(start, end - start)), start, end});
    if (end == rendered.size()) break;
    start = end + delimiter.size();
  }
  return list;
}

std::string MakeSampleId(std::string_view record_id,
                         std::string_view subtree_id) {
  std::string id(record_id);
  id += ':';
  id += subtree_id;
  return id;
}

std::vector<BuiltSample> BuildSamples(const std::vector<DocumentRecord> &records,
                                      const ConceptCatalog &catalog,
                                      const TaxonomyTree &tree, int level,
                                      const RenderOptions &options) {
  if (records.empty()) throw Error(ErrorCode::kEmptyCorpus, "no records");
  const std::vector<Subtree> subtrees = SubtreesAtLevel(tree, level);

  // Matching uses the taxonomy names; rendering may have sanitized them.
  struct Hit {
    std::size_t subtree;
    std::size_t segment;
  };
  std::vector<CategoriesList> lists;
  std::unordered_map<std::string, std::vector<Hit>> by_name;
  lists.reserve(subtrees.size());
  for (std::size_t s = 0; s < subtrees.size(); ++s) {
    lists.push_back(RenderCategories(subtrees[s], tree, options));
    const auto &members = subtrees[s].member_ids;
    for (std::size_t k = 0; k < members.size(); ++k) {
      by_name[tree.node(members[k]).name].push_back({s, k});
    }
  }

  std::vector<BuiltSample> samples;
  for (const DocumentRecord &record : records) {
    std::vector<std::string> names = ResolveConcepts(record, catalog);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::map<std::size_t, std::vector<std::size_t>> gold_by_subtree;
    for (const std::string &name : names) {
      auto it = by_name.find(name);
      if (it == by_name.end()) continue;
      for (const Hit &h : it->second) {
        gold_by_subtree[h.subtree].push_back(h.segment);
      }
    }

    for (auto &[s, segs] : gold_by_subtree) {
      std::sort(segs.begin(), segs.end());
      segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
      const CategoriesList &list = lists[s];
      BuiltSample sample;
      sample.sample_id = MakeSampleId(record.record_id, list.subtree_id);
      sample.record_id = record.record_id;
      sample.subtree_id = list.subtree_id;
      sample.sentence1 = record.title;
      sample.sentence2 = list.rendered;
      for (std::size_t k : segs) sample.gold.push_back(list.segments[k]);
      samples.push_back(std::move(sample));
    }
  }
  return samples;
}

std::pair<BuiltSample, CategoriesList> ReorderCategories(
    const BuiltSample &sample, const CategoriesList &list, std::uint64_t seed,
    std::string_view delimiter) {
  if (sample.sentence2 != list.rendered) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample " + sample.sample_id + " was not built from this list");
  }
  std::vector<std::size_t> order(list.segments.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Engine engine(seed);
  SeededShuffle(std::span<std::size_t>(order), engine);

  std::vector<std::string> names;
  names.reserve(order.size());
  for (std::size_t i : order) names.push_back(list.segments[i].name);
  CategoriesList reordered = RenderNames(list.subtree_id, names, delimiter);

  // old segment index -> new position
  std::vector<std::size_t> new_pos(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) new_pos[order[p]] = p;

  std::vector<std::size_t> gold_pos;
  for (const Segment &g : sample.gold) {
    auto it = std::find(list.segments.begin(), list.segments.end(), g);
    if (it == list.segments.end()) {
      throw Error(ErrorCode::kSegmentMismatch,
                  "gold span '" + g.name + "' of " + sample.sample_id +
                      " is not a segment");
    }
    gold_pos.push_back(new_pos[static_cast<std::size_t>(
        it - list.segments.begin())]);
  }
  std::sort(gold_pos.begin(), gold_pos.end());

  BuiltSample out = sample;
  out.sentence2 = reordered.rendered;
  out.gold.clear();
  for (std::size_t p : gold_pos) out.gold.push_back(reordered.segments[p]);
  return {std::move(out), std::move(reordered)};
}

Json BuiltSampleToJson(const BuiltSample &sample) {
  Json j;
  j["sample_id"] = sample.sample_id;
  j["record_id"] = sample.record_id;
  j["subtree_id"] = sample.subtree_id;
  j["sentence1"] = sample.sentence1;
  j["sentence2"] = sample.sentence2;
  Json gold = Json::array();
  for (const Segment &g : sample.gold) {
    Json span;
    span["name"] = g.name;
    span["start"] = g.start;
    span["end"] = g.end;
    gold.push_back(std::move(span));
  }
  j["gold"] = std::move(gold);
  return j;
}

namespace {

bool IsOffset(const Json &span, const char *key) {
  auto it = span.find(key);
  return it != span.end() && it->is_number_integer() &&
         it->get<std::int64_t>() >= 0;
}

}  // namespace

BuiltSample BuiltSampleFromJson(const Json &json, std::string_view where) {
  BuiltSample s;
  s.sample_id = Expect(json, "sample_id", where);
  s.record_id = Expect(json, "record_id", where);
  s.subtree_id = Expect(json, "subtree_id", where);
  s.sentence1 = Expect(json, "sentence1", where);
  s.sentence2 = Expect(json, "sentence2", where);
  auto it = json.find("gold");
  if (it == json.end() || !it->is_array()) {
    throw Error(ErrorCode::kParse, std::string(where) + ": missing gold list");
  }
  for (const Json &span : *it) {
    if (!span.is_object() || !span.contains("name") ||
        !span["name"].is_string() || !IsOffset(span, "start") ||
        !IsOffset(span, "end")) {
      throw Error(ErrorCode::kParse,
                  std::string(where) + ": malformed gold span");
    }
    Segment g{span["name"].get<std::string>(),
              span["start"].get<std::size_t>(), span["end"].get<std::size_t>()};
    if (g.start > g.end || g.end > s.sentence2.size() ||
        s.sentence2.compare(g.start, g.end - g.start, g.name) != 0) {
      throw Error(ErrorCode::kSegmentMismatch,
                  std::string(where) + ": gold span '" + g.name +
                      "' does not match sentence2");
    }
    s.gold.push_back(std::move(g));
  }
  return s;
}

}  // namespace labelqa
