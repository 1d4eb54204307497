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

#ifndef LABELQA_DATASET_BUILDER_H_
#define LABELQA_DATASET_BUILDER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "labelqa/corpus.h"
#include "labelqa/io.h"
#include "labelqa/taxonomy.h"

namespace labelqa {

inline constexpr std::string_view kDefaultDelimiter = ", ";

// A category name and its byte range [start, end) inside a rendered
// categories list.
struct Segment {
  std::string name;
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Segment &, const Segment &) = default;
};

struct CategoriesList {
  std::string subtree_id;
  std::string rendered;
  std::vector<Segment> segments;  // ordered, tiling rendered minus delimiters

  friend bool operator==(const CategoriesList &,
                         const CategoriesList &) = default;
};

struct RenderOptions {
  std::string delimiter = std::string(kDefaultDelimiter);
  // Replace the delimiter's punctuation inside names instead of failing.
  bool sanitize = false;
};

struct BuiltSample {
  std::string sample_id;
  std::string record_id;
  std::string subtree_id;
  std::string sentence1;  // title
  std::string sentence2;  // rendered categories list
  std::vector<Segment> gold;  // whole segments of sentence2, in list order

  friend bool operator==(const BuiltSample &, const BuiltSample &) = default;
};

// Concept names in record order, lowercased. Throws kUnknownConceptId.
std::vector<std::string> ResolveConcepts(const DocumentRecord &record,
                                         const ConceptCatalog &catalog);

// The delimiter may hold only punctuation and whitespace, with at least one
// punctuation character so segments are always separated by a token
// (kInvalidDelimiter). Names containing
// any of the delimiter's punctuation raise kDelimiterCollision unless
// sanitize is set.
void ValidateDelimiter(std::string_view delimiter);
std::string SanitizeName(std::string_view name, std::string_view delimiter);
CategoriesList RenderCategories(const Subtree &subtree,
                                const TaxonomyTree &tree,
                                const RenderOptions &options = {});
CategoriesList RenderNames(std::string subtree_id,
                           const std::vector<std::string> &names,
                           std::string_view delimiter);
// Inverse of rendering: recovers segments by splitting on the delimiter.
CategoriesList SplitCategories(std::string subtree_id,
                               std::string_view rendered,
                               std::string_view delimiter);

std::string MakeSampleId(std::string_view record_id,
                         std::string_view subtree_id);

// Emits one sample per (record, subtree at `level`) pair whose categories
// list contains at least one of the record's concepts; empty-answer pairs
// are dropped. Order: record order, then subtree pre-order.
// Throws kEmptyCorpus, kUnknownConceptId, kLevelOutOfRange.
std::vector<BuiltSample> BuildSamples(const std::vector<DocumentRecord> &records,
                                      const ConceptCatalog &catalog,
                                      const TaxonomyTree &tree, int level,
                                      const RenderOptions &options = {});

// Seeded uniform permutation of the list's segments with gold offsets
// recomputed. `sample` must have been built from `list`.
std::pair<BuiltSample, CategoriesList> ReorderCategories(
    const BuiltSample &sample, const CategoriesList &list, std::uint64_t seed,
    std::string_view delimiter = kDefaultDelimiter);

Json BuiltSampleToJson(const BuiltSample &sample);
// `where` prefixes error messages (typically "file:line").
BuiltSample BuiltSampleFromJson(const Json &json, std::string_view where);

}  // namespace labelqa

#endif  // LABELQA_DATASET_BUILDER_H_
