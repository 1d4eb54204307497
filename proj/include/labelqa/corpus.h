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

#ifndef LABELQA_CORPUS_H_
#define LABELQA_CORPUS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace labelqa {

// One corpus entry. On disk: {"celex_id", "title", "text",
// "eurovoc_concepts"}.
struct DocumentRecord {
  std::string record_id;
  std::string title;
  std::string text;
  std::vector<std::string> concept_ids;

  friend bool operator==(const DocumentRecord &,
                         const DocumentRecord &) = default;
};

// Concept id -> concept name. On disk: {"id", "title"} per line.
class ConceptCatalog {
 public:
  ConceptCatalog() = default;

  // Throws kDuplicateId for a repeated id, kInvalidArgument for an empty
  // name.
  void Add(std::string id, std::string name);
  bool contains(std::string_view id) const;
  // Throws kUnknownConceptId.
  const std::string &name(std::string_view id) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::unordered_map<std::string, std::string> names_;
};

std::vector<DocumentRecord> ParseCorpus(std::string_view text,
                                        std::string_view source_name);
std::vector<DocumentRecord> LoadCorpus(const std::filesystem::path &path);
// Record ids must be unique; throws kDuplicateId otherwise.
void CheckUniqueRecordIds(const std::vector<DocumentRecord> &records);
std::string SerializeCorpus(const std::vector<DocumentRecord> &records);

ConceptCatalog ParseCatalog(std::string_view text,
                            std::string_view source_name);
ConceptCatalog LoadCatalog(const std::filesystem::path &path);

}  // namespace labelqa

#endif  // LABELQA_CORPUS_H_
