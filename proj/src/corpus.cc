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

#include "labelqa/corpus.h"

#include <unordered_set>

#include "labelqa/error.h"
#include "labelqa/io.h"

namespace labelqa {

void ConceptCatalog::Add(std::string id, std::string name) {
  if (name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty concept name for " + id);
  }
  auto [it, inserted] = names_.emplace(std::move(id), std::move(name));
  if (!inserted) throw Error(ErrorCode::kDuplicateId, it->first);
}

bool ConceptCatalog::contains(std::string_view id) const {
  return names_.count(std::string(id)) > 0;
}

const std::string &ConceptCatalog::name(std::string_view id) const {
  auto it = names_.find(std::string(id));
  if (it == names_.end()) {
    throw Error(ErrorCode::kUnknownConceptId, std::string(id));
  }
  return it->second;
}

std::vector<DocumentRecord> ParseCorpus(std::string_view text,
                                        std::string_view source_name) {
  std::vector<DocumentRecord> records;
  for (const JsonLine &line : ParseJsonLines(text, source_name)) {
    DocumentRecord r;
    r.record_id = RequireString(line, source_name, "celex_id");
    r.title = RequireString(line, source_name, "title");
    // The body is not used for building; tolerate its absence.
    if (auto it = line.value.find("text");
        it != line.value.end() && it->is_string()) {
      r.text = it->get<std::string>();
    }
    const Json &ids = RequireField(line, source_name, "eurovoc_concepts");
    if (!ids.is_array()) {
      throw Error(ErrorCode::kParse,
                  std::string(source_name) + ":" +
                      std::to_string(line.line_number) +
                      ": eurovoc_concepts must be a list");
    }
    for (const Json &id : ids) {
      if (!id.is_string()) {
        throw Error(ErrorCode::kParse,
                    std::string(source_name) + ":" +
                        std::to_string(line.line_number) +
                        ": concept ids must be strings");
      }
      r.concept_ids.push_back(id.get<std::string>());
    }
    records.push_back(std::move(r));
  }
  CheckUniqueRecordIds(records);
  return records;
}

void CheckUniqueRecordIds(const std::vector<DocumentRecord> &records) {
  std::unordered_set<std::string_view> seen;
  for (const DocumentRecord &r : records) {
    if (!seen.insert(r.record_id).second) {
      throw Error(ErrorCode::kDuplicateId, "record " + r.record_id);
    }
  }
}

std::vector<DocumentRecord> LoadCorpus(const std::filesystem::path &path) {
  return ParseCorpus(ReadFile(path), path.string());
}

std::string SerializeCorpus(const std::vector<DocumentRecord> &records) {
  std::string out;
  for (const DocumentRecord &r : records) {
    Json line;
    line["celex_id"] = r.record_id;
    line["title"] = r.title;
    line["text"] = r.text;
    line["eurovoc_concepts"] = r.concept_ids;
    out += line.dump();
    out += '\n';
  }
  return out;
}

ConceptCatalog ParseCatalog(std::string_view text,
                            std::string_view source_name) {
  ConceptCatalog catalog;
  for (const JsonLine &line : ParseJsonLines(text, source_name)) {
    catalog.Add(RequireString(line, source_name, "id"),
                RequireString(line, source_name, "title"));
  }
  return catalog;
}

ConceptCatalog LoadCatalog(const std::filesystem::path &path) {
  return ParseCatalog(ReadFile(path), path.string());
}

}  // namespace labelqa
