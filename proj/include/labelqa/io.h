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

#ifndef LABELQA_IO_H_
#define LABELQA_IO_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace labelqa {

// Key order of every JSON document we emit is insertion order, so output
// bytes depend only on the data.
using Json = nlohmann::ordered_json;

struct JsonLine {
  std::size_t line_number = 0;  // 1-based
  Json value;
};

// Parses one JSON object per non-blank line. Errors carry
// "<source>:<line>".
std::vector<JsonLine> ParseJsonLines(std::string_view text,
                                     std::string_view source_name);

std::string ReadFile(const std::filesystem::path &path);
std::vector<JsonLine> ReadJsonLines(const std::filesystem::path &path);

// Writes to a sibling temporary file and renames it over `path`. On failure
// the temporary is removed and `path` is left untouched.
void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view content);

// Typed field access with a located error message.
const Json &RequireField(const JsonLine &line, std::string_view source_name,
                         const char *key);
std::string RequireString(const JsonLine &line, std::string_view source_name,
                          const char *key);

}  // namespace labelqa

#endif  // LABELQA_IO_H_
