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

#include "labelqa/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "labelqa/error.h"
#include "labelqa/text.h"

namespace labelqa {

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<JsonLine> ParseJsonLines(std::string_view text,
                                     std::string_view source_name) {
  std::vector<JsonLine> lines;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;

    bool blank = true;
    for (char c : line) {
      if (!IsAsciiSpace(c)) {
        blank = false;
        break;
      }
    }
    if (blank) continue;

    Json value = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) {
      throw Error(ErrorCode::kParse, std::string(source_name) + ":" +
                                         std::to_string(line_number) +
                                         ": malformed JSON");
    }
    if (!value.is_object()) {
      throw Error(ErrorCode::kParse, std::string(source_name) + ":" +
                                         std::to_string(line_number) +
                                         ": expected a JSON object");
    }
    lines.push_back({line_number, std::move(value)});
  }
  return lines;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path.string());
  return buffer.str();
}

std::vector<JsonLine> ReadJsonLines(const std::filesystem::path &path) {
  return ParseJsonLines(ReadFile(path), path.string());
}

void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error(ErrorCode::kIo, "cannot create directory " +
                                      path.parent_path().string() + ": " +
                                      ec.message());
    }
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw Error(ErrorCode::kIo, "write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw Error(ErrorCode::kIo,
                "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

const Json &RequireField(const JsonLine &line, std::string_view source_name,
                         const char *key) {
  auto it = line.value.find(key);
  if (it == line.value.end()) {
    throw Error(ErrorCode::kParse, std::string(source_name) + ":" +
                                       std::to_string(line.line_number) +
                                       ": missing key '" + key + "'");
  }
  return *it;
}

std::string RequireString(const JsonLine &line, std::string_view source_name,
                          const char *key) {
  const Json &v = RequireField(line, source_name, key);
  if (!v.is_string()) {
    throw Error(ErrorCode::kParse, std::string(source_name) + ":" +
                                       std::to_string(line.line_number) +
                                       ": key '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace labelqa
