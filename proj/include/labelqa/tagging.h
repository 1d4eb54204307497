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

#ifndef LABELQA_TAGGING_H_
#define LABELQA_TAGGING_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "labelqa/dataset_builder.h"
#include "labelqa/io.h"

namespace labelqa {

// Tag alphabet. kIgnore positions are excluded from loss and scoring.
inline constexpr int kIgnore = -100;
inline constexpr int kOutside = 0;
inline constexpr int kConcept = 1;

struct WordToken {
  std::string text;
  std::size_t start = 0;  // byte offsets, end exclusive
  std::size_t end = 0;

  friend bool operator==(const WordToken &, const WordToken &) = default;
};

// Splits on ASCII whitespace; every ASCII punctuation character is a token
// of its own. Non-ASCII bytes are word characters.
std::vector<WordToken> WordTokenize(std::string_view s);

struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const TokenSpan &, const TokenSpan &) = default;
};

// Word-level tags over sentence1 ++ sentence2. Spans live in the combined
// text sentence1 + ' ' + sentence2, i.e. sentence2 offsets are shifted by
// |sentence1| + 1.
struct TagSequence {
  std::vector<std::string> tokens;
  std::vector<int> tags;
  std::size_t sentence1_len = 0;
  std::vector<TokenSpan> spans;

  std::size_t size() const { return tags.size(); }
};

std::size_t Sentence2Offset(std::string_view sentence1);

TagSequence TagSample(const BuiltSample &sample);

// Token index range [start, end) of each segment of `list` within `seq`,
// which must be the tagging of a sample whose sentence2 is list.rendered.
std::vector<TokenSpan> SegmentTokenRanges(const TagSequence &seq,
                                          const CategoriesList &list);

enum class AlignStrategy { kFirstSubtokenOnly, kAllSubtokens };
enum class OverflowPolicy { kReject, kTruncateAndFlag };

struct AlignmentRule {
  AlignStrategy strategy = AlignStrategy::kAllSubtokens;
  std::size_t max_len = 512;
  OverflowPolicy overflow = OverflowPolicy::kTruncateAndFlag;
};

// Subword span in the combined coordinates of TagSequence::spans.
struct SubtokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool is_special = false;
};

struct AlignedLabels {
  std::vector<int> labels;
  bool truncated = false;
};

// Projects word tags onto subtokens. Special subtokens, sentence1 subtokens
// and subtokens covering no word get kIgnore. Throws kOverflow under
// OverflowPolicy::kReject when there are more than max_len subtokens.
AlignedLabels AlignToSubtokens(const TagSequence &seq,
                               std::span<const SubtokenSpan> subtokens,
                               const AlignmentRule &rule,
                               std::string_view sample_id = {});

// Majority vote of subtoken predictions per sentence2 word, ties -> 1.
// Words no subtoken reaches (truncation) get 0; sentence1 words kIgnore.
std::vector<int> ProjectToWords(const TagSequence &seq,
                                std::span<const SubtokenSpan> subtokens,
                                std::span<const int> subtoken_predictions);

struct TaggedSample {
  BuiltSample sample;
  TagSequence sequence;
};

TaggedSample MakeTaggedSample(BuiltSample sample);
// Built-sample keys plus tokens, tags, sentence1_len.
Json TaggedSampleToJson(const TaggedSample &tagged);
// Rejects files whose tokens/tags disagree with re-tagging the sample.
TaggedSample TaggedSampleFromJson(const Json &json, std::string_view where);

}  // namespace labelqa

#endif  // LABELQA_TAGGING_H_
