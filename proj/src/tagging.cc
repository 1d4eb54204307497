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

#include "labelqa/tagging.h"

#include <algorithm>
#include <cstdint>

#include "labelqa/error.h"
#include "labelqa/text.h"

namespace labelqa {

std::vector<WordToken> WordTokenize(std::string_view s) {
  std::vector<WordToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (IsAsciiSpace(s[i])) {
      ++i;
    } else if (IsAsciiPunct(s[i])) {
      out.push_back({std::string(1, s[i]), i, i + 1});
      ++i;
    } else {
      std::size_t j = i;
      while (j < s.size() && !IsAsciiSpace(s[j]) && !IsAsciiPunct(s[j])) ++j;
      out.push_back({std::string(s.substr(i, j - i)), i, j});
      i = j;
    }
  }
  return out;
}

std::size_t Sentence2Offset(std::string_view sentence1) {
  return sentence1.size() + 1;
}

TagSequence TagSample(const BuiltSample &sample) {
  TagSequence seq;
  for (WordToken &w : WordTokenize(sample.sentence1)) {
    seq.tokens.push_back(std::move(w.text));
    seq.tags.push_back(kIgnore);
    seq.spans.push_back({w.start, w.end});
  }
  seq.sentence1_len = seq.tokens.size();

  const std::size_t shift = Sentence2Offset(sample.sentence1);
  for (WordToken &w : WordTokenize(sample.sentence2)) {
    bool inside = false;
    for (const Segment &g : sample.gold) {
      if (g.start <= w.start && w.end <= g.end) {
        inside = true;
        break;
      }
    }
    seq.tokens.push_back(std::move(w.text));
    seq.tags.push_back(inside ? kConcept : kOutside);
    seq.spans.push_back({w.start + shift, w.end + shift});
  }
  return seq;
}

std::vector<TokenSpan> SegmentTokenRanges(const TagSequence &seq,
                                          const CategoriesList &list) {
  const auto words = WordTokenize(list.rendered);
  if (words.size() != seq.size() - seq.sentence1_len) {
    throw Error(ErrorCode::kSegmentMismatch,
                "categories list does not match the tagged sentence2");
  }
  // Segments and words are both sorted by offset; walk them together.
  std::vector<TokenSpan> ranges;
  ranges.reserve(list.segments.size());
  std::size_t k = 0;
  for (const Segment &seg : list.segments) {
    while (k < words.size() && words[k].start < seg.start) ++k;
    const std::size_t first = k;
    while (k < words.size() && words[k].end <= seg.end) ++k;
    if (k == first) {
      throw Error(ErrorCode::kSegmentMismatch,
                  "segment '" + seg.name + "' covers no token");
    }
    ranges.push_back({seq.sentence1_len + first, seq.sentence1_len + k});
  }
  return ranges;
}

namespace {

constexpr std::size_t kNoWord = static_cast<std::size_t>(-1);

// Index of the first word overlapping the subtoken, or kNoWord.
std::size_t WordFor(const TagSequence &seq, const SubtokenSpan &sub) {
  if (sub.end <= sub.start) return kNoWord;
  auto it = std::upper_bound(
      seq.spans.begin(), seq.spans.end(), sub.start,
      [](std::size_t pos, const TokenSpan &w) { return pos < w.end; });
  if (it == seq.spans.end() || it->start >= sub.end) return kNoWord;
  return static_cast<std::size_t>(it - seq.spans.begin());
}

}  // namespace

AlignedLabels AlignToSubtokens(const TagSequence &seq,
                               std::span<const SubtokenSpan> subtokens,
                               const AlignmentRule &rule,
                               std::string_view sample_id) {
  if (rule.max_len == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_len must be positive");
  }
  if (subtokens.size() > rule.max_len &&
      rule.overflow == OverflowPolicy::kReject) {
    throw Error(ErrorCode::kOverflow,
                std::string(sample_id) + " (" +
                    std::to_string(subtokens.size()) + " subtokens > " +
                    std::to_string(rule.max_len) + ")");
  }

  AlignedLabels out;
  out.labels.reserve(subtokens.size());
  std::size_t previous_word = kNoWord;
  for (const SubtokenSpan &sub : subtokens) {
    if (sub.is_special) {
      out.labels.push_back(kIgnore);
      previous_word = kNoWord;
      continue;
    }
    const std::size_t w = WordFor(seq, sub);
    if (w == kNoWord || w < seq.sentence1_len) {
      out.labels.push_back(kIgnore);
    } else if (rule.strategy == AlignStrategy::kFirstSubtokenOnly &&
               w == previous_word) {
      out.labels.push_back(kIgnore);
    } else {
      out.labels.push_back(seq.tags[w]);
    }
    previous_word = w;
  }
  if (out.labels.size() > rule.max_len) {
    out.labels.resize(rule.max_len);
    out.truncated = true;
  }
  return out;
}

std::vector<int> ProjectToWords(const TagSequence &seq,
                                std::span<const SubtokenSpan> subtokens,
                                std::span<const int> subtoken_predictions) {
  if (subtoken_predictions.size() > subtokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "more predictions than subtokens");
  }
  std::vector<std::size_t> votes_for(seq.size(), 0);
  std::vector<std::size_t> votes_total(seq.size(), 0);
  for (std::size_t i = 0; i < subtoken_predictions.size(); ++i) {
    if (subtokens[i].is_special) continue;
    const std::size_t w = WordFor(seq, subtokens[i]);
    if (w == kNoWord) continue;
    ++votes_total[w];
    if (subtoken_predictions[i] == kConcept) ++votes_for[w];
  }
  std::vector<int> words(seq.size(), kOutside);
  for (std::size_t w = 0; w < seq.size(); ++w) {
    if (w < seq.sentence1_len) {
      words[w] = kIgnore;
    } else if (votes_total[w] > 0 && 2 * votes_for[w] >= votes_total[w]) {
      words[w] = kConcept;
    }
  }
  return words;
}

TaggedSample MakeTaggedSample(BuiltSample sample) {
  TaggedSample t;
  t.sequence = TagSample(sample);
  t.sample = std::move(sample);
  return t;
}

Json TaggedSampleToJson(const TaggedSample &tagged) {
  Json j = BuiltSampleToJson(tagged.sample);
  j["tokens"] = tagged.sequence.tokens;
  j["tags"] = tagged.sequence.tags;
  j["sentence1_len"] = tagged.sequence.sentence1_len;
  return j;
}

TaggedSample TaggedSampleFromJson(const Json &json, std::string_view where) {
  TaggedSample t = MakeTaggedSample(BuiltSampleFromJson(json, where));
  auto tokens = json.find("tokens");
  auto tags = json.find("tags");
  auto s1 = json.find("sentence1_len");
  if (tokens == json.end() || tags == json.end() || s1 == json.end() ||
      !tokens->is_array() || !tags->is_array() ||
      !s1->is_number_unsigned()) {
    throw Error(ErrorCode::kParse,
                std::string(where) + ": missing tokens/tags/sentence1_len");
  }
  bool same = false;
  try {
    same = tokens->get<std::vector<std::string>>() == t.sequence.tokens &&
           tags->get<std::vector<int>>() == t.sequence.tags &&
           s1->get<std::size_t>() == t.sequence.sentence1_len;
  } catch (const nlohmann::json::exception &) {
    same = false;
  }
  if (!same) {
    throw Error(ErrorCode::kParse,
                std::string(where) +
                    ": tokens/tags disagree with the sample's gold spans");
  }
  return t;
}

}  // namespace labelqa
