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

#include "labelqa/metrics.h"

#include <numeric>
#include <string>

#include "labelqa/error.h"

namespace labelqa {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad fraction");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::vector<Chunk> ExtractChunks(std::span<const int> tags) {
  std::vector<Chunk> chunks;
  std::size_t i = 0;
  while (i < tags.size()) {
    if (tags[i] != kConcept) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < tags.size() && tags[j] == kConcept) ++j;
    chunks.push_back({i, j});
    i = j;
  }
  return chunks;
}

std::string_view EvalModeName(EvalMode mode) {
  return mode == EvalMode::kStrict ? "strict" : "classification";
}

namespace {

Fraction Ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? Fraction() : Fraction(num, den);
}

void CheckTags(std::span<const int> tags, const char *which) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const int t = tags[i];
    if (t != kIgnore && t != kOutside && t != kConcept) {
      throw Error(ErrorCode::kInvalidTag,
                  std::string(which) + " tag " + std::to_string(t) +
                      " at position " + std::to_string(i));
    }
  }
}

// Prediction with gold-ignored positions masked and everything but 1 read
// as O.
std::vector<int> Normalize(std::span<const int> pred,
                           std::span<const int> gold) {
  if (pred.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(pred.size()) + " predicted vs " +
                    std::to_string(gold.size()) + " gold tags");
  }
  CheckTags(pred, "predicted");
  CheckTags(gold, "gold");
  std::vector<int> out(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    out[i] = gold[i] == kIgnore ? kIgnore
                                : (pred[i] == kConcept ? kConcept : kOutside);
  }
  return out;
}

EvalCounts CountNormalized(std::span<const int> pred,
                           std::span<const int> gold) {
  EvalCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == kIgnore) continue;
    ++c.scored;
    if (pred[i] == gold[i]) ++c.correct;
  }
  const auto p = ExtractChunks(pred);
  const auto g = ExtractChunks(gold);
  c.pred_count = static_cast<std::int64_t>(p.size());
  c.gold_count = static_cast<std::int64_t>(g.size());
  // Both lists are sorted by start and non-overlapping within themselves.
  std::size_t a = 0, b = 0;
  while (a < p.size() && b < g.size()) {
    if (p[a] == g[b]) {
      ++c.tp;
      ++a;
      ++b;
    } else if (p[a].start < g[b].start ||
               (p[a].start == g[b].start && p[a].end < g[b].end)) {
      ++a;
    } else {
      ++b;
    }
  }
  return c;
}

void CheckSegments(std::span<const int> gold,
                   std::span<const TokenSpan> segments) {
  std::size_t prev_end = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const TokenSpan &seg = segments[s];
    if (seg.start >= seg.end || seg.end > gold.size() ||
        (s > 0 && seg.start <= prev_end)) {
      throw Error(ErrorCode::kSegmentMismatch,
                  "segment " + std::to_string(s) +
                      " is empty, out of range, or touches its predecessor");
    }
    for (std::size_t i = seg.start; i < seg.end; ++i) {
      if (gold[i] == kIgnore) {
        throw Error(ErrorCode::kSegmentMismatch,
                    "segment " + std::to_string(s) +
                        " covers an ignored position");
      }
    }
    prev_end = seg.end;
  }
  std::size_t s = 0;
  for (const Chunk &c : ExtractChunks(gold)) {
    while (s < segments.size() && segments[s].end <= c.start) ++s;
    if (s == segments.size() || segments[s].start != c.start ||
        segments[s].end != c.end) {
      throw Error(ErrorCode::kSegmentMismatch,
                  "gold chunk [" + std::to_string(c.start) + ", " +
                      std::to_string(c.end) + ") is not a whole segment");
    }
  }
}

}  // namespace

Fraction EvalReport::precision() const {
  return Ratio(counts.tp, counts.pred_count);
}

Fraction EvalReport::recall() const {
  return Ratio(counts.tp, counts.gold_count);
}

Fraction EvalReport::f1() const {
  // 2PR/(P+R) with P = tp/pred and R = tp/gold reduces to 2tp/(pred+gold).
  if (counts.tp == 0) return Fraction();
  return Fraction(2 * counts.tp, counts.pred_count + counts.gold_count);
}

Fraction EvalReport::accuracy() const {
  return counts.scored == 0 ? Fraction(1, 1)
                            : Fraction(counts.correct, counts.scored);
}

Json EvalReport::ToJson() const {
  Json j;
  j["precision"] = precision().value();
  j["recall"] = recall().value();
  j["f1"] = f1().value();
  j["accuracy"] = accuracy().value();
  j["tp"] = counts.tp;
  j["pred_count"] = counts.pred_count;
  j["gold_count"] = counts.gold_count;
  j["correct"] = counts.correct;
  j["scored"] = counts.scored;
  return j;
}

EvalCounts CountStrict(std::span<const int> pred, std::span<const int> gold) {
  const std::vector<int> p = Normalize(pred, gold);
  return CountNormalized(p, gold);
}

std::vector<int> ExpandToSegments(std::span<const int> pred,
                                  std::span<const int> gold,
                                  std::span<const TokenSpan> segments) {
  std::vector<int> p = Normalize(pred, gold);
  CheckSegments(gold, segments);
  std::vector<int> expanded(p.size(), kOutside);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == kIgnore) expanded[i] = kIgnore;
  }
  for (const TokenSpan &seg : segments) {
    bool hit = false;
    for (std::size_t i = seg.start; i < seg.end && !hit; ++i) {
      hit = p[i] == kConcept;
    }
    if (!hit) continue;
    for (std::size_t i = seg.start; i < seg.end; ++i) expanded[i] = kConcept;
  }
  return expanded;
}

EvalCounts CountClassification(std::span<const int> pred,
                               std::span<const int> gold,
                               std::span<const TokenSpan> segments) {
  const std::vector<int> expanded = ExpandToSegments(pred, gold, segments);
  return CountNormalized(expanded, gold);
}

EvalReport EvaluateStrict(const TagSequence &pred, const TagSequence &gold) {
  return {EvalMode::kStrict, CountStrict(pred.tags, gold.tags)};
}

EvalReport EvaluateClassification(const TagSequence &pred,
                                  const TagSequence &gold,
                                  std::span<const TokenSpan> segments) {
  return {EvalMode::kClassification,
          CountClassification(pred.tags, gold.tags, segments)};
}

}  // namespace labelqa
