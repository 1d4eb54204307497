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

#ifndef LABELQA_METRICS_H_
#define LABELQA_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "labelqa/io.h"
#include "labelqa/tagging.h"

namespace labelqa {

// Exact non-negative ratio, kept in lowest terms.
class Fraction {
 public:
  Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const Fraction &, const Fraction &) = default;
  friend bool operator<(const Fraction &a, const Fraction &b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Fraction &a, const Fraction &b) {
    return !(b < a);
  }
  friend bool operator>=(const Fraction &a, const Fraction &b) {
    return !(a < b);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A maximal run of kConcept tags; end is exclusive.
struct Chunk {
  std::size_t start = 0;
  std::size_t end = 0;

  static constexpr std::string_view label() { return "CONCEPT"; }
  friend bool operator==(const Chunk &, const Chunk &) = default;
};

// Runs never cross a kOutside or kIgnore position.
std::vector<Chunk> ExtractChunks(std::span<const int> tags);
inline std::vector<Chunk> ExtractChunks(const TagSequence &seq) {
  return ExtractChunks(seq.tags);
}

enum class EvalMode { kStrict, kClassification };
std::string_view EvalModeName(EvalMode mode);

struct EvalCounts {
  std::int64_t tp = 0;
  std::int64_t pred_count = 0;
  std::int64_t gold_count = 0;
  std::int64_t correct = 0;  // scored positions with pred == gold
  std::int64_t scored = 0;   // positions with gold != kIgnore

  EvalCounts &operator+=(const EvalCounts &o) {
    tp += o.tp;
    pred_count += o.pred_count;
    gold_count += o.gold_count;
    correct += o.correct;
    scored += o.scored;
    return *this;
  }
  friend bool operator==(const EvalCounts &, const EvalCounts &) = default;
};

// Ratios with the zero-denominator convention: P, R and F are 0 when their
// denominator is 0. Accuracy is 1 when nothing is scored.
struct EvalReport {
  EvalMode mode = EvalMode::kStrict;
  EvalCounts counts;

  Fraction precision() const;
  Fraction recall() const;
  Fraction f1() const;
  Fraction accuracy() const;

  Json ToJson() const;
};

// Strict chunk matching. Positions where gold is kIgnore are ignored in
// pred too; elsewhere a prediction of 1 is I-CONCEPT and anything else O.
// Throws kLengthMismatch, kInvalidTag.
EvalCounts CountStrict(std::span<const int> pred, std::span<const int> gold);

// Boundary expansion: every segment touched by a predicted 1 becomes a
// fully predicted chunk and everything else O, then strict matching runs on
// the expanded tags. Segments are token ranges: sorted, non-empty,
// separated by at least one position and free of kIgnore positions. Every
// gold chunk must equal a segment. Throws kLengthMismatch, kInvalidTag,
// kSegmentMismatch.
EvalCounts CountClassification(std::span<const int> pred,
                               std::span<const int> gold,
                               std::span<const TokenSpan> segments);

// The expanded prediction used by CountClassification.
std::vector<int> ExpandToSegments(std::span<const int> pred,
                                  std::span<const int> gold,
                                  std::span<const TokenSpan> segments);

EvalReport EvaluateStrict(const TagSequence &pred, const TagSequence &gold);
EvalReport EvaluateClassification(const TagSequence &pred,
                                  const TagSequence &gold,
                                  std::span<const TokenSpan> segments);

}  // namespace labelqa

#endif  // LABELQA_METRICS_H_
