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

// Brute-force scorer for differential testing. Shares no code with the
// metrics module: chunks are found by enumerating every span and testing
// maximality, and the classification metric uses the set formulation.

#ifndef LABELQA_TESTS_SUPPORT_METRIC_ORACLE_H_
#define LABELQA_TESTS_SUPPORT_METRIC_ORACLE_H_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace labelqa::oracle {

using Rational = boost::rational<std::int64_t>;

struct Scores {
  Rational precision, recall, f1, accuracy;
  std::int64_t tp = 0, pred_count = 0, gold_count = 0;
};

// Segment as a half-open token range.
using SegmentRange = std::pair<std::size_t, std::size_t>;

inline Rational SafeDiv(std::int64_t a, std::int64_t b) {
  return b == 0 ? Rational(0) : Rational(a, b);
}

inline bool IsMaximalRun(const std::vector<bool> &on, std::size_t i,
                         std::size_t j) {
  for (std::size_t k = i; k < j; ++k) {
    if (!on[k]) return false;
  }
  if (i > 0 && on[i - 1]) return false;
  if (j < on.size() && on[j]) return false;
  return true;
}

inline std::set<SegmentRange> AllRuns(const std::vector<bool> &on) {
  std::set<SegmentRange> runs;
  for (std::size_t i = 0; i < on.size(); ++i) {
    for (std::size_t j = i + 1; j <= on.size(); ++j) {
      if (IsMaximalRun(on, i, j)) runs.insert({i, j});
    }
  }
  return runs;
}

inline Scores Finish(std::int64_t tp, std::int64_t np, std::int64_t ng,
                     std::int64_t correct, std::int64_t scored) {
  Scores s;
  s.tp = tp;
  s.pred_count = np;
  s.gold_count = ng;
  s.precision = SafeDiv(tp, np);
  s.recall = SafeDiv(tp, ng);
  const Rational sum = s.precision + s.recall;
  s.f1 = sum == Rational(0) ? Rational(0) : Rational(2) * s.precision * s.recall / sum;
  s.accuracy = scored == 0 ? Rational(1) : Rational(correct, scored);
  return s;
}

inline Scores Strict(const std::vector<int> &pred,
                     const std::vector<int> &gold) {
  const std::size_t n = gold.size();
  std::vector<bool> p(n), g(n);
  std::int64_t correct = 0, scored = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (gold[i] == -100) continue;
    p[i] = pred[i] == 1;
    g[i] = gold[i] == 1;
    ++scored;
    if ((p[i] ? 1 : 0) == gold[i]) ++correct;
  }
  const auto pr = AllRuns(p);
  const auto gr = AllRuns(g);
  std::int64_t tp = 0;
  for (const auto &r : pr) tp += gr.count(r);
  return Finish(tp, static_cast<std::int64_t>(pr.size()),
                static_cast<std::int64_t>(gr.size()), correct, scored);
}

inline Scores Classification(const std::vector<int> &pred,
                             const std::vector<int> &gold,
                             const std::vector<SegmentRange> &segments) {
  std::set<std::size_t> pred_segs, gold_segs;
  std::vector<bool> expanded(gold.size(), false);
  for (std::size_t s = 0; s < segments.size(); ++s) {
    bool any_pred = false, all_gold = true;
    for (std::size_t i = segments[s].first; i < segments[s].second; ++i) {
      any_pred = any_pred || pred[i] == 1;
      all_gold = all_gold && gold[i] == 1;
    }
    if (any_pred) {
      pred_segs.insert(s);
      for (std::size_t i = segments[s].first; i < segments[s].second; ++i) {
        expanded[i] = true;
      }
    }
    if (all_gold) gold_segs.insert(s);
  }
  std::int64_t tp = 0;
  for (std::size_t s : pred_segs) tp += gold_segs.count(s);
  std::int64_t correct = 0, scored = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == -100) continue;
    ++scored;
    if ((expanded[i] ? 1 : 0) == gold[i]) ++correct;
  }
  return Finish(tp, static_cast<std::int64_t>(pred_segs.size()),
                static_cast<std::int64_t>(gold_segs.size()), correct, scored);
}

}  // namespace labelqa::oracle

#endif  // LABELQA_TESTS_SUPPORT_METRIC_ORACLE_H_
